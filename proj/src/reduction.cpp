#include "ncsm/reduction.hpp"

#include <algorithm>
#include <cstdlib>

namespace ncsm {

bool evaluate(const CnfFormula& formula, const Assignment& assignment) {
  if (static_cast<int>(assignment.size()) < formula.n_vars) {
    throw ContractViolation("assignment is shorter than the variable count");
  }
  return std::all_of(
      formula.clauses.begin(), formula.clauses.end(),
      [&](const std::vector<int>& clause) {
        return std::any_of(clause.begin(), clause.end(), [&](int lit) {
          return assignment[std::abs(lit) - 1] == (lit > 0);
        });
      });
}

std::vector<std::string> validate_tovey(const CnfFormula& formula) {
  std::vector<std::string> out;
  if (formula.n_vars < 0) out.push_back("negative variable count");
  std::vector<int> pos(static_cast<std::size_t>(std::max(formula.n_vars, 0)) + 1, 0);
  std::vector<int> neg(pos.size(), 0);
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const auto& clause = formula.clauses[c];
    const std::string name = "clause " + std::to_string(c + 1);
    if (clause.size() < 2 || clause.size() > 3) {
      out.push_back(name + " has " + std::to_string(clause.size()) +
                    " literals (need 2 or 3)");
    }
    for (std::size_t k = 0; k < clause.size(); ++k) {
      const int lit = clause[k];
      const int var = std::abs(lit);
      if (lit == 0 || var > formula.n_vars) {
        out.push_back(name + " mentions variable " + std::to_string(var) +
                      " outside 1.." + std::to_string(formula.n_vars));
        continue;
      }
      if (std::find(clause.begin(), clause.begin() + k, lit) !=
          clause.begin() + k) {
        out.push_back(name + " repeats literal " + std::to_string(lit));
        continue;
      }
      ++(lit > 0 ? pos : neg)[var];
    }
  }
  for (int v = 1; v <= formula.n_vars; ++v) {
    const std::string name = "variable x" + std::to_string(v);
    if (pos[v] + neg[v] > 3) {
      out.push_back(name + " occurs " + std::to_string(pos[v] + neg[v]) +
                    " times (at most 3)");
    }
    if (pos[v] > 2) {
      out.push_back(name + " occurs positively " + std::to_string(pos[v]) +
                    " times (at most 2)");
    }
    if (neg[v] > 2) {
      out.push_back(name + " occurs negatively " + std::to_string(neg[v]) +
                    " times (at most 2)");
    }
  }
  return out;
}

std::vector<Pair> GadgetPlan::variable_matching(int var, bool value) const {
  const VariableGadget& g = variables.at(static_cast<std::size_t>(var) - 1);
  if (!value) {
    return {{g.p[0], g.q[0]}, {g.a[0], g.q[1]}, {g.p[2], g.q[2]}, {g.a[1], g.q[3]}};
  }
  return {{g.a[0], g.q[0]}, {g.p[1], g.q[1]}, {g.a[1], g.q[2]}, {g.p[3], g.q[3]}};
}

std::vector<Pair> GadgetPlan::clause_matching(int clause, int k) const {
  const ClauseGadget& g = clauses.at(static_cast<std::size_t>(clause) - 1);
  if (k < 1 || k > static_cast<int>(g.literals.size())) {
    throw ContractViolation("clause " + std::to_string(clause) +
                            " has no literal " + std::to_string(k));
  }
  if (g.literals.size() == 2) {
    // Only z_k stays single.
    return {{g.y[0], g.z[k == 1 ? 1 : 0]}};
  }
  auto y = [&](int idx) { return g.y[idx - 1]; };
  auto v = [&](int idx) { return g.v[idx - 1]; };
  auto z = [&](int idx) { return g.z[idx - 1]; };
  switch (k) {
    case 1:
      return {{y(1), v(1)}, {y(2), v(2)}, {y(3), v(3)},
              {y(4), z(2)}, {y(5), v(6)}, {y(6), z(3)}};
    case 2:
      return {{y(1), v(3)}, {y(2), z(1)}, {y(3), v(4)},
              {y(4), v(5)}, {y(5), v(6)}, {y(6), z(3)}};
    default:
      return {{y(1), v(3)}, {y(2), z(1)}, {y(4), z(2)},
              {y(5), v(4)}, {y(6), v(5)}, {y(7), v(6)}};
  }
}

GadgetInstance build_gadget_instance(const CnfFormula& formula) {
  if (auto violations = validate_tovey(formula); !violations.empty()) {
    throw InvalidFormula("formula is not in restricted 3SAT form",
                         std::move(violations));
  }

  GadgetPlan plan;
  plan.formula = formula;
  const int n = formula.n_vars;
  const int m = static_cast<int>(formula.clauses.size());
  for (int c = 0; c < m; ++c) {
    if (formula.clauses[c].size() == 2) plan.clause_order.push_back(c);
  }
  plan.n_two_clauses = static_cast<int>(plan.clause_order.size());
  for (int c = 0; c < m; ++c) {
    if (formula.clauses[c].size() == 3) plan.clause_order.push_back(c);
  }
  plan.n_three_clauses = m - plan.n_two_clauses;

  // Positions, top to bottom.
  int next_man = 1;
  int next_woman = 1;
  plan.variables.resize(static_cast<std::size_t>(n));
  for (VariableGadget& g : plan.variables) {
    g.p[0] = next_man++;
    g.p[2] = next_man++;
    g.a[0] = next_man++;
    g.a[1] = next_man++;
    g.p[1] = next_man++;
    g.p[3] = next_man++;
    g.q[0] = next_woman++;
    g.q[2] = next_woman++;
    g.q[1] = next_woman++;
    g.q[3] = next_woman++;
  }
  plan.separator_man = next_man++;
  plan.separator_woman = next_woman++;
  for (int j = 0; j < m; ++j) {
    ClauseGadget g;
    const int original = plan.clause_order[j];
    g.original_index = original + 1;
    g.literals = formula.clauses[original];
    if (g.literals.size() == 2) {
      g.y = {next_man++};
      g.z = {next_woman, next_woman + 1};
      next_woman += 2;
    } else {
      for (int k = 0; k < 7; ++k) g.y.push_back(next_man++);
      const int base = next_woman;
      g.v = {base, base + 1, base + 2, base + 5, base + 6, base + 7};
      g.z = {base + 3, base + 4, base + 8};
      next_woman += 9;
    }
    plan.clauses.push_back(std::move(g));
  }
  plan.core_men = next_man - 1;
  plan.core_women = next_woman - 1;
  const int side = std::max(plan.core_men, plan.core_women);
  plan.dummy_men = side - plan.core_men;
  plan.dummy_women = side - plan.core_women;

  // Occurrences in gadget clause order, then literal position.
  std::vector<int> pos_seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> neg_seen(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j < m; ++j) {
    ClauseGadget& g = plan.clauses[j];
    for (std::size_t k = 0; k < g.literals.size(); ++k) {
      const int lit = g.literals[k];
      VariableGadget& vg = plan.variables[std::abs(lit) - 1];
      const Occurrence occ{j + 1, static_cast<int>(k) + 1};
      if (lit > 0) {
        const int nth = pos_seen[lit]++;
        vg.positive[nth] = occ;
        g.ell.push_back(nth == 0 ? 2 : 4);
      } else {
        const int nth = neg_seen[-lit]++;
        vg.negative[nth] = occ;
        g.ell.push_back(nth == 0 ? 1 : 3);
      }
    }
  }

  std::vector<PreferenceList> men(static_cast<std::size_t>(side));
  std::vector<PreferenceList> women(static_cast<std::size_t>(side));
  auto man = [&](int idx) -> PreferenceList& { return men[idx - 1]; };
  auto woman = [&](int idx) -> PreferenceList& { return women[idx - 1]; };
  auto z_of = [&](const Occurrence& occ) {
    return plan.clauses[occ.clause - 1].z[occ.literal - 1];
  };
  // p-man list: own q first, then the z-woman of the matching occurrence.
  auto p_list = [&](int q, const Occurrence& occ) {
    PreferenceList list{{q}};
    if (occ.present()) list.push_back({z_of(occ)});
    return list;
  };

  for (const VariableGadget& g : plan.variables) {
    man(g.p[0]) = p_list(g.q[0], g.negative[0]);
    man(g.p[1]) = p_list(g.q[1], g.positive[0]);
    man(g.p[2]) = p_list(g.q[2], g.negative[1]);
    man(g.p[3]) = p_list(g.q[3], g.positive[1]);
    man(g.a[0]) = {{g.q[0], g.q[1]}};
    man(g.a[1]) = {{g.q[2], g.q[3]}};
    woman(g.q[0]) = {{g.a[0]}, {g.p[0]}};
    woman(g.q[1]) = {{g.a[0]}, {g.p[1]}};
    woman(g.q[2]) = {{g.a[1]}, {g.p[2]}};
    woman(g.q[3]) = {{g.a[1]}, {g.p[3]}};
  }
  man(plan.separator_man) = {{plan.separator_woman}};
  woman(plan.separator_woman) = {{plan.separator_man}};

  for (const ClauseGadget& g : plan.clauses) {
    auto p_of_literal = [&](std::size_t k) {
      const VariableGadget& vg = plan.variables[std::abs(g.literals[k]) - 1];
      return vg.p[g.ell[k] - 1];
    };
    if (g.literals.size() == 2) {
      man(g.y[0]) = {{g.z[0], g.z[1]}};
      for (std::size_t k = 0; k < 2; ++k) {
        woman(g.z[k]) = {{g.y[0]}, {p_of_literal(k)}};
      }
      continue;
    }
    auto y = [&](int idx) { return g.y[idx - 1]; };
    auto v = [&](int idx) { return g.v[idx - 1]; };
    auto z = [&](int idx) { return g.z[idx - 1]; };
    man(y(1)) = {{v(1), v(3)}};
    man(y(2)) = {{v(2), z(1)}};
    man(y(3)) = {{v(3), v(4)}};
    man(y(4)) = {{z(2), v(5)}};
    man(y(5)) = {{v(4), v(6)}};
    man(y(6)) = {{v(5), z(3)}};
    man(y(7)) = {{v(6)}};
    woman(v(1)) = {{y(1)}};
    woman(v(2)) = {{y(2)}};
    woman(v(3)) = {{y(1)}, {y(3)}};
    woman(v(4)) = {{y(5)}, {y(3)}};
    woman(v(5)) = {{y(6)}, {y(4)}};
    woman(v(6)) = {{y(5)}, {y(7)}};
    for (std::size_t k = 0; k < 3; ++k) {
      woman(g.z[k]) = {{y(2 * static_cast<int>(k) + 2)}, {p_of_literal(k)}};
    }
  }

  return GadgetInstance{Instance(std::move(men), std::move(women)),
                        std::move(plan)};
}

Matching matching_from_assignment(const GadgetInstance& gadget,
                                  const Assignment& assignment,
                                  const std::vector<int>& witness) {
  const GadgetPlan& plan = gadget.plan;
  if (static_cast<int>(assignment.size()) < plan.formula.n_vars) {
    throw ContractViolation("assignment is shorter than the variable count");
  }
  if (witness.size() != plan.formula.clauses.size()) {
    throw ContractViolation("need one witness literal per clause");
  }
  std::vector<Pair> pairs;
  for (int i = 1; i <= plan.formula.n_vars; ++i) {
    auto sub = plan.variable_matching(i, assignment[i - 1]);
    pairs.insert(pairs.end(), sub.begin(), sub.end());
  }
  for (int j = 1; j <= static_cast<int>(plan.clauses.size()); ++j) {
    const ClauseGadget& g = plan.clauses[j - 1];
    const int k = witness[g.original_index - 1];
    if (k < 1 || k > static_cast<int>(g.literals.size())) {
      throw ContractViolation("witness for clause " +
                              std::to_string(g.original_index) +
                              " is out of range");
    }
    const int lit = g.literals[k - 1];
    if (assignment[std::abs(lit) - 1] != (lit > 0)) {
      throw ContractViolation("witness literal " + std::to_string(k) +
                              " of clause " + std::to_string(g.original_index) +
                              " is false under the assignment");
    }
    auto sub = plan.clause_matching(j, k);
    pairs.insert(pairs.end(), sub.begin(), sub.end());
  }
  pairs.push_back({plan.separator_man, plan.separator_woman});
  return Matching(gadget.instance, std::move(pairs));
}

Matching matching_from_assignment(const GadgetInstance& gadget,
                                  const Assignment& assignment) {
  const CnfFormula& f = gadget.plan.formula;
  if (static_cast<int>(assignment.size()) < f.n_vars) {
    throw ContractViolation("assignment is shorter than the variable count");
  }
  std::vector<int> witness;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    int chosen = 0;
    for (std::size_t k = 0; k < clause.size() && chosen == 0; ++k) {
      if (assignment[std::abs(clause[k]) - 1] == (clause[k] > 0)) {
        chosen = static_cast<int>(k) + 1;
      }
    }
    if (chosen == 0) {
      throw ContractViolation("clause " + std::to_string(c + 1) +
                              " is not satisfied by the assignment");
    }
    witness.push_back(chosen);
  }
  return matching_from_assignment(gadget, assignment, witness);
}

Assignment assignment_from_matching(const GadgetPlan& plan,
                                    const Matching& matching) {
  auto contains_all = [&](const std::vector<Pair>& sub) {
    return std::all_of(sub.begin(), sub.end(),
                       [&](Pair p) { return matching.contains(p); });
  };
  Assignment out(static_cast<std::size_t>(plan.formula.n_vars), false);
  for (int i = 1; i <= plan.formula.n_vars; ++i) {
    if (contains_all(plan.variable_matching(i, false))) {
      out[i - 1] = false;
    } else if (contains_all(plan.variable_matching(i, true))) {
      out[i - 1] = true;
    } else {
      throw ContractViolation("input is not a weak-SSNM: variable gadget x" +
                              std::to_string(i) +
                              " holds neither canonical sub-matching");
    }
  }
  return out;
}

}  // namespace ncsm
