#pragma once

// Reduction from restricted 3SAT (every variable at most three times, at
// most twice per polarity, clauses of two or three literals) to weak-SSNM
// existence with lists of length at most two and ties only on the men's
// side.
//
// Layout from top to bottom: one variable gadget per variable, the
// separator pair (s, t), then the clause gadgets with all 2-clauses before
// all 3-clauses. The separator forces every gadget to match internally.
//
// Variable gadget x_i, men   p1 p3 a1 a2 p2 p4, women q1 q3 q2 q4:
//   p1: q1 z(1st neg)   a1: (q1 q2)   p2: q2 z(1st pos)
//   p3: q3 z(2nd neg)   a2: (q3 q4)   p4: q4 z(2nd pos)
//   q1: a1 p1   q2: a1 p2   q3: a2 p3   q4: a2 p4
// x_i = 0 picks {p1q1, a1q2, p3q3, a2q4}; x_i = 1 picks {a1q1, p2q2, a2q3,
// p4q4}. The crossing between the two halves keeps them consistent.
//
// 2-clause: man y, women z1 z2.  y: (z1 z2); z_k: y p(literal k).
// 3-clause: men y1..y7, women v1 v2 v3 z1 z2 v4 v5 v6 z3.
//   y1: (v1 v3)  y2: (v2 z1)  y3: (v3 v4)  y4: (z2 v5)  y5: (v4 v6)
//   y6: (v5 z3)  y7: v6
//   v1: y1  v2: y2  v3: y1 y3  v4: y5 y3  v5: y6 y4  v6: y5 y7
//   z_k: y_(2k) p(literal k)
// Every weak-SSNM leaves at least one z per clause unmatched; the literal
// behind it must be true or its p-man would block with it.

#include <array>
#include <string>
#include <vector>

#include "ncsm/core.hpp"

namespace ncsm {

// Literals are signed 1-based variable indices.
struct CnfFormula {
  int n_vars = 0;
  std::vector<std::vector<int>> clauses;

  bool operator==(const CnfFormula&) const = default;
};

// assignment[i - 1] is the value of x_i.
using Assignment = std::vector<bool>;

bool evaluate(const CnfFormula& formula, const Assignment& assignment);

class InvalidFormula : public std::runtime_error {
 public:
  InvalidFormula(const std::string& what, std::vector<std::string> violations)
      : std::runtime_error(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Every violation of the restricted form, one message each. Empty if ok.
std::vector<std::string> validate_tovey(const CnfFormula& formula);

// Clause index and literal position (1-based, gadget order). Zero = absent.
struct Occurrence {
  int clause = 0;
  int literal = 0;
  bool present() const { return clause != 0; }
};

struct VariableGadget {
  std::array<int, 4> p{};  // men p_{i,1..4}
  std::array<int, 2> a{};  // men a_{i,1..2}
  std::array<int, 4> q{};  // women q_{i,1..4}
  std::array<Occurrence, 2> positive{};  // 1st and 2nd positive occurrence
  std::array<Occurrence, 2> negative{};
};

struct ClauseGadget {
  int original_index = 0;    // 1-based position in the input formula
  std::vector<int> literals;
  std::vector<int> y;        // men: 1 for a 2-clause, 7 for a 3-clause
  std::vector<int> v;        // women v_{j,1..6}, 3-clauses only
  std::vector<int> z;        // women z_{j,1..k}
  std::vector<int> ell;      // which p-man of the literal's variable, 1..4
};

struct GadgetPlan {
  CnfFormula formula;             // as given, original clause order
  std::vector<int> clause_order;  // gadget clause j (0-based) -> original
  std::vector<VariableGadget> variables;
  std::vector<ClauseGadget> clauses;  // gadget order
  int separator_man = 0;
  int separator_woman = 0;
  int n_two_clauses = 0;
  int n_three_clauses = 0;
  int core_men = 0;    // before dummy padding
  int core_women = 0;
  int dummy_men = 0;
  int dummy_women = 0;

  // M_{i,0} or M_{i,1} for variable i (1-based).
  std::vector<Pair> variable_matching(int var, bool value) const;
  // N_{j,k} for gadget clause j (1-based) and literal k (1-based).
  std::vector<Pair> clause_matching(int clause, int k) const;
  // The z-women of gadget clause j.
  const std::vector<int>& z_women(int clause) const {
    return clauses.at(static_cast<std::size_t>(clause) - 1).z;
  }
};

struct GadgetInstance {
  Instance instance;
  GadgetPlan plan;
};

// Throws InvalidFormula listing every violation.
GadgetInstance build_gadget_instance(const CnfFormula& formula);

// witness[c] names the satisfied literal (1-based position) of original
// clause c. Throws ContractViolation when that literal is false.
Matching matching_from_assignment(const GadgetInstance& gadget,
                                  const Assignment& assignment,
                                  const std::vector<int>& witness);
// Picks the first true literal of every clause.
Matching matching_from_assignment(const GadgetInstance& gadget,
                                  const Assignment& assignment);

// Reads each variable off the canonical sub-matching its gadget contains.
// Throws ContractViolation("input is not a weak-SSNM") when neither is.
Assignment assignment_from_matching(const GadgetPlan& plan,
                                    const Matching& matching);

}  // namespace ncsm
