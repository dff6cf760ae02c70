#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "ncsm/oracle.hpp"
#include "ncsm/reduction.hpp"
#include "support.hpp"

using namespace ncsm;
using namespace ncsm::test;

namespace {

CnfFormula cnf(int n_vars, std::vector<std::vector<int>> clauses) {
  return CnfFormula{n_vars, std::move(clauses)};
}

bool contains_all(const Matching& m, const std::vector<Pair>& part) {
  return std::all_of(part.begin(), part.end(), [&](Pair p) { return m.contains(p); });
}

void check_counts(const GadgetInstance& g) {
  const int n = g.plan.formula.n_vars;
  const int m2 = g.plan.n_two_clauses;
  const int m3 = g.plan.n_three_clauses;
  CHECK(g.plan.core_men == 6 * n + m2 + 7 * m3 + 1);
  CHECK(g.plan.core_women == 4 * n + 2 * m2 + 9 * m3 + 1);
  CHECK(g.instance.n_men() == g.plan.core_men + g.plan.dummy_men);
  CHECK(g.instance.n_women() == g.plan.core_women + g.plan.dummy_women);
  for (int d = g.plan.core_men + 1; d <= g.instance.n_men(); ++d)
    CHECK(g.instance.man_list(d).empty());
  for (int d = g.plan.core_women + 1; d <= g.instance.n_women(); ++d)
    CHECK(g.instance.woman_list(d).empty());
}

}  // namespace

TEST_CASE("validate_tovey") {
  CHECK(validate_tovey(cnf(2, {{1, 2}})).empty());
  CHECK_FALSE(validate_tovey(cnf(2, {{1, 1, 2}})).empty());
  CHECK_FALSE(validate_tovey(cnf(4, {{1, 2}, {1, 3}, {-1, 4}, {-1, 2}})).empty());
  CHECK_FALSE(validate_tovey(cnf(3, {{1, 2}, {1, 3}, {1, -2}})).empty());  // 3 positive
  CHECK_FALSE(validate_tovey(cnf(2, {{1}})).empty());
  CHECK_FALSE(validate_tovey(cnf(2, {{1, 2, -1, -2}})).empty());
  CHECK_FALSE(validate_tovey(cnf(2, {{1, 5}})).empty());
  CHECK(validate_tovey(cnf(1, {{1, -1}})).empty());
  try {
    build_gadget_instance(cnf(1, {{1, 1}, {1}}));
    FAIL("built a gadget for a bad formula");
  } catch (const InvalidFormula& e) {
    CHECK(e.violations().size() == 2);
  }
}

TEST_CASE("gadget agent counts") {
  const GadgetInstance two = build_gadget_instance(cnf(2, {{1, 2}}));
  CHECK(two.plan.core_men == 14);
  CHECK(two.plan.core_women == 11);
  check_counts(two);
  const GadgetInstance three = build_gadget_instance(cnf(3, {{1, 2, 3}}));
  CHECK(three.plan.core_men == 26);
  CHECK(three.plan.core_women == 22);  // 4*3 + 9 + 1
  check_counts(three);
}

TEST_CASE("gadget lists are short and tie only on the men's side") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 60; ++round) {
    const CnfFormula f = random_tovey(1 + round % 5, 1 + round % 6, rng);
    const GadgetInstance g = build_gadget_instance(f);
    check_counts(g);
    CHECK(g.instance.max_man_list_length() <= 2);
    CHECK(g.instance.max_woman_list_length() <= 2);
    for (int w = 1; w <= g.instance.n_women(); ++w)
      for (const Tie& t : g.instance.woman_list(w)) CHECK(t.size() == 1);
    for (int m = 1; m <= g.instance.n_men(); ++m) {
      int len = 0;
      for (const Tie& t : g.instance.man_list(m)) len += static_cast<int>(t.size());
      CHECK(len <= 2);
    }
  }
}

TEST_CASE("clauses are reordered with 2-clauses first") {
  const CnfFormula f = cnf(4, {{1, 2, 3}, {-1, 4}, {-2, -3, -4}, {2, 3}});
  const GadgetInstance g = build_gadget_instance(f);
  CHECK(g.plan.clause_order == std::vector<int>{1, 3, 0, 2});
  CHECK(g.plan.clauses[0].original_index == 2);
  CHECK(g.plan.clauses[0].y.size() == 1);
  CHECK(g.plan.clauses[2].y.size() == 7);
  CHECK(g.plan.clauses[2].z.size() == 3);
  check_counts(g);
}

TEST_CASE("forward direction on (x1 or x2)") {
  const GadgetInstance g = build_gadget_instance(cnf(2, {{1, 2}}));
  const Assignment a = {true, false};
  const Matching m = matching_from_assignment(g, a, {1});
  CHECK(contains_all(m, g.plan.variable_matching(1, true)));
  CHECK(contains_all(m, g.plan.variable_matching(2, false)));
  CHECK(contains_all(m, g.plan.clause_matching(1, 1)));
  CHECK(m.contains({g.plan.separator_man, g.plan.separator_woman}));
  CHECK(m.is_noncrossing());
  CHECK(classify(g.instance, Notion::Weak, m) == Classification::Ssnm);
  CHECK(assignment_from_matching(g.plan, m) == a);
  CHECK_THROWS_AS(matching_from_assignment(g, a, {2}), ContractViolation);
  CHECK_THROWS_AS(matching_from_assignment(g, {false, false}), ContractViolation);
}

TEST_CASE("every weak SSNM of (x1 or x2) encodes a model") {
  const CnfFormula f = cnf(2, {{1, 2}});
  const GadgetInstance g = build_gadget_instance(f);
  const auto all = brute_all_ssnm(g.instance, Notion::Weak);
  // 10 and 01 leave one z-woman free each; 11 may free either.
  CHECK(all.size() == 4);
  for (const Matching& m : all) {
    CHECK(m.contains({g.plan.separator_man, g.plan.separator_woman}));
    CHECK(evaluate(f, assignment_from_matching(g.plan, m)));
    const auto& z = g.plan.z_women(1);
    CHECK(std::any_of(z.begin(), z.end(),
                      [&](int w) { return m.partner_of_woman(w) == kNobody; }));
  }
}

TEST_CASE("tautological clause") {
  const CnfFormula f = cnf(1, {{1, -1}});
  const GadgetInstance g = build_gadget_instance(f);
  for (bool value : {false, true}) {
    const Matching m = matching_from_assignment(g, {value});
    CHECK(classify(g.instance, Notion::Weak, m) == Classification::Ssnm);
    CHECK(assignment_from_matching(g.plan, m) == Assignment{value});
  }
}

TEST_CASE("unsatisfiable formula has no weak SSNM") {
  // smallest unsatisfiable restricted formula made of 2-clauses
  const CnfFormula f = cnf(4, {{1, 2}, {1, -2}, {-1, 3}, {-3, 4}, {-3, -4}});
  REQUIRE_FALSE(brute_sat(f));
  const GadgetInstance g = build_gadget_instance(f);
  CHECK_FALSE(brute_exist_ssnm(g.instance, Notion::Weak));
}

TEST_CASE("forward direction for every model and witness") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    const CnfFormula f = random_tovey(2 + round % 3, 1 + round % 4, rng);
    const GadgetInstance g = build_gadget_instance(f);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.n_vars); ++mask) {
      Assignment a(static_cast<std::size_t>(f.n_vars));
      for (int v = 0; v < f.n_vars; ++v) a[static_cast<std::size_t>(v)] = mask >> v & 1U;
      if (!evaluate(f, a)) {
        CHECK_THROWS_AS(matching_from_assignment(g, a), ContractViolation);
        continue;
      }
      // every choice of satisfied literal per clause
      std::vector<std::vector<int>> choices;
      for (const auto& clause : f.clauses) {
        std::vector<int> ok;
        for (std::size_t k = 0; k < clause.size(); ++k) {
          const int lit = clause[k];
          if (a[static_cast<std::size_t>(std::abs(lit)) - 1] == (lit > 0))
            ok.push_back(static_cast<int>(k) + 1);
        }
        choices.push_back(ok);
      }
      std::vector<std::size_t> idx(choices.size(), 0);
      while (true) {
        std::vector<int> witness;
        for (std::size_t c = 0; c < choices.size(); ++c) witness.push_back(choices[c][idx[c]]);
        const Matching m = matching_from_assignment(g, a, witness);
        CHECK(classify(g.instance, Notion::Weak, m) == Classification::Ssnm);
        CHECK(assignment_from_matching(g.plan, m) == a);
        std::size_t c = 0;
        while (c < idx.size() && ++idx[c] == choices[c].size()) idx[c++] = 0;
        if (c == idx.size()) break;
      }
    }
  }
}

TEST_CASE("reverse direction and Lemma 2 on random formulas") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 20; ++round) {
    const CnfFormula f = random_tovey(2 + round % 2, 2 + round % 2, rng);
    const GadgetInstance g = build_gadget_instance(f);
    bool any = false;
    for_each_ssnm(g.instance, Notion::Weak, [&](const Matching& m) {
      any = true;
      CHECK(evaluate(f, assignment_from_matching(g.plan, m)));
      for (int j = 1; j <= static_cast<int>(g.plan.clauses.size()); ++j) {
        const auto& z = g.plan.z_women(j);
        CHECK(std::any_of(z.begin(), z.end(),
                          [&](int w) { return m.partner_of_woman(w) == kNobody; }));
      }
      return true;
    });
    CHECK(any == brute_sat(f));
  }
}

TEST_CASE("assignment_from_matching rejects other matchings") {
  const GadgetInstance g = build_gadget_instance(cnf(2, {{1, 2}}));
  const Matching empty(g.instance, {});
  CHECK_THROWS_AS(assignment_from_matching(g.plan, empty), ContractViolation);
}
