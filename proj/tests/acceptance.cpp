// Acceptance suite. One PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ncsm/core.hpp"
#include "ncsm/generate.hpp"
#include "ncsm/greedy1.hpp"
#include "ncsm/maxwsnm.hpp"
#include "ncsm/oracle.hpp"
#include "ncsm/reduction.hpp"
#include "ncsm/ssnm.hpp"
#include "support.hpp"

using namespace ncsm;
using namespace ncsm::test;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
  bool passed() const { return failures == 0; }
};

int g_failed = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d  %-34s %s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

std::string detail(const Tally& t, double secs) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%ld checks, %ld failures, %.1fs", t.checks,
                t.failures, secs);
  std::string s = buf;
  if (!t.passed()) s += "; first: " + t.first_failure;
  return s;
}

std::string tag(std::uint64_t seed, Notion notion) {
  return "seed " + std::to_string(seed) + " " + std::string(to_string(notion));
}

// Lists capped so that n * cap stays within the exhaustive finder's 24
// acceptable pairs.
int finder_cap(int n) { return std::max(1, std::min(n, 24 / n)); }

// ---------------------------------------------------------------------------
// Criteria 1 and 7: DP against the oracle, with the structural checks.

struct DpSweep {
  Tally equivalence;  // criterion 1
  Tally structure;    // criterion 7
};

void check_structure(const Instance& inst, Notion notion, const SizedMatching& dp,
                     const std::string& where, Tally& t) {
  t.expect(is_wsnm(classify(inst, notion, dp.matching)), where + ": output not a WSNM");
  const AugmentedInstance aug(inst);
  const DpState state = run_max_wsnm_dp(aug, notion);
  const std::vector<Pair> chain = reconstruct_augmented(state);
  const bool sentinels = chain.size() >= 2 && chain.front() == Pair{0, 0} &&
                         chain.back() == Pair{aug.last_man(), aug.last_woman()};
  t.expect(sentinels, where + ": sentinel pairs missing");
  if (!sentinels) return;
  std::vector<Pair> shifted;
  for (Pair e : chain) {
    shifted.push_back({e.man + 1, e.woman + 1});
    const Matching prefix(aug.shifted(), shifted);
    bool semi = true;
    for (Pair b : noncrossing_blocking_pairs(aug.shifted(), notion, prefix)) {
      semi = semi && b.man - 1 >= e.man && b.woman - 1 >= e.woman;
    }
    t.expect(semi, where + ": prefix is not a semi-WSNM");
  }
}

DpSweep run_dp_sweep() {
  DpSweep out;
  std::uint64_t seed = 1'000'000;
  for (int n = 3; n <= 7; ++n) {
    for (double ties : {0.0, 0.3, 0.6}) {
      for (Notion notion : all_notions()) {
        for (int k = 0; k < 200; ++k, ++seed) {
          const Instance base = generate(n, n, n, ties, seed);
          const Instance inst = for_notion(base, notion);
          const auto dp = max_wsnm(inst, notion);
          const auto brute = brute_max_wsnm(inst, notion);
          const std::string where = "n=" + std::to_string(n) + " " + tag(seed, notion);
          const bool same = dp.has_value() == brute.has_value() &&
                            (!dp || dp->size == brute->size);
          out.equivalence.expect(same, where + ": dp and oracle disagree");
          if (inst.is_smi() && notion == Notion::Weak) {
            out.structure.expect(dp.has_value(), where + ": no weak WSNM on SMI");
          }
          if (dp) check_structure(inst, notion, *dp, where, out.structure);
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 2

Tally run_conflict_equivalence() {
  Tally t;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const std::uint64_t seed = 2'000'000 + k;
    const int n = 1 + static_cast<int>(k % 7);
    const double ties = (k % 3) * 0.3;
    const Instance base = generate(n, n, n, ties, seed);
    for (Notion notion : all_notions()) {
      const Instance inst = for_notion(base, notion);
      const AugmentedInstance aug(inst);
      const WindowTables tables(aug);
      for (int ip = 0; ip < aug.rows(); ++ip)
        for (int jp = 0; jp < aug.cols(); ++jp) {
          if (!aug.acceptable(ip, jp)) continue;
          for (int i = ip + 1; i < aug.rows(); ++i)
            for (int j = jp + 1; j < aug.cols(); ++j) {
              if (!aug.acceptable(i, j)) continue;
              t.expect(conflicting(aug, tables, notion, {ip, jp}, {i, j}) ==
                           conflicting_naive(aug, notion, {ip, jp}, {i, j}),
                       tag(seed, notion));
            }
        }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Criterion 3

Tally run_ssnm_existence(int* found_count) {
  Tally t;
  *found_count = 0;
  for (Notion notion : {Notion::SmiStrict, Notion::Super, Notion::Strong}) {
    for (std::uint64_t k = 0; k < 200; ++k) {
      const std::uint64_t seed = 3'000'000 + k + 1000 * static_cast<std::uint64_t>(notion);
      const int n = 1 + static_cast<int>(k % 7);
      const double ties = (k % 3) * 0.3;
      const Instance inst = for_notion(generate(n, n, finder_cap(n), ties, seed), notion);
      const SsnmResult r = exist_ssnm(inst, notion);
      const auto brute = brute_exist_ssnm(inst, notion);
      const bool found = r.outcome == SsnmOutcome::Found;
      t.expect(found == brute.has_value(), tag(seed, notion) + ": found-vs-none");
      if (found) {
        ++*found_count;
        t.expect(classify(inst, notion, *r.matching) == Classification::Ssnm,
                 tag(seed, notion) + ": reported matching is not an SSNM");
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Criterion 4

Tally run_rural_hospitals(int* vacuous) {
  Tally t;
  *vacuous = 0;
  for (bool with_ties : {false, true}) {
    for (std::uint64_t k = 0; k < 100; ++k) {
      const std::uint64_t seed = 4'000'000 + k + (with_ties ? 500 : 0);
      const int n = 1 + static_cast<int>(k % 6);
      const Instance inst = generate(n, n, finder_cap(n), with_ties ? 0.5 : 0.0, seed);
      for (Notion notion : {Notion::Super, Notion::Strong}) {
        if (brute_all_stable(inst, notion).empty()) ++*vacuous;
        t.expect(rural_hospitals_check(inst, notion), tag(seed, notion));
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Criterion 5

Tally run_greedy(int* found_count) {
  Tally t;
  *found_count = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const std::uint64_t seed = 5'000'000 + k;
    const int n_men = 1 + static_cast<int>(k % 7);
    const int n_women = 1 + static_cast<int>((k / 7) % 7);
    const Instance inst = random_len1(n_men, n_women, (k % 4) * 0.25, seed);
    const auto greedy = weak_ssnm_len1(inst);
    const auto brute = brute_exist_ssnm(inst, Notion::Weak);
    const std::string where = "seed " + std::to_string(seed);
    t.expect(greedy.has_value() == brute.has_value(), where + ": existence");
    if (!greedy) continue;
    ++*found_count;
    t.expect(classify(inst, Notion::Weak, *greedy) == Classification::Ssnm,
             where + ": not a weak SSNM");
    const FirstChoiceGraph g(inst);
    const std::vector<Pair> edges = g.edges();
    for (Pair p : greedy->pairs()) {
      t.expect(std::find(edges.begin(), edges.end(), p) != edges.end(),
               where + ": pair outside the first-choice graph");
    }
    for (int w = 1; w <= inst.n_women(); ++w) {
      if (g.degree(w) > 0) {
        t.expect(greedy->partner_of_woman(w) != kNobody,
                 where + ": woman with a first choice left single");
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Criterion 6

// Every restricted formula with exactly n_vars variables available and
// 1..max_clauses clauses, each clause a set of 2 or 3 literals over
// distinct-or-complementary variables, clauses as a multiset.
std::vector<CnfFormula> tovey_corpus(int max_vars, int max_clauses) {
  std::vector<CnfFormula> out;
  for (int n = 1; n <= max_vars; ++n) {
    std::vector<int> lits;
    for (int v = 1; v <= n; ++v) {
      lits.push_back(v);
      lits.push_back(-v);
    }
    std::vector<std::vector<int>> clauses;
    const int L = static_cast<int>(lits.size());
    for (int a = 0; a < L; ++a)
      for (int b = a + 1; b < L; ++b) {
        clauses.push_back({lits[a], lits[b]});
        for (int c = b + 1; c < L; ++c) clauses.push_back({lits[a], lits[b], lits[c]});
      }
    const int C = static_cast<int>(clauses.size());
    std::vector<int> pick;
    std::function<void(int)> extend = [&](int from) {
      if (!pick.empty()) {
        CnfFormula f{n, {}};
        for (int k : pick) f.clauses.push_back(clauses[k]);
        if (validate_tovey(f).empty()) out.push_back(std::move(f));
      }
      if (static_cast<int>(pick.size()) == max_clauses) return;
      for (int k = from; k < C; ++k) {
        pick.push_back(k);
        extend(k);
        pick.pop_back();
      }
    };
    extend(0);
  }
  return out;
}

struct ReductionStats {
  int formulas = 0;
  int unsat = 0;
  long ssnms = 0;
};

void check_reduction(const CnfFormula& f, Tally& t, ReductionStats& stats) {
  const std::string where = serialize_dimacs(f);
  GadgetInstance g;
  try {
    g = build_gadget_instance(f);
  } catch (const std::exception& e) {
    t.expect(false, where + ": " + e.what());
    return;
  }
  ++stats.formulas;
  const int n = f.n_vars;
  int m2 = 0;
  int m3 = 0;
  for (const auto& c : f.clauses) (c.size() == 2 ? m2 : m3) += 1;
  t.expect(g.plan.core_men == 6 * n + m2 + 7 * m3 + 1, where + ": men count");
  t.expect(g.plan.core_women == 4 * n + 2 * m2 + 9 * m3 + 1, where + ": women count");

  const bool satisfiable = brute_sat(f);
  if (!satisfiable) ++stats.unsat;
  bool found = false;
  for_each_ssnm(g.instance, Notion::Weak, [&](const Matching& m) {
    found = true;
    ++stats.ssnms;
    bool ok = false;
    try {
      ok = evaluate(f, assignment_from_matching(g.plan, m));
    } catch (const std::exception&) {
    }
    t.expect(ok, where + ": extracted assignment does not satisfy");
    return true;
  });
  t.expect(found == satisfiable, where + ": satisfiable vs weak-SSNM exists");
}

// Every unsatisfiable restricted formula made of at most five distinct
// 2-clauses over four variables. The small corpus is almost entirely
// satisfiable; these exercise the "no weak-SSNM" direction.
std::vector<CnfFormula> unsat_two_cnf() {
  std::vector<std::vector<int>> clauses;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      for (int sa : {1, -1})
        for (int sb : {1, -1}) clauses.push_back({sa * a, sb * b});
  std::vector<CnfFormula> out;
  std::vector<int> pick;
  std::function<void(int)> extend = [&](int from) {
    if (!pick.empty()) {
      CnfFormula f{4, {}};
      for (int k : pick) f.clauses.push_back(clauses[k]);
      if (validate_tovey(f).empty() && !brute_sat(f)) out.push_back(std::move(f));
    }
    if (pick.size() == 5) return;
    for (int k = from; k < static_cast<int>(clauses.size()); ++k) {
      pick.push_back(k);
      extend(k + 1);
      pick.pop_back();
    }
  };
  extend(0);
  return out;
}

Tally run_reduction(ReductionStats& stats) {
  Tally t;
  for (const CnfFormula& f : tovey_corpus(3, 3)) check_reduction(f, t, stats);
  std::mt19937_64 rng(6'000'000);
  // Mostly 2-clauses on four variables, so that some draws are unsatisfiable.
  for (int k = 0; k < 50; ++k) {
    const int n_vars = k < 10 ? 1 + k % 3 : 4;
    const int n_clauses = k < 10 ? 1 + k % 4 : 5 + static_cast<int>(rng() % 2);
    check_reduction(random_tovey(n_vars, n_clauses, rng, k < 10 ? 50 : 5), t, stats);
  }
  for (const CnfFormula& f : unsat_two_cnf()) check_reduction(f, t, stats);
  return t;
}

// ---------------------------------------------------------------------------
// Criteria 8 and 9: timings, best of several runs.

double time_dp(int n, int runs) {
  double best = 1e18;
  for (int r = 0; r < runs; ++r) {
    const Instance inst = generate_complete(n, 8'000'000 + static_cast<std::uint64_t>(r));
    const auto start = Clock::now();
    const auto result = max_wsnm(inst, Notion::SmiStrict);
    best = std::min(best, seconds_since(start));
    if (!result) return -1.0;
  }
  return best;
}

// Man k lists w_k or w_(k-1) at random; each woman ties all her men. The
// greedy has to walk every woman and succeeds, so the whole input is read.
Instance monotone_len1(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PreferenceList> men(static_cast<std::size_t>(n));
  std::vector<PreferenceList> women(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const int w = k > 1 && (rng() & 1U) ? k - 1 : k;
    men[static_cast<std::size_t>(k) - 1] = {{w}};
    PreferenceList& list = women[static_cast<std::size_t>(w) - 1];
    if (list.empty()) list.push_back({});
    list.front().push_back(k);
  }
  return Instance(std::move(men), std::move(women));
}

double time_greedy(int n, int runs, bool* ok) {
  const Instance inst = monotone_len1(n, 9'000'000 + static_cast<std::uint64_t>(n));
  int expected = 0;
  for (int w = 1; w <= n; ++w) expected += inst.woman_list(w).empty() ? 0 : 1;
  double best = 1e18;
  for (int r = 0; r < runs; ++r) {
    const auto start = Clock::now();
    const auto result = weak_ssnm_len1(inst);
    best = std::min(best, seconds_since(start));
    if (!result || result->size() != expected) *ok = false;
  }
  return best;
}

}  // namespace

int main() {
  {
    const auto start = Clock::now();
    const DpSweep sweep = run_dp_sweep();
    const double secs = seconds_since(start);
    report(1, "max_wsnm equals brute_max_wsnm", sweep.equivalence.passed(),
           detail(sweep.equivalence, secs));
    report(7, "structural guarantees", sweep.structure.passed(),
           detail(sweep.structure, secs));
  }
  {
    const auto start = Clock::now();
    const Tally t = run_conflict_equivalence();
    report(2, "conflicting equals naive scan", t.passed(), detail(t, seconds_since(start)));
  }
  {
    const auto start = Clock::now();
    int found = 0;
    const Tally t = run_ssnm_existence(&found);
    report(3, "exist_ssnm equals brute_exist_ssnm", t.passed(),
           detail(t, seconds_since(start)) + ", " + std::to_string(found) + " found");
  }
  {
    const auto start = Clock::now();
    int vacuous = 0;
    const Tally t = run_rural_hospitals(&vacuous);
    report(4, "rural hospitals", t.passed(),
           detail(t, seconds_since(start)) + ", " + std::to_string(vacuous) + " vacuous");
  }
  {
    const auto start = Clock::now();
    int found = 0;
    const Tally t = run_greedy(&found);
    report(5, "greedy equals brute (weak)", t.passed(),
           detail(t, seconds_since(start)) + ", " + std::to_string(found) + " found");
  }
  {
    const auto start = Clock::now();
    ReductionStats stats;
    const Tally t = run_reduction(stats);
    report(6, "reduction sound and complete", t.passed(),
           detail(t, seconds_since(start)) + ", " + std::to_string(stats.formulas) +
               " formulas, " + std::to_string(stats.unsat) + " unsat, " +
               std::to_string(stats.ssnms) + " weak-SSNMs");
  }
  {
    const double t50 = time_dp(50, 3);
    const double t100 = time_dp(100, 2);
    const double ratio = t100 / t50;
    const bool ok = t50 > 0 && t100 > 0 && t100 < 60.0 && ratio < 24.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "n=50 %.3fs, n=100 %.3fs, ratio %.2f (< 24)", t50,
                  t100, ratio);
    report(8, "max_wsnm n=100 under 60s", ok, buf);
  }
  {
    bool sane = true;
    const double small = time_greedy(100'000, 15, &sane);
    const double large = time_greedy(1'000'000, 15, &sane);
    const double ratio = large / small;
    const bool ok = sane && large < 2.0 && ratio < 15.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "n=1e5 %.4fs, n=1e6 %.4fs, ratio %.2f (< 15)", small,
                  large, ratio);
    report(9, "weak_ssnm_len1 n=1e6 under 2s", ok, buf);
  }
  return g_failed == 0 ? 0 : 1;
}
