#pragma once

// Shared fixtures and brute-force helpers for the test binaries.

#include <cstdint>
#include <string>
#include <vector>

#include "ncsm/core.hpp"
#include "ncsm/generate.hpp"
#include "ncsm/io.hpp"
#include "ncsm/reduction.hpp"

namespace ncsm::test {

inline Instance doc(const std::string& text) { return parse_instance(text); }

// m1: w1; m2: w1 w2; w1: (m1 m2); w2: m2
inline Instance fig8() {
  return doc("men 2\nwomen 2\nm 1: 1\nm 2: 1 2\nw 1: (1 2)\nw 2: 2\n");
}

// m1: w2; m2: w1; w1: m2; w2: m1
inline Instance crossed_pair() {
  return doc("men 2\nwomen 2\nm 1: 2\nm 2: 1\nw 1: 2\nw 2: 1\n");
}

inline Instance single_pair() {
  return doc("men 1\nwomen 1\nm 1: 1\nw 1: 1\n");
}

inline Matching pairs(const Instance& inst, std::vector<Pair> p) {
  return Matching(inst, std::move(p));
}

inline const std::vector<Notion>& all_notions() {
  static const std::vector<Notion> v = {Notion::SmiStrict, Notion::Super,
                                        Notion::Strong, Notion::Weak};
  return v;
}

// smi-strict needs strict lists; other notions take the instance as is.
inline Instance for_notion(const Instance& inst, Notion notion) {
  return notion == Notion::SmiStrict ? break_ties_by_index(inst) : inst;
}

// Every instance where each man lists at most one woman.
inline Instance random_len1(int n_men, int n_women, double tie_prob,
                            std::uint64_t seed) {
  return generate(n_men, n_women, 1, tie_prob, seed);
}

// Matchings of all subsets of acceptable pairs, filtered to valid
// noncrossing ones. Independent of the chain enumerator.
inline std::vector<std::vector<Pair>> powerset_noncrossing(const Instance& inst) {
  const std::vector<Pair>& acc = inst.acceptable_pairs();
  std::vector<std::vector<Pair>> out;
  const std::uint64_t limit = std::uint64_t{1} << acc.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<Pair> chosen;
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (mask >> k & 1U) chosen.push_back(acc[k]);
    }
    bool ok = true;
    for (std::size_t a = 0; a < chosen.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < chosen.size() && ok; ++b) {
        const Pair x = chosen[a];
        const Pair y = chosen[b];
        if (x.man == y.man || x.woman == y.woman || crosses(x, y)) ok = false;
      }
    }
    if (ok) out.push_back(std::move(chosen));
  }
  return out;
}

// Truth table search.
inline bool brute_sat(const CnfFormula& f, Assignment* model = nullptr) {
  const std::uint64_t limit = std::uint64_t{1} << f.n_vars;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Assignment a(static_cast<std::size_t>(f.n_vars));
    for (int v = 0; v < f.n_vars; ++v) a[static_cast<std::size_t>(v)] = mask >> v & 1U;
    if (evaluate(f, a)) {
      if (model) *model = a;
      return true;
    }
  }
  return false;
}

// Random formula in restricted form: clause sizes 2..3, distinct variables
// per clause, each variable at most 3 times and at most twice per sign.
// Clauses it cannot place are dropped.
template <typename Rng>
CnfFormula random_tovey(int n_vars, int n_clauses, Rng& rng, int three_percent = 50) {
  CnfFormula f;
  f.n_vars = n_vars;
  std::vector<int> pos(static_cast<std::size_t>(n_vars) + 1, 0);
  std::vector<int> neg(static_cast<std::size_t>(n_vars) + 1, 0);
  auto below = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  for (int c = 0; c < n_clauses; ++c) {
    const int want = below(100) < three_percent ? 3 : 2;
    std::vector<int> clause;
    for (int attempt = 0; attempt < 40 && static_cast<int>(clause.size()) < want; ++attempt) {
      const int v = 1 + below(n_vars);
      const bool negative = below(2) == 1;
      bool used = false;
      for (int lit : clause) used = used || std::abs(lit) == v;
      if (used) continue;
      if (pos[v] + neg[v] >= 3) continue;
      if ((negative ? neg[v] : pos[v]) >= 2) continue;
      (negative ? neg[v] : pos[v]) += 1;
      clause.push_back(negative ? -v : v);
    }
    if (clause.size() < 2) {
      for (int lit : clause) (lit < 0 ? neg[-lit] : pos[lit]) -= 1;
      continue;
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace ncsm::test
