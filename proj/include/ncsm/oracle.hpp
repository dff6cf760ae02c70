#pragma once

// Exhaustive ground truth for the solvers. Everything here trades speed
// for obviousness and refuses to run past its size guard.

#include <functional>
#include <optional>
#include <vector>

#include "ncsm/core.hpp"

namespace ncsm {

struct SizeGuard {
  // Agents per side for the plain enumerators.
  int max_agents = 14;
  // Acceptable pairs for enumeration of all (possibly crossing) matchings.
  int max_acceptable_pairs = 24;
  // Agents per side for the pruned SSNM search, which stays tractable on
  // sparse gadget instances far beyond max_agents.
  int max_search_agents = 96;

  static SizeGuard unlimited();
};

struct SizedMatching {
  int size = 0;
  Matching matching;
};

// Visitor returns false to stop the enumeration early.
using MatchingVisitor = std::function<bool(const Matching&)>;

// Every noncrossing matching (pairs strictly increasing on both sides),
// the empty one included, in lexicographic order of sorted pair lists.
void for_each_noncrossing_matching(const Instance& instance,
                                   const MatchingVisitor& visit,
                                   const SizeGuard& guard = {});
std::vector<Matching> enumerate_noncrossing_matchings(
    const Instance& instance, const SizeGuard& guard = {});

// Largest noncrossing matching classified wsnm or ssnm; the first one in
// enumeration order wins among equals.
std::optional<SizedMatching> brute_max_wsnm(const Instance& instance,
                                            Notion notion,
                                            const SizeGuard& guard = {});

// Depth-first search over noncrossing matchings that cuts a branch as soon
// as a pair whose two agents are both settled blocks. Every reported
// matching is confirmed with classify(...) == ssnm.
void for_each_ssnm(const Instance& instance, Notion notion,
                   const MatchingVisitor& visit, const SizeGuard& guard = {});
std::optional<Matching> brute_exist_ssnm(const Instance& instance,
                                         Notion notion,
                                         const SizeGuard& guard = {});
std::vector<Matching> brute_all_ssnm(const Instance& instance, Notion notion,
                                     const SizeGuard& guard = {});

// Every matching, crossing allowed, with no blocking pair at all.
void for_each_stable(const Instance& instance, Notion notion,
                     const MatchingVisitor& visit, const SizeGuard& guard = {});
std::vector<Matching> brute_all_stable(const Instance& instance, Notion notion,
                                       const SizeGuard& guard = {});

}  // namespace ncsm
