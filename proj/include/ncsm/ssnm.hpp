#pragma once

#include <functional>
#include <optional>

#include "ncsm/core.hpp"
#include "ncsm/oracle.hpp"

namespace ncsm {

// Man-optimal stable matching of an SMI-kind instance: men propose in list
// order, each woman holds her best proposer so far.
Matching gale_shapley(const Instance& instance);

// Size limits for the exhaustive super/strong stable matching finder.
struct FinderGuard {
  int max_min_side = 10;        // min(n_men, n_women)
  int max_acceptable_pairs = 24;

  static FinderGuard unlimited();
};

// Plugin point for a polynomial super/strong stable matching algorithm.
// Must return some stable matching under the notion, or nullopt if none.
using StableFinder =
    std::function<std::optional<Matching>(const Instance&, Notion)>;

// smi-strict dispatches to gale_shapley; super and strong search all
// matchings exhaustively within the guard (GuardExceeded otherwise).
std::optional<Matching> find_stable(const Instance& instance, Notion notion,
                                    const FinderGuard& guard = {});

enum class SsnmOutcome { Found, None, NoStableMatching };

std::string_view to_string(SsnmOutcome outcome);

struct SsnmResult {
  SsnmOutcome outcome = SsnmOutcome::None;
  std::optional<Matching> matching;  // set iff outcome == Found
  std::optional<Matching> witness;   // the stable matching used, if any
};

// Any stable matching fixes the matched agents, and those agents admit a
// single noncrossing pairing: the k-th matched man with the k-th matched
// woman. That pairing is the only candidate and is checked directly.
// Rejects the weak notion, whose existence question is NP-complete.
SsnmResult exist_ssnm(const Instance& instance, Notion notion,
                      const FinderGuard& guard = {});
SsnmResult exist_ssnm(const Instance& instance, Notion notion,
                      const StableFinder& finder);

// True iff every stable matching under the notion matches the same agents.
// Vacuously true when no stable matching exists.
bool rural_hospitals_check(const Instance& instance, Notion notion,
                           const SizeGuard& guard = {});

}  // namespace ncsm
