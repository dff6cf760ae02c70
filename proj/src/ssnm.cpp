#include "ncsm/ssnm.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ncsm {

Matching gale_shapley(const Instance& instance) {
  if (!instance.is_smi()) {
    throw ContractViolation("gale_shapley requires an instance without ties");
  }
  const int n_men = instance.n_men();
  std::vector<int> next_choice(static_cast<std::size_t>(n_men) + 1, 0);
  std::vector<int> held(static_cast<std::size_t>(instance.n_women()) + 1,
                        kNobody);
  std::vector<int> free_men;
  for (int m = n_men; m >= 1; --m) free_men.push_back(m);

  while (!free_men.empty()) {
    const int m = free_men.back();
    const PreferenceList& list = instance.man_list(m);
    if (next_choice[m] >= static_cast<int>(list.size())) {
      free_men.pop_back();  // list exhausted, stays single
      continue;
    }
    const int w = list[next_choice[m]++].front();
    const int current = held[w];
    if (current == kNobody) {
      held[w] = m;
      free_men.pop_back();
    } else if (instance.woman_rank(w, m) < instance.woman_rank(w, current)) {
      held[w] = m;
      free_men.back() = current;
    }
  }

  std::vector<Pair> pairs;
  for (int w = 1; w <= instance.n_women(); ++w) {
    if (held[w] != kNobody) pairs.push_back({held[w], w});
  }
  return Matching(instance, std::move(pairs));
}

FinderGuard FinderGuard::unlimited() {
  constexpr int kMax = std::numeric_limits<int>::max();
  return FinderGuard{kMax, kMax};
}

std::optional<Matching> find_stable(const Instance& instance, Notion notion,
                                    const FinderGuard& guard) {
  require_notion_applicable(instance, notion);
  switch (notion) {
    case Notion::SmiStrict:
      return gale_shapley(instance);
    case Notion::Super:
    case Notion::Strong:
      break;
    case Notion::Weak:
      throw ContractViolation("find_stable does not handle the weak notion");
  }
  const int min_side = std::min(instance.n_men(), instance.n_women());
  if (min_side > guard.max_min_side ||
      instance.num_acceptable_pairs() > guard.max_acceptable_pairs) {
    throw GuardExceeded(
        "instance too large for exhaustive finder: min side " +
        std::to_string(min_side) + " (limit " +
        std::to_string(guard.max_min_side) + "), " +
        std::to_string(instance.num_acceptable_pairs()) +
        " acceptable pairs (limit " +
        std::to_string(guard.max_acceptable_pairs) + ")");
  }
  std::optional<Matching> found;
  for_each_stable(
      instance, notion,
      [&](const Matching& m) {
        found = m;
        return false;
      },
      SizeGuard::unlimited());
  return found;
}

std::string_view to_string(SsnmOutcome outcome) {
  switch (outcome) {
    case SsnmOutcome::Found:
      return "found";
    case SsnmOutcome::None:
      return "none";
    case SsnmOutcome::NoStableMatching:
      return "no-stable-matching";
  }
  return "?";
}

SsnmResult exist_ssnm(const Instance& instance, Notion notion,
                      const FinderGuard& guard) {
  return exist_ssnm(instance, notion,
                    [&guard](const Instance& inst, Notion n) {
                      return find_stable(inst, n, guard);
                    });
}

SsnmResult exist_ssnm(const Instance& instance, Notion notion,
                      const StableFinder& finder) {
  if (notion == Notion::Weak) {
    throw ContractViolation(
        "exist_ssnm does not decide the weak notion; use the greedy for "
        "length-1 lists or the exhaustive oracle");
  }
  require_notion_applicable(instance, notion);

  SsnmResult result;
  result.witness = finder(instance, notion);
  if (!result.witness) {
    result.outcome = SsnmOutcome::NoStableMatching;
    return result;
  }

  std::vector<int> men;
  std::vector<int> women;
  for (Pair p : result.witness->pairs()) men.push_back(p.man);  // ascending
  for (int w = 1; w <= instance.n_women(); ++w) {
    if (result.witness->partner_of_woman(w) != kNobody) women.push_back(w);
  }

  std::vector<Pair> candidate;
  for (std::size_t k = 0; k < men.size(); ++k) {
    if (!instance.acceptable(men[k], women[k])) {
      result.outcome = SsnmOutcome::None;
      return result;
    }
    candidate.push_back({men[k], women[k]});
  }
  Matching matching(instance, std::move(candidate));
  if (classify(instance, notion, matching) == Classification::Ssnm) {
    result.outcome = SsnmOutcome::Found;
    result.matching = std::move(matching);
  } else {
    result.outcome = SsnmOutcome::None;
  }
  return result;
}

bool rural_hospitals_check(const Instance& instance, Notion notion,
                           const SizeGuard& guard) {
  std::optional<std::pair<std::vector<int>, std::vector<int>>> reference;
  bool same = true;
  for_each_stable(
      instance, notion,
      [&](const Matching& m) {
        std::vector<int> men;
        std::vector<int> women;
        for (Pair p : m.pairs()) men.push_back(p.man);
        for (int w = 1; w <= instance.n_women(); ++w) {
          if (m.partner_of_woman(w) != kNobody) women.push_back(w);
        }
        if (!reference) {
          reference.emplace(std::move(men), std::move(women));
          return true;
        }
        if (reference->first != men || reference->second != women) {
          same = false;
          return false;
        }
        return true;
      },
      guard);
  return same;
}

}  // namespace ncsm
