#include "ncsm/greedy1.hpp"

#include <string>

namespace ncsm {

// Works off the sorted acceptable-pair array rather than the nested lists:
// a man lists at most one woman iff he appears in at most one pair.
void require_men_lists_at_most_one(const Instance& instance) {
  const std::vector<Pair>& pairs = instance.acceptable_pairs();
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k].man == pairs[k - 1].man) {
      throw ContractViolation("m" + std::to_string(pairs[k].man) +
                              " lists more than one woman");
    }
  }
}

FirstChoiceGraph::FirstChoiceGraph(const Instance& instance) {
  require_men_lists_at_most_one(instance);
  const int n_women = instance.n_women();
  offsets_.assign(static_cast<std::size_t>(n_women) + 1, 0);

  // Counting sort of the first-choice edges by woman. Pairs are sorted by
  // man, so every woman's men come out ascending.
  const std::vector<Pair>& pairs = instance.acceptable_pairs();
  std::vector<std::uint8_t> top(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    top[k] = instance.woman_rank(pairs[k].woman, pairs[k].man) == 0;
    offsets_[pairs[k].woman] += top[k];
  }
  for (int w = 1; w <= n_women; ++w) offsets_[w] += offsets_[w - 1];
  men_.resize(offsets_[n_women]);
  // Fill back to front, leaving offsets_[w] at the start of w's group,
  // then shift everything down one slot.
  for (std::size_t k = pairs.size(); k-- > 0;) {
    if (top[k]) men_[--offsets_[pairs[k].woman]] = pairs[k].man;
  }
  for (int w = 1; w < n_women; ++w) offsets_[w] = offsets_[w + 1];
  if (n_women > 0) offsets_[n_women] = static_cast<std::uint32_t>(men_.size());
}

std::vector<Pair> FirstChoiceGraph::edges() const {
  std::vector<Pair> out;
  for (int w = 1; w <= n_women(); ++w) {
    for (int m : men_of(w)) out.push_back({m, w});
  }
  return out;
}

FirstChoiceGraph build_first_choice_graph(const Instance& instance) {
  return FirstChoiceGraph(instance);
}

std::optional<Matching> weak_ssnm_len1(const Instance& instance) {
  const FirstChoiceGraph graph(instance);
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(graph.n_women()));
  int last_man = 0;
  for (int w = 1; w <= graph.n_women(); ++w) {
    if (graph.degree(w) == 0) continue;
    int chosen = kNobody;
    for (int m : graph.men_of(w)) {
      if (m > last_man) {
        chosen = m;
        break;
      }
    }
    if (chosen == kNobody) return std::nullopt;
    pairs.push_back({chosen, w});
    last_man = chosen;
  }
  return Matching::unchecked(instance.n_men(), instance.n_women(),
                             std::move(pairs));
}

std::optional<Matching> weak_ssnm_len1_women(const Instance& instance) {
  const std::optional<Matching> swapped = weak_ssnm_len1(instance.transposed());
  if (!swapped) return std::nullopt;
  std::vector<Pair> pairs;
  for (Pair p : swapped->pairs()) pairs.push_back({p.woman, p.man});
  return Matching(instance, std::move(pairs));
}

}  // namespace ncsm
