#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ncsm/core.hpp"

namespace ncsm {

// Edges (m, w) where m sits in w's top tie, grouped by woman with men in
// ascending order. Built for instances whose men list at most one woman.
class FirstChoiceGraph {
 public:
  explicit FirstChoiceGraph(const Instance& instance);

  int n_women() const { return static_cast<int>(offsets_.size()) - 1; }
  int degree(int w) const {
    return static_cast<int>(offsets_[w] - offsets_[w - 1]);
  }
  std::span<const int> men_of(int w) const {
    return {men_.data() + offsets_[w - 1], men_.data() + offsets_[w]};
  }
  std::vector<Pair> edges() const;

 private:
  std::vector<std::uint32_t> offsets_;  // offsets_[w-1]..offsets_[w]
  std::vector<int> men_;
};

// Throws ContractViolation naming the first man whose list is longer than 1.
void require_men_lists_at_most_one(const Instance& instance);

FirstChoiceGraph build_first_choice_graph(const Instance& instance);

// Weak-SSNM for instances where every man lists at most one woman, or
// nullopt if none exists. Women are served top to bottom, each taking the
// topmost first-choice man below every man matched so far. Linear time.
std::optional<Matching> weak_ssnm_len1(const Instance& instance);

// Same question when every woman lists at most one man, answered on the
// transposed instance.
std::optional<Matching> weak_ssnm_len1_women(const Instance& instance);

}  // namespace ncsm
