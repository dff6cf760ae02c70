#pragma once

// Maximum-cardinality weakly stable noncrossing matching by dynamic
// programming over the matching's last pair.
//
// The instance is first augmented with sentinel pairs (m0, w0) at the top
// and (m_{n+1}, w_{n+1}) at the bottom, each listing only the other. Every
// WSNM of the augmented instance contains both sentinels, so its maximum
// size is the base optimum plus two.
//
// Y(i, j) is the largest semi-WSNM ending in (m_i, w_j): a noncrossing
// matching whose noncrossing blocking pairs all sit at or below its last
// pair. It extends the best Y(i', j') over earlier pairs that are not
// conflicting with (m_i, w_j), i.e. that do not enclose a blocking pair in
// the window [i', i] x [j', j]. Three precomputed tables make that test
// O(1), giving O(n^4) time overall:
//
//   S(i', i, j', j)  some acceptable pair lies in rows i'..i, columns j'..j
//   A(i, j', j)      a best woman for m_i among w_j'..w_j, or lambda
//   B(i', i, j)      a best man for w_j among m_i'..m_i, or lambda
//
// lambda is a virtual agent acceptable to everyone and ranked last.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ncsm/core.hpp"
#include "ncsm/oracle.hpp"

namespace ncsm {

// Table entry for "no acceptable agent in the window".
inline constexpr int kLambda = -2;

// Largest side the DP accepts by default; S alone holds (n+2)^4 bytes.
inline constexpr int kDefaultMaxDpSide = 180;

class AugmentedInstance {
 public:
  // Throws GuardExceeded when either side exceeds max_side.
  explicit AugmentedInstance(const Instance& base,
                             int max_side = kDefaultMaxDpSide);

  const Instance& base() const { return base_; }

  // The augmented instance as an ordinary 1-based Instance: augmented
  // index a is agent a + 1 there.
  const Instance& shifted() const { return shifted_; }

  int last_man() const { return base_.n_men() + 1; }
  int last_woman() const { return base_.n_women() + 1; }
  int rows() const { return base_.n_men() + 2; }
  int cols() const { return base_.n_women() + 2; }

  // Augmented indices. kUnacceptable when the pair is not acceptable.
  int man_rank(int i, int j) const {
    return man_rank_[static_cast<std::size_t>(i) * cols() + j];
  }
  int woman_rank(int j, int i) const {
    return woman_rank_[static_cast<std::size_t>(j) * rows() + i];
  }
  bool acceptable(int i, int j) const { return man_rank(i, j) != kUnacceptable; }

 private:
  Instance base_;
  Instance shifted_;
  std::vector<int> man_rank_;
  std::vector<int> woman_rank_;
};

class WindowTables {
 public:
  WindowTables() = default;
  explicit WindowTables(const AugmentedInstance& augmented);

  // Empty windows (lo > hi) yield false / kLambda.
  bool S(int i_lo, int i_hi, int j_lo, int j_hi) const {
    if (i_lo > i_hi || j_lo > j_hi) return false;
    return s_[((static_cast<std::size_t>(i_hi) * cols_ + j_hi) * rows_ + i_lo) *
                  cols_ +
              j_lo] != 0;
  }
  int A(int i, int j_lo, int j_hi) const {
    if (j_lo > j_hi) return kLambda;
    return a_[(static_cast<std::size_t>(i) * cols_ + j_hi) * cols_ + j_lo];
  }
  int B(int i_lo, int i_hi, int j) const {
    if (i_lo > i_hi) return kLambda;
    return b_[(static_cast<std::size_t>(j) * rows_ + i_hi) * rows_ + i_lo];
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  // [i_hi][j_hi][i_lo][j_lo]; only cells with lo <= hi are ever written.
  std::unique_ptr<std::uint8_t[]> s_;
  std::vector<int> a_;           // [i][j_hi][j_lo]
  std::vector<int> b_;           // [j][i_hi][i_lo]
};

// Whether edges earlier=(i', j') and later=(i, j), i' < i and j' < j, both
// acceptable, enclose a blocking pair of {earlier, later} in their window.
// Uses the four-condition test on the precomputed tables.
bool conflicting(const AugmentedInstance& augmented, const WindowTables& tables,
                 Notion notion, Pair earlier, Pair later);

// Same question answered by scanning every acceptable pair in the window
// and asking core::blocks against the two-edge matching.
bool conflicting_naive(const AugmentedInstance& augmented, Notion notion,
                       Pair earlier, Pair later);

struct DpState {
  int rows = 0;
  int cols = 0;
  std::vector<std::optional<int>> y;  // nullopt is minus infinity
  std::vector<Pair> parent;           // {-1, -1} for the root cell
  WindowTables tables;

  std::optional<int> Y(int i, int j) const {
    return y[static_cast<std::size_t>(i) * cols + j];
  }
  Pair parent_of(int i, int j) const {
    return parent[static_cast<std::size_t>(i) * cols + j];
  }
};

DpState run_max_wsnm_dp(const AugmentedInstance& augmented, Notion notion);

// The augmented matching, in augmented indices, read back from the parent
// links of (n+1, n+1). Empty when Y(n+1, n+1) is minus infinity.
std::vector<Pair> reconstruct_augmented(const DpState& state);

// nullopt iff no WSNM exists under the notion. Among maximizing
// predecessors the lexicographically smallest (i', j') is kept.
std::optional<SizedMatching> max_wsnm(const Instance& instance, Notion notion,
                                      int max_side = kDefaultMaxDpSide);

}  // namespace ncsm
