#include "ncsm/maxwsnm.hpp"

#include <string>

namespace ncsm {

namespace {

std::vector<PreferenceList> shift_lists(const Instance& base, Side side) {
  const int n = side == Side::Man ? base.n_men() : base.n_women();
  const int n_other = side == Side::Man ? base.n_women() : base.n_men();
  std::vector<PreferenceList> out;
  out.reserve(static_cast<std::size_t>(n) + 2);
  out.push_back({{1}});
  for (int a = 1; a <= n; ++a) {
    PreferenceList list = base.list(side, a);
    for (Tie& tie : list) {
      for (int& x : tie) ++x;
    }
    out.push_back(std::move(list));
  }
  out.push_back({{n_other + 2}});
  return out;
}

class ConflictTest {
 public:
  ConflictTest(const AugmentedInstance& aug, const WindowTables& tables,
               Notion notion)
      : aug_(aug),
        tables_(tables),
        notion_(notion),
        weak_prefer_(notion == Notion::Super || notion == Notion::Strong) {}

  bool operator()(int ip, int jp, int i, int j) const {
    // Condition 2: an acceptable pair strictly inside has both agents single.
    if (tables_.S(ip + 1, i - 1, jp + 1, j - 1)) return true;

    // Condition 1: the two corner pairs.
    if (aug_.acceptable(ip, j) &&
        blocking_condition(notion_, order(aug_.man_rank(ip, j), aug_.man_rank(ip, jp)),
                           order(aug_.woman_rank(j, ip), aug_.woman_rank(j, i)))) {
      return true;
    }
    if (aug_.acceptable(i, jp) &&
        blocking_condition(notion_, order(aug_.man_rank(i, jp), aug_.man_rank(i, j)),
                           order(aug_.woman_rank(jp, i), aug_.woman_rank(jp, ip)))) {
      return true;
    }

    // Condition 3: a single woman strictly between, preferred by m_i or m_i'.
    if (jp + 1 <= j - 1) {
      const int a_hi = tables_.A(i, jp + 1, j - 1);
      if (prefers(man_rank_of(i, a_hi), aug_.man_rank(i, j))) {
        return true;
      }
      const int a_lo = tables_.A(ip, jp + 1, j - 1);
      if (prefers(man_rank_of(ip, a_lo), aug_.man_rank(ip, jp))) {
        return true;
      }
    }

    // Condition 4: a single man strictly between, preferred by w_j or w_j'.
    if (ip + 1 <= i - 1) {
      const int b_hi = tables_.B(ip + 1, i - 1, j);
      if (prefers(woman_rank_of(j, b_hi), aug_.woman_rank(j, i))) {
        return true;
      }
      const int b_lo = tables_.B(ip + 1, i - 1, jp);
      if (prefers(woman_rank_of(jp, b_lo), aug_.woman_rank(jp, ip))) {
        return true;
      }
    }
    return false;
  }

 private:
  static Preference order(int rank_a, int rank_b) {
    if (rank_a < rank_b) return Preference::FirstBetter;
    if (rank_a > rank_b) return Preference::SecondBetter;
    return Preference::Equal;
  }

  // lambda ranks below every acceptable agent.
  int man_rank_of(int i, int entry) const {
    return entry == kLambda ? kUnacceptable : aug_.man_rank(i, entry);
  }
  int woman_rank_of(int j, int entry) const {
    return entry == kLambda ? kUnacceptable : aug_.woman_rank(j, entry);
  }

  // "Prefers" in conditions 3 and 4: weakly for super and strong, strictly
  // for weak and smi-strict.
  bool prefers(int rank_candidate, int rank_partner) const {
    return weak_prefer_ ? rank_candidate <= rank_partner
                        : rank_candidate < rank_partner;
  }

  const AugmentedInstance& aug_;
  const WindowTables& tables_;
  Notion notion_;
  bool weak_prefer_;
};

void check_conflict_args(const AugmentedInstance& aug, Pair earlier,
                         Pair later) {
  const bool in_range = earlier.man >= 0 && earlier.woman >= 0 &&
                        later.man <= aug.last_man() &&
                        later.woman <= aug.last_woman();
  if (!in_range || earlier.man >= later.man || earlier.woman >= later.woman) {
    throw ContractViolation("conflict window is malformed");
  }
  if (!aug.acceptable(earlier.man, earlier.woman) ||
      !aug.acceptable(later.man, later.woman)) {
    throw ContractViolation("conflict test needs two acceptable pairs");
  }
}

}  // namespace

AugmentedInstance::AugmentedInstance(const Instance& base, int max_side)
    : base_(base) {
  if (base.n_men() > max_side || base.n_women() > max_side) {
    throw GuardExceeded("instance has " + std::to_string(base.n_men()) +
                        " men and " + std::to_string(base.n_women()) +
                        " women; the dynamic program is limited to " +
                        std::to_string(max_side) + " per side");
  }
  shifted_ = Instance(shift_lists(base, Side::Man), shift_lists(base, Side::Woman));
  man_rank_.assign(static_cast<std::size_t>(rows()) * cols(), kUnacceptable);
  woman_rank_.assign(static_cast<std::size_t>(cols()) * rows(), kUnacceptable);
  for (Pair p : shifted_.acceptable_pairs()) {
    const int i = p.man - 1;
    const int j = p.woman - 1;
    man_rank_[static_cast<std::size_t>(i) * cols() + j] =
        shifted_.man_rank(p.man, p.woman);
    woman_rank_[static_cast<std::size_t>(j) * rows() + i] =
        shifted_.woman_rank(p.woman, p.man);
  }
}

WindowTables::WindowTables(const AugmentedInstance& aug)
    : rows_(aug.rows()), cols_(aug.cols()) {
  const std::size_t R = static_cast<std::size_t>(rows_);
  const std::size_t C = static_cast<std::size_t>(cols_);

  s_ = std::make_unique_for_overwrite<std::uint8_t[]>(R * C * R * C);
  for (int ih = 0; ih < rows_; ++ih) {
    for (int jh = 0; jh < cols_; ++jh) {
      std::uint8_t* block = &s_[(ih * C + jh) * R * C];
      if (aug.acceptable(ih, jh)) {
        for (int il = 0; il <= ih; ++il) {
          for (int jl = 0; jl <= jh; ++jl) block[il * C + jl] = 1;
        }
        continue;
      }
      const std::uint8_t* up = ih > 0 ? &s_[((ih - 1) * C + jh) * R * C] : nullptr;
      const std::uint8_t* left = jh > 0 ? &s_[(ih * C + jh - 1) * R * C] : nullptr;
      for (int il = 0; il <= ih; ++il) {
        for (int jl = 0; jl <= jh; ++jl) {
          const bool from_up = il <= ih - 1 && up[il * C + jl];
          const bool from_left = jl <= jh - 1 && left[il * C + jl];
          block[il * C + jl] = from_up || from_left;
        }
      }
    }
  }

  // Ties keep the earlier (smaller-index) representative.
  a_.assign(R * C * C, kLambda);
  for (int i = 0; i < rows_; ++i) {
    for (int jh = 0; jh < cols_; ++jh) {
      int* row = &a_[(i * C + jh) * C];
      const int single = aug.acceptable(i, jh) ? jh : kLambda;
      row[jh] = single;
      const int single_rank = single == kLambda ? kUnacceptable : aug.man_rank(i, jh);
      for (int jl = jh - 1; jl >= 0; --jl) {
        const int prev = a_[(i * C + jh - 1) * C + jl];
        const int prev_rank = prev == kLambda ? kUnacceptable : aug.man_rank(i, prev);
        row[jl] = single_rank < prev_rank ? single : prev;
      }
    }
  }

  b_.assign(C * R * R, kLambda);
  for (int j = 0; j < cols_; ++j) {
    for (int ih = 0; ih < rows_; ++ih) {
      int* row = &b_[(j * R + ih) * R];
      const int single = aug.acceptable(ih, j) ? ih : kLambda;
      row[ih] = single;
      const int single_rank = single == kLambda ? kUnacceptable : aug.woman_rank(j, ih);
      for (int il = ih - 1; il >= 0; --il) {
        const int prev = b_[(j * R + ih - 1) * R + il];
        const int prev_rank = prev == kLambda ? kUnacceptable : aug.woman_rank(j, prev);
        row[il] = single_rank < prev_rank ? single : prev;
      }
    }
  }
}

bool conflicting(const AugmentedInstance& augmented, const WindowTables& tables,
                 Notion notion, Pair earlier, Pair later) {
  require_notion_applicable(augmented.base(), notion);
  check_conflict_args(augmented, earlier, later);
  return ConflictTest(augmented, tables, notion)(earlier.man, earlier.woman,
                                                 later.man, later.woman);
}

bool conflicting_naive(const AugmentedInstance& augmented, Notion notion,
                       Pair earlier, Pair later) {
  require_notion_applicable(augmented.base(), notion);
  check_conflict_args(augmented, earlier, later);
  const Instance& inst = augmented.shifted();
  const Pair e1{earlier.man + 1, earlier.woman + 1};
  const Pair e2{later.man + 1, later.woman + 1};
  const Matching two(inst, {e1, e2});
  for (int s = e1.man; s <= e2.man; ++s) {
    for (int t = e1.woman; t <= e2.woman; ++t) {
      const Pair p{s, t};
      if (p == e1 || p == e2 || !inst.acceptable(s, t)) continue;
      if (blocks(inst, notion, two, p)) return true;
    }
  }
  return false;
}

DpState run_max_wsnm_dp(const AugmentedInstance& augmented, Notion notion) {
  require_notion_applicable(augmented.base(), notion);
  DpState st;
  st.rows = augmented.rows();
  st.cols = augmented.cols();
  st.tables = WindowTables(augmented);
  const std::size_t cells = static_cast<std::size_t>(st.rows) * st.cols;
  st.y.assign(cells, std::nullopt);
  st.parent.assign(cells, Pair{-1, -1});

  const ConflictTest conflict(augmented, st.tables, notion);
  st.y[0] = 1;  // {(m0, w0)}; the rest of row 0 and column 0 stays -inf
  for (int i = 1; i < st.rows; ++i) {
    for (int j = 1; j < st.cols; ++j) {
      if (!augmented.acceptable(i, j)) continue;
      std::optional<int> best;
      Pair best_parent{-1, -1};
      for (int ip = 0; ip < i; ++ip) {
        for (int jp = 0; jp < j; ++jp) {
          const std::optional<int>& cand = st.y[static_cast<std::size_t>(ip) * st.cols + jp];
          if (!cand || (best && *cand <= *best)) continue;
          if (conflict(ip, jp, i, j)) continue;
          best = cand;
          best_parent = {ip, jp};
        }
      }
      if (best) {
        st.y[static_cast<std::size_t>(i) * st.cols + j] = *best + 1;
        st.parent[static_cast<std::size_t>(i) * st.cols + j] = best_parent;
      }
    }
  }
  return st;
}

std::vector<Pair> reconstruct_augmented(const DpState& state) {
  const int i_top = state.rows - 1;
  const int j_top = state.cols - 1;
  if (!state.Y(i_top, j_top)) return {};
  std::vector<Pair> chain;
  Pair cur{i_top, j_top};
  while (cur.man >= 0) {
    chain.push_back(cur);
    cur = state.parent_of(cur.man, cur.woman);
  }
  return {chain.rbegin(), chain.rend()};
}

std::optional<SizedMatching> max_wsnm(const Instance& instance, Notion notion,
                                      int max_side) {
  require_notion_applicable(instance, notion);
  const AugmentedInstance aug(instance, max_side);
  const DpState st = run_max_wsnm_dp(aug, notion);
  const std::optional<int> top = st.Y(st.rows - 1, st.cols - 1);
  if (!top) return std::nullopt;

  std::vector<Pair> pairs;
  for (Pair p : reconstruct_augmented(st)) {
    if (p.man == 0 || p.man == aug.last_man()) continue;
    pairs.push_back(p);
  }
  Matching matching(instance, std::move(pairs));
  return SizedMatching{*top - 2, std::move(matching)};
}

}  // namespace ncsm
