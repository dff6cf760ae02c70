#include "ncsm/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ncsm {

SizeGuard SizeGuard::unlimited() {
  constexpr int kMax = std::numeric_limits<int>::max();
  return SizeGuard{kMax, kMax, kMax};
}

namespace {

void check_agents(const Instance& instance, int limit, const char* what) {
  if (instance.n_men() > limit || instance.n_women() > limit) {
    throw GuardExceeded(std::string(what) + ": instance has " +
                        std::to_string(instance.n_men()) + " men and " +
                        std::to_string(instance.n_women()) +
                        " women, guard allows " + std::to_string(limit) +
                        " per side");
  }
}

void check_pairs(const Instance& instance, int limit, const char* what) {
  if (instance.num_acceptable_pairs() > limit) {
    throw GuardExceeded(std::string(what) + ": instance has " +
                        std::to_string(instance.num_acceptable_pairs()) +
                        " acceptable pairs, guard allows " +
                        std::to_string(limit));
  }
}

// Acceptable partners per agent in ascending index order.
struct Adjacency {
  std::vector<std::vector<int>> women_of_man;  // index 0 unused
  std::vector<std::vector<int>> men_of_woman;

  explicit Adjacency(const Instance& instance)
      : women_of_man(static_cast<std::size_t>(instance.n_men()) + 1),
        men_of_woman(static_cast<std::size_t>(instance.n_women()) + 1) {
    for (Pair p : instance.acceptable_pairs()) {
      women_of_man[p.man].push_back(p.woman);
      men_of_woman[p.woman].push_back(p.man);
    }
    for (auto& v : men_of_woman) std::sort(v.begin(), v.end());
  }
};

// Partial assignment shared by the pruned searches.
struct SearchState {
  const Instance& instance;
  Notion notion;
  Adjacency adj;
  std::vector<int> man_partner;
  std::vector<int> woman_partner;

  SearchState(const Instance& inst, Notion n)
      : instance(inst),
        notion(n),
        adj(inst),
        man_partner(static_cast<std::size_t>(inst.n_men()) + 1, kNobody),
        woman_partner(static_cast<std::size_t>(inst.n_women()) + 1, kNobody) {}

  bool pair_blocks(int m, int w) const {
    if (man_partner[m] == w) return false;
    const Preference man_view =
        compare(instance, Side::Man, m, w, man_partner[m]);
    const Preference woman_view =
        compare(instance, Side::Woman, w, m, woman_partner[w]);
    return blocking_condition(notion, man_view, woman_view);
  }

  Matching current() const {
    std::vector<Pair> pairs;
    for (int m = 1; m < static_cast<int>(man_partner.size()); ++m) {
      if (man_partner[m] != kNobody) pairs.push_back({m, man_partner[m]});
    }
    return Matching::unchecked(instance.n_men(), instance.n_women(),
                               std::move(pairs));
  }
};

class NoncrossingSsnmSearch {
 public:
  NoncrossingSsnmSearch(const Instance& instance, Notion notion,
                        const MatchingVisitor& visit)
      : state_(instance, notion), visit_(visit) {}

  void run() { descend(1, 0); }

 private:
  // Men 1..man-1 are decided; women 1..bound are settled (matched or
  // permanently single, since later men may only take women above bound).
  bool descend(int man, int bound) {
    const Instance& inst = state_.instance;
    if (man > inst.n_men()) {
      for (int w = bound + 1; w <= inst.n_women(); ++w) {
        for (int m : state_.adj.men_of_woman[w]) {
          if (state_.pair_blocks(m, w)) return true;
        }
      }
      Matching matching = state_.current();
      if (classify(inst, state_.notion, matching) != Classification::Ssnm) {
        return true;
      }
      return visit_(matching);
    }
    for (int w : state_.adj.women_of_man[man]) {
      if (w <= bound) continue;
      state_.man_partner[man] = w;
      state_.woman_partner[w] = man;
      bool keep_going = true;
      if (settled_pairs_ok(man, bound, w)) keep_going = descend(man + 1, w);
      state_.man_partner[man] = kNobody;
      state_.woman_partner[w] = kNobody;
      if (!keep_going) return false;
    }
    if (settled_pairs_ok(man, bound, bound)) return descend(man + 1, bound);
    return true;
  }

  // Checks the pairs that became settled once `man` was decided and the
  // bound moved from old_bound to new_bound.
  bool settled_pairs_ok(int man, int old_bound, int new_bound) const {
    for (int w : state_.adj.women_of_man[man]) {
      if (w > new_bound) break;
      if (state_.pair_blocks(man, w)) return false;
    }
    for (int w = old_bound + 1; w <= new_bound; ++w) {
      for (int m : state_.adj.men_of_woman[w]) {
        if (m >= man) break;
        if (state_.pair_blocks(m, w)) return false;
      }
    }
    return true;
  }

  SearchState state_;
  const MatchingVisitor& visit_;
};

class StableSearch {
 public:
  StableSearch(const Instance& instance, Notion notion,
               const MatchingVisitor& visit)
      : state_(instance, notion), visit_(visit) {}

  void run() { descend(1); }

 private:
  bool descend(int man) {
    const Instance& inst = state_.instance;
    if (man > inst.n_men()) {
      Matching matching = state_.current();
      if (!blocking_pairs(inst, state_.notion, matching).empty()) return true;
      return visit_(matching);
    }
    for (int w : state_.adj.women_of_man[man]) {
      if (state_.woman_partner[w] != kNobody) continue;
      state_.man_partner[man] = w;
      state_.woman_partner[w] = man;
      bool keep_going = true;
      if (settled_pairs_ok(man)) keep_going = descend(man + 1);
      state_.man_partner[man] = kNobody;
      state_.woman_partner[w] = kNobody;
      if (!keep_going) return false;
    }
    if (settled_pairs_ok(man)) return descend(man + 1);
    return true;
  }

  // A pair is settled when its man is decided and its woman is matched.
  bool settled_pairs_ok(int man) const {
    for (int w : state_.adj.women_of_man[man]) {
      if (state_.woman_partner[w] == kNobody) continue;
      if (state_.pair_blocks(man, w)) return false;
    }
    const int w = state_.man_partner[man];
    if (w != kNobody) {
      for (int m : state_.adj.men_of_woman[w]) {
        if (m >= man) break;
        if (state_.pair_blocks(m, w)) return false;
      }
    }
    return true;
  }

  SearchState state_;
  const MatchingVisitor& visit_;
};

bool noncrossing_descend(const Instance& instance, const std::vector<Pair>& all,
                         std::size_t from, std::vector<Pair>& chain,
                         const MatchingVisitor& visit) {
  if (!visit(Matching::unchecked(instance.n_men(), instance.n_women(), chain))) {
    return false;
  }
  for (std::size_t k = from; k < all.size(); ++k) {
    const Pair p = all[k];
    if (!chain.empty() &&
        (p.man <= chain.back().man || p.woman <= chain.back().woman)) {
      continue;
    }
    chain.push_back(p);
    const bool keep_going =
        noncrossing_descend(instance, all, k + 1, chain, visit);
    chain.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_noncrossing_matching(const Instance& instance,
                                   const MatchingVisitor& visit,
                                   const SizeGuard& guard) {
  check_agents(instance, guard.max_agents, "noncrossing enumeration");
  std::vector<Pair> chain;
  noncrossing_descend(instance, instance.acceptable_pairs(), 0, chain, visit);
}

std::vector<Matching> enumerate_noncrossing_matchings(const Instance& instance,
                                                      const SizeGuard& guard) {
  std::vector<Matching> out;
  for_each_noncrossing_matching(
      instance,
      [&](const Matching& m) {
        out.push_back(m);
        return true;
      },
      guard);
  return out;
}

std::optional<SizedMatching> brute_max_wsnm(const Instance& instance,
                                            Notion notion,
                                            const SizeGuard& guard) {
  require_notion_applicable(instance, notion);
  std::optional<SizedMatching> best;
  for_each_noncrossing_matching(
      instance,
      [&](const Matching& m) {
        if (best && m.size() <= best->size) return true;
        if (is_wsnm(classify(instance, notion, m))) {
          best = SizedMatching{m.size(), m};
        }
        return true;
      },
      guard);
  return best;
}

void for_each_ssnm(const Instance& instance, Notion notion,
                   const MatchingVisitor& visit, const SizeGuard& guard) {
  require_notion_applicable(instance, notion);
  check_agents(instance, guard.max_search_agents, "ssnm search");
  NoncrossingSsnmSearch(instance, notion, visit).run();
}

std::optional<Matching> brute_exist_ssnm(const Instance& instance,
                                         Notion notion,
                                         const SizeGuard& guard) {
  std::optional<Matching> found;
  for_each_ssnm(
      instance, notion,
      [&](const Matching& m) {
        found = m;
        return false;
      },
      guard);
  return found;
}

std::vector<Matching> brute_all_ssnm(const Instance& instance, Notion notion,
                                     const SizeGuard& guard) {
  std::vector<Matching> out;
  for_each_ssnm(
      instance, notion,
      [&](const Matching& m) {
        out.push_back(m);
        return true;
      },
      guard);
  return out;
}

void for_each_stable(const Instance& instance, Notion notion,
                     const MatchingVisitor& visit, const SizeGuard& guard) {
  require_notion_applicable(instance, notion);
  check_agents(instance, guard.max_agents, "stable matching enumeration");
  check_pairs(instance, guard.max_acceptable_pairs,
              "stable matching enumeration");
  StableSearch(instance, notion, visit).run();
}

std::vector<Matching> brute_all_stable(const Instance& instance, Notion notion,
                                       const SizeGuard& guard) {
  std::vector<Matching> out;
  for_each_stable(
      instance, notion,
      [&](const Matching& m) {
        out.push_back(m);
        return true;
      },
      guard);
  return out;
}

}  // namespace ncsm
