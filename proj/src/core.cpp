#include "ncsm/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncsm {

namespace {

// Beyond this many cells a side's rank table switches to sorted arrays.
constexpr long long kDenseRankCells = 1LL << 22;

std::string agent_name(Side side, int agent) {
  return (side == Side::Man ? "m" : "w") + std::to_string(agent);
}

void validate_lists(const std::vector<PreferenceList>& lists, Side side,
                    int n_other) {
  std::vector<int> seen(static_cast<std::size_t>(n_other) + 1, 0);
  for (std::size_t a = 0; a < lists.size(); ++a) {
    const int agent = static_cast<int>(a) + 1;
    for (const Tie& tie : lists[a]) {
      if (tie.empty()) {
        throw InvalidInstance(agent_name(side, agent) + " has an empty tie");
      }
      for (int other : tie) {
        const Side other_side = side == Side::Man ? Side::Woman : Side::Man;
        if (other < 1 || other > n_other) {
          throw InvalidInstance(agent_name(side, agent) + " lists " +
                                agent_name(other_side, other) +
                                " which is out of range");
        }
        if (seen[other] == agent) {
          throw InvalidInstance(agent_name(side, agent) + " lists " +
                                agent_name(other_side, other) + " twice");
        }
        seen[other] = agent;
      }
    }
  }
}

}  // namespace

std::string_view to_string(Notion notion) {
  switch (notion) {
    case Notion::SmiStrict:
      return "smi-strict";
    case Notion::Super:
      return "super";
    case Notion::Strong:
      return "strong";
    case Notion::Weak:
      return "weak";
  }
  return "?";
}

Notion parse_notion(std::string_view text) {
  if (text == "smi-strict" || text == "smi") return Notion::SmiStrict;
  if (text == "super") return Notion::Super;
  if (text == "strong") return Notion::Strong;
  if (text == "weak") return Notion::Weak;
  throw std::invalid_argument("unknown stability notion '" + std::string(text) +
                              "'");
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::NotNoncrossing:
      return "not-noncrossing";
    case Classification::Unstable:
      return "unstable";
    case Classification::Wsnm:
      return "wsnm";
    case Classification::Ssnm:
      return "ssnm";
  }
  return "?";
}

void Instance::RankTable::build(const std::vector<PreferenceList>& lists,
                                int n_other_side, bool use_dense) {
  n_other = n_other_side;
  const std::size_t n = lists.size();
  dense.clear();
  offsets.assign(n + 1, 0);
  partners.clear();
  ranks.clear();
  if (use_dense) {
    dense.assign(n * static_cast<std::size_t>(n_other), kUnacceptable);
    for (std::size_t a = 0; a < n; ++a) {
      int r = 0;
      for (const Tie& tie : lists[a]) {
        for (int o : tie) dense[a * n_other + (o - 1)] = r;
        ++r;
      }
    }
    return;
  }
  std::size_t total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (const Tie& tie : lists[a]) total += tie.size();
    offsets[a + 1] = static_cast<std::uint32_t>(total);
  }
  partners.resize(total);
  ranks.resize(total);
  std::vector<std::pair<int, int>> buf;
  for (std::size_t a = 0; a < n; ++a) {
    buf.clear();
    int r = 0;
    for (const Tie& tie : lists[a]) {
      for (int o : tie) buf.emplace_back(o, r);
      ++r;
    }
    std::sort(buf.begin(), buf.end());
    std::size_t k = offsets[a];
    for (auto [o, rk] : buf) {
      partners[k] = o;
      ranks[k] = rk;
      ++k;
    }
  }
}

int Instance::RankTable::lookup(int agent, int other) const {
  if (!dense.empty()) {
    return dense[static_cast<std::size_t>(agent) * n_other + other];
  }
  const auto first = partners.begin() + offsets[agent];
  const auto last = partners.begin() + offsets[agent + 1];
  const auto it = std::lower_bound(first, last, other + 1);
  if (it == last || *it != other + 1) return kUnacceptable;
  return ranks[static_cast<std::size_t>(it - partners.begin())];
}

Instance::Instance(std::vector<PreferenceList> men,
                   std::vector<PreferenceList> women)
    : men_(std::move(men)), women_(std::move(women)) {
  validate_lists(men_, Side::Man, n_women());
  validate_lists(women_, Side::Woman, n_men());

  const bool dense =
      static_cast<long long>(n_men()) * n_women() <= kDenseRankCells;
  men_rank_.build(men_, n_women(), dense);
  women_rank_.build(women_, n_men(), dense);

  for (int m = 1; m <= n_men(); ++m) {
    for (const Tie& tie : men_[m - 1]) {
      if (tie.size() != 1) smi_ = false;
      for (int w : tie) {
        if (women_rank_.lookup(w - 1, m - 1) == kUnacceptable) {
          throw InvalidInstance("m" + std::to_string(m) + " lists w" +
                                std::to_string(w) + " but w" +
                                std::to_string(w) + " does not list m" +
                                std::to_string(m));
        }
      }
    }
  }
  for (int w = 1; w <= n_women(); ++w) {
    for (const Tie& tie : women_[w - 1]) {
      if (tie.size() != 1) smi_ = false;
      for (int m : tie) {
        if (men_rank_.lookup(m - 1, w - 1) == kUnacceptable) {
          throw InvalidInstance("w" + std::to_string(w) + " lists m" +
                                std::to_string(m) + " but m" +
                                std::to_string(m) + " does not list w" +
                                std::to_string(w));
        }
      }
    }
  }
  for (int m = 1; m <= n_men(); ++m) {
    for (const Tie& tie : men_[m - 1]) {
      for (int w : tie) pairs_.push_back({m, w});
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
}

void Instance::check_index(Side side, int agent) const {
  const int n = side == Side::Man ? n_men() : n_women();
  if (agent < 1 || agent > n) {
    throw ContractViolation(agent_name(side, agent) + " is out of range");
  }
}

const PreferenceList& Instance::man_list(int m) const {
  check_index(Side::Man, m);
  return men_[m - 1];
}

const PreferenceList& Instance::woman_list(int w) const {
  check_index(Side::Woman, w);
  return women_[w - 1];
}

int Instance::man_rank(int m, int w) const {
  check_index(Side::Man, m);
  check_index(Side::Woman, w);
  return men_rank_.lookup(m - 1, w - 1);
}

int Instance::woman_rank(int w, int m) const {
  check_index(Side::Woman, w);
  check_index(Side::Man, m);
  return women_rank_.lookup(w - 1, m - 1);
}

bool Instance::acceptable(int m, int w) const {
  return man_rank(m, w) != kUnacceptable;
}

namespace {
int max_length(const std::vector<PreferenceList>& lists) {
  std::size_t best = 0;
  for (const auto& list : lists) {
    std::size_t len = 0;
    for (const Tie& t : list) len += t.size();
    best = std::max(best, len);
  }
  return static_cast<int>(best);
}
}  // namespace

int Instance::max_man_list_length() const { return max_length(men_); }
int Instance::max_woman_list_length() const { return max_length(women_); }

Instance Instance::transposed() const { return Instance(women_, men_); }

Matching::Matching(const Instance& instance, std::vector<Pair> pairs) {
  for (const Pair& p : pairs) {
    if (p.man < 1 || p.man > instance.n_men() || p.woman < 1 ||
        p.woman > instance.n_women()) {
      throw ContractViolation("pair (m" + std::to_string(p.man) + ", w" +
                              std::to_string(p.woman) + ") is out of range");
    }
    if (!instance.acceptable(p.man, p.woman)) {
      throw ContractViolation("pair (m" + std::to_string(p.man) + ", w" +
                              std::to_string(p.woman) +
                              ") is not acceptable");
    }
  }
  *this = unchecked(instance.n_men(), instance.n_women(), std::move(pairs));
}

Matching Matching::unchecked(int n_men, int n_women, std::vector<Pair> pairs) {
  Matching m;
  m.man_partner_.assign(static_cast<std::size_t>(n_men) + 1, kNobody);
  m.woman_partner_.assign(static_cast<std::size_t>(n_women) + 1, kNobody);
  if (!std::is_sorted(pairs.begin(), pairs.end())) {
    std::sort(pairs.begin(), pairs.end());
  }
  for (const Pair& p : pairs) {
    if (p.man < 1 || p.man > n_men || p.woman < 1 || p.woman > n_women) {
      throw ContractViolation("pair (m" + std::to_string(p.man) + ", w" +
                              std::to_string(p.woman) + ") is out of range");
    }
    if (m.man_partner_[p.man] != kNobody) {
      throw ContractViolation("m" + std::to_string(p.man) +
                              " appears in more than one pair");
    }
    if (m.woman_partner_[p.woman] != kNobody) {
      throw ContractViolation("w" + std::to_string(p.woman) +
                              " appears in more than one pair");
    }
    m.man_partner_[p.man] = p.woman;
    m.woman_partner_[p.woman] = p.man;
  }
  m.pairs_ = std::move(pairs);
  return m;
}

int Matching::partner_of_man(int m) const {
  if (m < 1 || m >= static_cast<int>(man_partner_.size())) return kNobody;
  return man_partner_[m];
}

int Matching::partner_of_woman(int w) const {
  if (w < 1 || w >= static_cast<int>(woman_partner_.size())) return kNobody;
  return woman_partner_[w];
}

bool Matching::is_noncrossing() const {
  // pairs_ is sorted by man, so noncrossing means women strictly increase.
  for (std::size_t k = 1; k < pairs_.size(); ++k) {
    if (pairs_[k].woman <= pairs_[k - 1].woman) return false;
  }
  return true;
}

Preference compare(const Instance& instance, Side viewer_side, int viewer,
                   int a, int b) {
  auto rank_of = [&](int x) {
    if (x == kNobody) return kUnacceptable + 1;
    const int r = instance.rank(viewer_side, viewer, x);
    if (r == kUnacceptable) {
      throw ContractViolation(
          agent_name(viewer_side == Side::Man ? Side::Woman : Side::Man, x) +
          " is not acceptable to " + agent_name(viewer_side, viewer));
    }
    return r;
  };
  const int ra = rank_of(a);
  const int rb = rank_of(b);
  if (ra < rb) return Preference::FirstBetter;
  if (ra > rb) return Preference::SecondBetter;
  return Preference::Equal;
}

void require_notion_applicable(const Instance& instance, Notion notion) {
  if (notion == Notion::SmiStrict && !instance.is_smi()) {
    throw ContractViolation(
        "the smi-strict notion requires an instance without ties");
  }
}

namespace {

bool blocks_unchecked(const Instance& instance, Notion notion,
                      const Matching& matching, Pair c) {
  const Preference man_view = compare(instance, Side::Man, c.man, c.woman,
                                      matching.partner_of_man(c.man));
  const Preference woman_view = compare(instance, Side::Woman, c.woman, c.man,
                                        matching.partner_of_woman(c.woman));
  return blocking_condition(notion, man_view, woman_view);
}

bool crosses_any(const Matching& matching, Pair c) {
  return std::any_of(matching.pairs().begin(), matching.pairs().end(),
                     [&](Pair e) { return crosses(e, c); });
}

}  // namespace

bool blocks(const Instance& instance, Notion notion, const Matching& matching,
            Pair candidate) {
  require_notion_applicable(instance, notion);
  if (candidate.man < 1 || candidate.man > instance.n_men() ||
      candidate.woman < 1 || candidate.woman > instance.n_women() ||
      !instance.acceptable(candidate.man, candidate.woman)) {
    throw ContractViolation("candidate pair is not acceptable");
  }
  if (matching.contains(candidate)) {
    throw ContractViolation("candidate pair is already in the matching");
  }
  return blocks_unchecked(instance, notion, matching, candidate);
}

std::vector<Pair> blocking_pairs(const Instance& instance, Notion notion,
                                 const Matching& matching) {
  require_notion_applicable(instance, notion);
  std::vector<Pair> out;
  for (Pair p : instance.acceptable_pairs()) {
    if (matching.contains(p)) continue;
    if (blocks_unchecked(instance, notion, matching, p)) out.push_back(p);
  }
  return out;
}

std::vector<Pair> noncrossing_blocking_pairs(const Instance& instance,
                                             Notion notion,
                                             const Matching& matching) {
  std::vector<Pair> out = blocking_pairs(instance, notion, matching);
  std::erase_if(out, [&](Pair p) { return crosses_any(matching, p); });
  return out;
}

Classification classify(const Instance& instance, Notion notion,
                        const Matching& matching) {
  require_notion_applicable(instance, notion);
  if (!matching.is_noncrossing()) return Classification::NotNoncrossing;
  bool any_blocking = false;
  for (Pair p : instance.acceptable_pairs()) {
    if (matching.contains(p)) continue;
    if (!blocks_unchecked(instance, notion, matching, p)) continue;
    if (!crosses_any(matching, p)) return Classification::Unstable;
    any_blocking = true;
  }
  return any_blocking ? Classification::Wsnm : Classification::Ssnm;
}

Instance break_ties_by_index(const Instance& instance) {
  auto split = [](const PreferenceList& list) {
    PreferenceList out;
    for (Tie tie : list) {
      std::sort(tie.begin(), tie.end());
      for (int x : tie) out.push_back({x});
    }
    return out;
  };
  std::vector<PreferenceList> men;
  std::vector<PreferenceList> women;
  for (int m = 1; m <= instance.n_men(); ++m) {
    men.push_back(split(instance.man_list(m)));
  }
  for (int w = 1; w <= instance.n_women(); ++w) {
    women.push_back(split(instance.woman_list(w)));
  }
  return Instance(std::move(men), std::move(women));
}

}  // namespace ncsm
