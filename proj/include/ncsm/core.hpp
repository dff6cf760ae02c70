#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncsm {

// Agents are addressed by 1-based positional index on their own line.
// kNobody stands for "single" wherever a partner is expected.
inline constexpr int kNobody = -1;

// Rank value reported for an agent that does not appear in a list.
inline constexpr int kUnacceptable = 1 << 30;

// Thrown when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Thrown when preference lists do not describe a valid instance.
class InvalidInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an exhaustive or memory-bound routine refuses an instance
// that exceeds its configured size limit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { Man, Woman };

enum class Notion { SmiStrict, Super, Strong, Weak };

enum class Preference { FirstBetter, Equal, SecondBetter };

std::string_view to_string(Notion notion);
Notion parse_notion(std::string_view text);  // throws std::invalid_argument

struct Pair {
  int man = 0;
  int woman = 0;
  auto operator<=>(const Pair&) const = default;
};

// A preference list is an ordered sequence of ties; each tie lists
// opposite-side indices that the owner regards as equal.
using Tie = std::vector<int>;
using PreferenceList = std::vector<Tie>;

class Instance {
 public:
  Instance() = default;

  // lists are indexed 0..n-1 for agents 1..n. Validates mutual
  // acceptability, index range, duplicates and empty ties.
  Instance(std::vector<PreferenceList> men, std::vector<PreferenceList> women);

  int n_men() const { return static_cast<int>(men_.size()); }
  int n_women() const { return static_cast<int>(women_.size()); }

  const PreferenceList& man_list(int m) const;
  const PreferenceList& woman_list(int w) const;
  const PreferenceList& list(Side side, int agent) const {
    return side == Side::Man ? man_list(agent) : woman_list(agent);
  }

  // Tie rank of woman w in m's list (0 = best) or kUnacceptable.
  int man_rank(int m, int w) const;
  int woman_rank(int w, int m) const;
  int rank(Side viewer_side, int viewer, int other) const {
    return viewer_side == Side::Man ? man_rank(viewer, other)
                                    : woman_rank(viewer, other);
  }

  bool acceptable(int m, int w) const;

  // True iff every tie has exactly one member.
  bool is_smi() const { return smi_; }

  int num_acceptable_pairs() const { return static_cast<int>(pairs_.size()); }
  const std::vector<Pair>& acceptable_pairs() const { return pairs_; }  // sorted

  int max_man_list_length() const;
  int max_woman_list_length() const;

  // Swaps the roles of men and women.
  Instance transposed() const;

  bool operator==(const Instance& other) const {
    return men_ == other.men_ && women_ == other.women_;
  }

 private:
  // Per-side rank lookup. Dense when the opposite side is small enough,
  // otherwise per-agent (partner, rank) arrays sorted by partner.
  struct RankTable {
    int n_other = 0;
    std::vector<int> dense;  // row-major, n_agents x n_other, 0-based
    std::vector<std::uint32_t> offsets;
    std::vector<int> partners;
    std::vector<int> ranks;

    void build(const std::vector<PreferenceList>& lists, int n_other_side,
               bool use_dense);
    int lookup(int agent, int other) const;  // both 0-based
  };

  void check_index(Side side, int agent) const;

  std::vector<PreferenceList> men_;
  std::vector<PreferenceList> women_;
  RankTable men_rank_;
  RankTable women_rank_;
  std::vector<Pair> pairs_;
  bool smi_ = true;
};

class Matching {
 public:
  Matching() = default;

  // Validates that every pair is acceptable and no agent repeats.
  Matching(const Instance& instance, std::vector<Pair> pairs);

  // Sized for an instance with the given counts; pairs are not checked
  // against acceptability. Used by enumerators that only build valid ones.
  static Matching unchecked(int n_men, int n_women, std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }  // sorted
  int size() const { return static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }

  int partner_of_man(int m) const;
  int partner_of_woman(int w) const;
  int partner(Side side, int agent) const {
    return side == Side::Man ? partner_of_man(agent) : partner_of_woman(agent);
  }
  bool contains(Pair p) const { return partner_of_man(p.man) == p.woman; }

  bool is_noncrossing() const;

  bool operator==(const Matching& other) const { return pairs_ == other.pairs_; }

 private:
  std::vector<Pair> pairs_;
  std::vector<int> man_partner_;    // index 0 unused
  std::vector<int> woman_partner_;  // index 0 unused
};

// Ordering of a and b from viewer's point of view. Either may be kNobody,
// which ranks strictly below every acceptable agent.
Preference compare(const Instance& instance, Side viewer_side, int viewer,
                   int a, int b);

// Whether the two edges cross: (x - i)(y - j) < 0.
constexpr bool crosses(Pair e1, Pair e2) {
  const long long dm = static_cast<long long>(e2.man) - e1.man;
  const long long dw = static_cast<long long>(e2.woman) - e1.woman;
  return dm * dw < 0;
}

// Blocking condition given how the man compares the candidate woman with
// his current partner, and how the woman compares the candidate man with
// hers. Shared by every component that reasons about blocking.
constexpr bool blocking_condition(Notion notion, Preference man_view,
                                  Preference woman_view) {
  const bool man_strict = man_view == Preference::FirstBetter;
  const bool woman_strict = woman_view == Preference::FirstBetter;
  const bool man_weak = man_view != Preference::SecondBetter;
  const bool woman_weak = woman_view != Preference::SecondBetter;
  switch (notion) {
    case Notion::Super:
      return man_weak && woman_weak;
    case Notion::Strong:
      return (man_strict && woman_weak) || (woman_strict && man_weak);
    case Notion::Weak:
    case Notion::SmiStrict:
      return man_strict && woman_strict;
  }
  return false;
}

// Throws ContractViolation when notion is SmiStrict and instance has ties.
void require_notion_applicable(const Instance& instance, Notion notion);

bool blocks(const Instance& instance, Notion notion, const Matching& matching,
            Pair candidate);

std::vector<Pair> blocking_pairs(const Instance& instance, Notion notion,
                                 const Matching& matching);

std::vector<Pair> noncrossing_blocking_pairs(const Instance& instance,
                                             Notion notion,
                                             const Matching& matching);

enum class Classification { NotNoncrossing, Unstable, Wsnm, Ssnm };

std::string_view to_string(Classification c);

Classification classify(const Instance& instance, Notion notion,
                        const Matching& matching);

inline bool is_wsnm(Classification c) {
  return c == Classification::Wsnm || c == Classification::Ssnm;
}

// Every tie broken by ascending index. The result is SMI-kind.
Instance break_ties_by_index(const Instance& instance);

}  // namespace ncsm
