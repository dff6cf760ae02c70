#include "ncsm/generate.hpp"

#include <algorithm>
#include <random>

namespace ncsm {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n); the modulo bias is negligible for our n.
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

  bool chance(double p) {
    if (p <= 0.0) return false;
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int k = static_cast<int>(v.size()) - 1; k > 0; --k) {
      std::swap(v[static_cast<std::size_t>(k)],
                v[static_cast<std::size_t>(below(k + 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

PreferenceList group(const std::vector<int>& order, double tie_prob,
                     Sampler& rng) {
  PreferenceList list;
  for (int x : order) {
    if (!list.empty() && rng.chance(tie_prob)) {
      list.back().push_back(x);
    } else {
      list.push_back({x});
    }
  }
  return list;
}

}  // namespace

Instance generate(int n_men, int n_women, int max_list_len, double tie_prob,
                  std::uint64_t seed) {
  if (n_men < 0 || n_women < 0 || max_list_len < 0 || !(tie_prob >= 0.0) ||
      tie_prob > 1.0) {
    throw ContractViolation("generate: bad parameters");
  }
  Sampler rng(seed);
  const int cap = std::min(max_list_len, n_women);
  std::vector<std::vector<int>> picks(static_cast<std::size_t>(n_men));
  std::vector<std::vector<int>> pickers(static_cast<std::size_t>(n_women));
  // Stays a permutation of the women across men, so it needs no reset.
  std::vector<int> pool(static_cast<std::size_t>(n_women));
  for (int w = 0; w < n_women; ++w) pool[static_cast<std::size_t>(w)] = w + 1;
  for (int m = 1; m <= n_men; ++m) {
    if (cap == 0) continue;
    const int len = 1 + rng.below(cap);
    // Partial Fisher-Yates: the first len slots are a random ordered sample.
    for (int k = 0; k < len; ++k) {
      const int pick = k + rng.below(n_women - k);
      std::swap(pool[static_cast<std::size_t>(k)],
                pool[static_cast<std::size_t>(pick)]);
      const int w = pool[static_cast<std::size_t>(k)];
      picks[static_cast<std::size_t>(m) - 1].push_back(w);
      pickers[static_cast<std::size_t>(w) - 1].push_back(m);
    }
  }
  std::vector<PreferenceList> men(static_cast<std::size_t>(n_men));
  std::vector<PreferenceList> women(static_cast<std::size_t>(n_women));
  for (int m = 0; m < n_men; ++m) {
    men[static_cast<std::size_t>(m)] =
        group(picks[static_cast<std::size_t>(m)], tie_prob, rng);
  }
  for (int w = 0; w < n_women; ++w) {
    rng.shuffle(pickers[static_cast<std::size_t>(w)]);
    women[static_cast<std::size_t>(w)] =
        group(pickers[static_cast<std::size_t>(w)], tie_prob, rng);
  }
  return Instance(std::move(men), std::move(women));
}

Instance generate_complete(int n, std::uint64_t seed) {
  if (n < 0) throw ContractViolation("generate_complete: negative size");
  Sampler rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  auto make_side = [&]() {
    std::vector<PreferenceList> side(static_cast<std::size_t>(n));
    for (auto& list : side) {
      for (int k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k + 1;
      rng.shuffle(order);
      for (int x : order) list.push_back({x});
    }
    return side;
  };
  std::vector<PreferenceList> men = make_side();
  std::vector<PreferenceList> women = make_side();
  return Instance(std::move(men), std::move(women));
}

}  // namespace ncsm
