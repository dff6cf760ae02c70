#pragma once

#include <cstdint>

#include "ncsm/core.hpp"

namespace ncsm {

// Random instance. Each man picks between 1 and min(max_list_len, n_women)
// distinct women in random order; each woman lists exactly the men who
// picked her, shuffled. Consecutive entries of a list share a tie with
// probability tie_prob, so tie_prob = 0 gives strict lists.
//
// Sampling uses raw mt19937_64 output (modulo and shifts only), so the
// result depends on the seed alone, not on the standard library.
Instance generate(int n_men, int n_women, int max_list_len, double tie_prob,
                  std::uint64_t seed);

// Every man lists all women and every woman all men, strict random order.
Instance generate_complete(int n, std::uint64_t seed);

}  // namespace ncsm
