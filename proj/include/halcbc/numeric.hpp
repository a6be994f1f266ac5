#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

namespace halcbc {

bool is_prime(std::int64_t n);

// Throwing integer arithmetic. Every p^m and every rational numerator in this
// library goes through these, so a configuration that would overflow int64
// fails up front instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, int exp);

// Deterministic pairwise (tree) summation. Used for the O(N^2) pair sums so
// the rounding error grows like log N instead of N, and so results do not
// depend on how work was split across threads.
double pairwise_sum(std::span<const double> values);

} // namespace halcbc
