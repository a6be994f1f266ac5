#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "halcbc/halton.hpp"
#include "halcbc/wce.hpp"
#include "halcbc/weights.hpp"

namespace halcbc {

// Smallest m >= 1 with N < p^m, by checked integer multiplication.
int minimal_m(std::int64_t p, std::size_t n_points);

struct CbcOptions {
    std::size_t point_cap = kDefaultPointCap;
    std::size_t candidate_cap = 1'000'000; // per-dimension |Q(p^m)| limit
    int threads = 0;                       // 0 = resolve from env / hardware
    std::vector<int> m_override;           // empty = minimal m per dimension
    // Evaluate candidates by rebuilding the full point set and calling the
    // direct formula instead of the cache. Test-only cross-check; much slower.
    bool naive_eval = false;
};

struct CbcResult {
    ShiftVector shift;
    std::vector<double> sq_errors;        // e^2_{N,d} for d = 1..s, direct re-evaluation
    std::vector<double> cbc_bounds_sq;    // empty when N < 2
    std::vector<std::int64_t> candidate_counts;
    double wall_ms = 0.0;
};

/**
 * Greedy per-dimension search: for d = 1..s choose the numerator in
 * Q(p_d^{m_d}) minimizing the squared worst-case error of the first d
 * mid-simplified-shifted coordinates, previous components held fixed.
 * Ties break toward the smallest numerator. Candidates within a dimension
 * are evaluated in parallel; the winner scan is a fixed-order reduction, so
 * results do not depend on the thread count.
 */
CbcResult cbc_construct(const BaseVector& bases, std::size_t n_points,
                        const WeightSequence& weights, const CbcOptions& options = {});

// Re-runs the argmin for dimension d (0-based) with all other components
// fixed as constructed. Returns the winning numerator, which must equal the
// stored one; used as a post-hoc optimality audit.
std::int64_t rescan_dimension(const CbcResult& result, std::size_t d,
                              const WeightSequence& weights, std::size_t n_points,
                              const CbcOptions& options = {});

// Candidate column for one dimension: the mid-simplified shift of the first
// N one-dimensional Halton points by numerator/p^m, as doubles.
std::vector<double> mid_simplified_column(std::int64_t p, int m, std::size_t n_points,
                                          std::int64_t numerator);

// Exact variant of the same column.
std::vector<ExactPoint> mid_simplified_column_exact(std::int64_t p, int m, std::size_t n_points,
                                                    std::int64_t numerator);

} // namespace halcbc
