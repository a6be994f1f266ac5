#pragma once

#include <cstddef>

#include "halcbc/halton.hpp"
#include "halcbc/weights.hpp"

namespace halcbc {

// Right-hand sides of the two squared-error bounds, natural logarithms.
// Only the ratio log(N)/log(p) enters, so the value is independent of the
// logarithm base as long as both use the same one.

// (1/N^2) [ prod_{j<=d} (1 + gamma_j log(N) p_j^2 / log(p_j))
//           + prod_{j<=d} (1 + gamma_j/2) * prod_{j<=d} (1 + gamma_j p_j / 6) ]
double rms_bound_sq(const BaseVector& bases, const WeightSequence& weights,
                    std::size_t n_points, std::size_t d);

// (1/N^2) [ prod_{j<=d} (1 + 2 gamma_j log(N) p_j^2 / log(p_j))
//           + prod_{j<=d} (1 + gamma_j) * prod_{j<=d} (1 + gamma_j p_j / 6) ]
double cbc_bound_sq(const BaseVector& bases, const WeightSequence& weights,
                    std::size_t n_points, std::size_t d);

struct BoundReport {
    std::size_t n_points = 0;
    std::size_t d = 0;
    double rms_bound_sq = 0.0;
    double cbc_bound_sq = 0.0;
    // sum_j gamma_j p_j^2 / log p_j over the materialized weights; finiteness
    // of this sum drives the dimension-independent N^{-1+delta} rate.
    double weight_summability = 0.0;
};

BoundReport bound_report(const BaseVector& bases, const WeightSequence& weights,
                         std::size_t n_points, std::size_t d);

} // namespace halcbc
