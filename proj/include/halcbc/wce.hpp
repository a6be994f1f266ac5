#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "halcbc/halton.hpp"
#include "halcbc/weights.hpp"

namespace halcbc {

// Memory guard for the N x N pair table (default cap: 4096 points = 128 MiB).
inline constexpr std::size_t kDefaultPointCap = 4096;

// Row-major doubles, rows = points, cols = coordinates.
struct DoubleMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    DoubleMatrix() = default;
    DoubleMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

DoubleMatrix to_matrix(const PointSet& points);

/**
 * Per-dimension running products of the squared-error closed form:
 *   pair[n*N+k] = prod_j (1 + gamma_j * min(1-x_{n,j}, 1-x_{k,j}))
 *   linear[n]   = prod_j (1 + gamma_j/2 * (1 - x_{n,j}^2))
 *   constant    = prod_j (1 + gamma_j/3)
 * An empty cache (dim = 0) holds all ones. Extending by a candidate column
 * makes each greedy search step O(N^2) instead of O(d N^2).
 */
struct ErrorCache {
    std::size_t points = 0;
    std::size_t dim = 0;
    std::vector<double> pair;   // points x points, row-major, symmetric
    std::vector<double> linear; // points
    double constant = 1.0;
};

ErrorCache cache_init(std::size_t n_points, std::size_t point_cap = kDefaultPointCap);

// New cache with one more coordinate absorbed. Column values must lie in [0,1).
ErrorCache cache_extend(const ErrorCache& cache, std::span<const double> column, double gamma);

// Reusable buffers for the candidate loop (one per worker thread).
struct WceScratch {
    std::vector<double> w;        // 1 - y
    std::vector<double> row_sums; // per-row pair sums, reduced pairwise
};

// Squared worst-case error of the cached point set with `column` appended as
// dimension dim+1, without mutating the cache. O(N^2).
double squared_wce_from_cache(const ErrorCache& cache, std::span<const double> column,
                              double gamma, WceScratch& scratch);
double squared_wce_from_cache(const ErrorCache& cache, std::span<const double> column,
                              double gamma);

// Direct closed-form evaluation, O(s N^2). Independent of the cache path and
// of the kernel backends; used as the reference route.
double squared_wce(const DoubleMatrix& points, const WeightSequence& weights);
double squared_wce(const PointSet& points, const WeightSequence& weights);

} // namespace halcbc
