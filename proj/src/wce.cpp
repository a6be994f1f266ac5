#include "halcbc/wce.hpp"

#include <stdexcept>
#include <string>

#include "halcbc/kernels.hpp"
#include "halcbc/numeric.hpp"

namespace halcbc {

DoubleMatrix to_matrix(const PointSet& points) {
    DoubleMatrix m(points.count(), points.dimension());
    m.data = points.to_doubles();
    return m;
}

ErrorCache cache_init(std::size_t n_points, std::size_t point_cap) {
    if (n_points == 0) throw std::invalid_argument("cache_init: need N >= 1");
    if (n_points > point_cap)
        throw std::invalid_argument("cache_init: N = " + std::to_string(n_points) +
                                    " exceeds the point cap " + std::to_string(point_cap));
    ErrorCache cache;
    cache.points = n_points;
    cache.pair.assign(n_points * n_points, 1.0);
    cache.linear.assign(n_points, 1.0);
    return cache;
}

namespace {

void check_column(const ErrorCache& cache, std::span<const double> column) {
    if (column.size() != cache.points)
        throw std::invalid_argument("column length does not match cached point count");
}

void prepare_scratch(WceScratch& scratch, std::span<const double> column) {
    scratch.w.resize(column.size());
    scratch.row_sums.resize(column.size());
    for (std::size_t k = 0; k < column.size(); ++k) scratch.w[k] = 1.0 - column[k];
}

} // namespace

ErrorCache cache_extend(const ErrorCache& cache, std::span<const double> column, double gamma) {
    check_column(cache, column);
    const std::size_t n = cache.points;
    ErrorCache out = cache;
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = 1.0 - column[k];
    const auto& kops = kernels::ops();
    for (std::size_t row = 0; row < n; ++row)
        kops.pair_row_scale(out.pair.data() + row * n, w.data(), n, w[row], gamma);
    kops.linear_scale(out.linear.data(), column.data(), n, 0.5 * gamma);
    out.constant = cache.constant * (1.0 + gamma / 3.0);
    out.dim = cache.dim + 1;
    return out;
}

double squared_wce_from_cache(const ErrorCache& cache, std::span<const double> column,
                              double gamma, WceScratch& scratch) {
    check_column(cache, column);
    prepare_scratch(scratch, column);
    const std::size_t n = cache.points;
    const auto& kops = kernels::ops();
    for (std::size_t row = 0; row < n; ++row)
        scratch.row_sums[row] = kops.pair_row_sum(cache.pair.data() + row * n, scratch.w.data(),
                                                  n, scratch.w[row], gamma, 1.0);
    const double pair_sum = pairwise_sum(scratch.row_sums);
    const double linear_sum = kops.poly_sum(cache.linear.data(), column.data(), n,
                                            1.0 + 0.5 * gamma, 0.0, -0.5 * gamma);
    const double nn = static_cast<double>(n);
    return cache.constant * (1.0 + gamma / 3.0) - (2.0 * linear_sum) / nn +
           pair_sum / (nn * nn);
}

double squared_wce_from_cache(const ErrorCache& cache, std::span<const double> column,
                              double gamma) {
    WceScratch scratch;
    return squared_wce_from_cache(cache, column, gamma, scratch);
}

double squared_wce(const DoubleMatrix& points, const WeightSequence& weights) {
    const std::size_t n = points.rows;
    const std::size_t s = points.cols;
    if (n == 0 || s == 0) throw std::invalid_argument("squared_wce: empty point set");
    if (weights.dimension() != s)
        throw std::invalid_argument("squared_wce: weights dimension " +
                                    std::to_string(weights.dimension()) +
                                    " does not match point dimension " + std::to_string(s));

    double const_term = 1.0;
    for (std::size_t j = 0; j < s; ++j) const_term *= 1.0 + weights.gamma(j) / 3.0;

    double linear_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double prod = 1.0;
        for (std::size_t j = 0; j < s; ++j) {
            const double x = points.at(i, j);
            prod *= 1.0 + 0.5 * weights.gamma(j) * (1.0 - x * x);
        }
        linear_sum += prod;
    }

    std::vector<double> row_sums(n);
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            double prod = 1.0;
            for (std::size_t j = 0; j < s; ++j) {
                const double a = 1.0 - points.at(i, j);
                const double b = 1.0 - points.at(k, j);
                prod *= 1.0 + weights.gamma(j) * (a < b ? a : b);
            }
            row += prod;
        }
        row_sums[i] = row;
    }
    const double pair_sum = pairwise_sum(row_sums);

    const double nn = static_cast<double>(n);
    return const_term - (2.0 * linear_sum) / nn + pair_sum / (nn * nn);
}

double squared_wce(const PointSet& points, const WeightSequence& weights) {
    return squared_wce(to_matrix(points), weights);
}

} // namespace halcbc
