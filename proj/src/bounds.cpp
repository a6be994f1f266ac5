#include "halcbc/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace halcbc {

namespace {

void check_args(const BaseVector& bases, const WeightSequence& weights, std::size_t n_points,
                std::size_t d) {
    if (n_points < 2) throw std::invalid_argument("bounds: require N >= 2");
    if (d < 1 || d > bases.dimension() || d > weights.dimension())
        throw std::invalid_argument("bounds: dimension d out of range");
}

} // namespace

double rms_bound_sq(const BaseVector& bases, const WeightSequence& weights,
                    std::size_t n_points, std::size_t d) {
    check_args(bases, weights, n_points, d);
    const double log_n = std::log(static_cast<double>(n_points));
    double prod_log = 1.0, prod_half = 1.0, prod_sixth = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double g = weights.gamma(j);
        const double p = static_cast<double>(bases.prime(j));
        prod_log *= 1.0 + g * log_n * p * p / std::log(p);
        prod_half *= 1.0 + g / 2.0;
        prod_sixth *= 1.0 + g * p / 6.0;
    }
    const double n = static_cast<double>(n_points);
    return (prod_log + prod_half * prod_sixth) / (n * n);
}

double cbc_bound_sq(const BaseVector& bases, const WeightSequence& weights,
                    std::size_t n_points, std::size_t d) {
    check_args(bases, weights, n_points, d);
    const double log_n = std::log(static_cast<double>(n_points));
    double prod_log = 1.0, prod_one = 1.0, prod_sixth = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double g = weights.gamma(j);
        const double p = static_cast<double>(bases.prime(j));
        prod_log *= 1.0 + 2.0 * g * log_n * p * p / std::log(p);
        prod_one *= 1.0 + g;
        prod_sixth *= 1.0 + g * p / 6.0;
    }
    const double n = static_cast<double>(n_points);
    return (prod_log + prod_one * prod_sixth) / (n * n);
}

BoundReport bound_report(const BaseVector& bases, const WeightSequence& weights,
                         std::size_t n_points, std::size_t d) {
    BoundReport report;
    report.n_points = n_points;
    report.d = d;
    report.rms_bound_sq = rms_bound_sq(bases, weights, n_points, d);
    report.cbc_bound_sq = cbc_bound_sq(bases, weights, n_points, d);
    double summability = 0.0;
    for (std::size_t j = 0; j < weights.dimension() && j < bases.dimension(); ++j) {
        const double p = static_cast<double>(bases.prime(j));
        summability += weights.gamma(j) * p * p / std::log(p);
    }
    report.weight_summability = summability;
    return report;
}

} // namespace halcbc
