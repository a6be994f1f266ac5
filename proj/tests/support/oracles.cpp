#include "support/oracles.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace halcbc::test_support {

namespace {

double kernel_1d(double gamma, double x, double y) {
    return 1.0 + gamma * std::min(1.0 - x, 1.0 - y);
}

// (1/G^2) sum over grid midpoints of the one-factor kernel.
double double_integral_1d(double gamma, std::size_t grid) {
    const double g = static_cast<double>(grid);
    double acc = 0.0;
    for (std::size_t u = 0; u < grid; ++u) {
        const double xu = (static_cast<double>(u) + 0.5) / g;
        double row = 0.0;
        for (std::size_t v = 0; v < grid; ++v) {
            const double xv = (static_cast<double>(v) + 0.5) / g;
            row += kernel_1d(gamma, xu, xv);
        }
        acc += row / g;
    }
    return acc / g;
}

double single_integral_1d(double gamma, double x, std::size_t grid) {
    const double g = static_cast<double>(grid);
    double acc = 0.0;
    for (std::size_t u = 0; u < grid; ++u)
        acc += kernel_1d(gamma, x, (static_cast<double>(u) + 0.5) / g);
    return acc / g;
}

} // namespace

double squared_wce_quadrature(const DoubleMatrix& points, const WeightSequence& weights,
                              std::size_t grid) {
    const std::size_t n = points.rows;
    const std::size_t s = points.cols;
    if (n == 0 || s == 0) throw std::invalid_argument("quadrature oracle: empty point set");
    if (weights.dimension() != s)
        throw std::invalid_argument("quadrature oracle: weights dimension mismatch");

    std::map<double, double> ii_by_gamma;
    double term_ii = 1.0;
    for (std::size_t j = 0; j < s; ++j) {
        const double gamma = weights.gamma(j);
        auto it = ii_by_gamma.find(gamma);
        if (it == ii_by_gamma.end())
            it = ii_by_gamma.emplace(gamma, double_integral_1d(gamma, grid)).first;
        term_ii *= it->second;
    }

    double term_single = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double prod = 1.0;
        for (std::size_t j = 0; j < s; ++j)
            prod *= single_integral_1d(weights.gamma(j), points.at(i, j), grid);
        term_single += prod;
    }

    double term_pair = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            double prod = 1.0;
            for (std::size_t j = 0; j < s; ++j)
                prod *= kernel_1d(weights.gamma(j), points.at(i, j), points.at(k, j));
            term_pair += prod;
        }

    const double inv_n = 1.0 / static_cast<double>(n);
    return term_ii - 2.0 * inv_n * term_single + inv_n * inv_n * term_pair;
}

double rms_bound_sq_alt(const BaseVector& bases, const WeightSequence& weights,
                        std::size_t n_points, std::size_t d) {
    const double log_n = std::log(static_cast<double>(n_points));
    double log_a = 0.0, log_b = 0.0, log_c = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double g = weights.gamma(j);
        const double p = static_cast<double>(bases.prime(j));
        log_a += std::log1p(g * log_n * p * p / std::log(p));
        log_b += std::log1p(g / 2.0);
        log_c += std::log1p(g * p / 6.0);
    }
    const double n = static_cast<double>(n_points);
    return (std::exp(log_a) + std::exp(log_b + log_c)) / (n * n);
}

double cbc_bound_sq_alt(const BaseVector& bases, const WeightSequence& weights,
                        std::size_t n_points, std::size_t d) {
    const double log_n = std::log(static_cast<double>(n_points));
    double log_a = 0.0, log_b = 0.0, log_c = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double g = weights.gamma(j);
        const double p = static_cast<double>(bases.prime(j));
        log_a += std::log1p(2.0 * g * log_n * p * p / std::log(p));
        log_b += std::log1p(g);
        log_c += std::log1p(g * p / 6.0);
    }
    const double n = static_cast<double>(n_points);
    return (std::exp(log_a) + std::exp(log_b + log_c)) / (n * n);
}

} // namespace halcbc::test_support
