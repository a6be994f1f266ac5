#include "halcbc/cbc.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "halcbc/bounds.hpp"
#include "halcbc/parallel.hpp"

namespace halcbc {

int minimal_m(std::int64_t p, std::size_t n_points) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("minimal_m: p must be prime");
    if (n_points == 0) throw std::invalid_argument("minimal_m: need N >= 1");
    int m = 1;
    std::int64_t pm = p;
    while (static_cast<std::int64_t>(n_points) >= pm) {
        pm = checked_mul(pm, p);
        ++m;
    }
    return m;
}

std::vector<ExactPoint> mid_simplified_column_exact(std::int64_t p, int m, std::size_t n_points,
                                                    std::int64_t numerator) {
    const PAdicDigits sigma = PAdicDigits::from_q(p, m, numerator);
    std::vector<ExactPoint> out(n_points);
    for (std::size_t n = 0; n < n_points; ++n)
        out[n] = mid_simplified_shift(radical_inverse(p, static_cast<std::int64_t>(n)), sigma, m);
    return out;
}

std::vector<double> mid_simplified_column(std::int64_t p, int m, std::size_t n_points,
                                          std::int64_t numerator) {
    const auto exact = mid_simplified_column_exact(p, m, n_points, numerator);
    std::vector<double> out(n_points);
    for (std::size_t n = 0; n < n_points; ++n) out[n] = exact[n].to_double();
    return out;
}

namespace {

struct DimensionSetup {
    std::int64_t p = 0;
    int m = 0;
    std::int64_t candidates = 0;
};

DimensionSetup setup_dimension(const BaseVector& bases, std::size_t d, std::size_t n_points,
                               const CbcOptions& options) {
    DimensionSetup out;
    out.p = bases.prime(d);
    out.m = options.m_override.empty() ? minimal_m(out.p, n_points)
                                       : options.m_override.at(d);
    if (out.m < 1) throw std::invalid_argument("cbc: m override must be >= 1");
    out.candidates = checked_pow(out.p, out.m);
    if (out.candidates > static_cast<std::int64_t>(options.candidate_cap))
        throw std::invalid_argument("cbc: candidate set " + std::to_string(out.candidates) +
                                    " exceeds cap " + std::to_string(options.candidate_cap));
    return out;
}

// Argmin over candidate numerators with (error, numerator) tie-break.
// Errors are filled per index, then scanned in ascending numerator order.
std::int64_t scan_winner(const std::vector<double>& errors) {
    std::int64_t best = 0;
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(errors.size()); ++a)
        if (errors[static_cast<std::size_t>(a)] < errors[static_cast<std::size_t>(best)]) best = a;
    return best;
}

// Squared errors of every candidate for one dimension, cache path.
std::vector<double> evaluate_candidates(const ErrorCache& cache, const DimensionSetup& dim,
                                        std::size_t n_points, double gamma, int threads) {
    std::vector<double> errors(static_cast<std::size_t>(dim.candidates));
    const int workers = resolve_thread_count(threads);
    std::vector<WceScratch> scratch(static_cast<std::size_t>(std::max(workers, 1)));
    parallel_for(errors.size(), workers, [&](int worker, std::size_t a) {
        const auto column =
            mid_simplified_column(dim.p, dim.m, n_points, static_cast<std::int64_t>(a));
        errors[a] = squared_wce_from_cache(cache, column, gamma,
                                           scratch[static_cast<std::size_t>(worker)]);
    });
    return errors;
}

// Test-only: same errors via the direct formula on the rebuilt point set.
std::vector<double> evaluate_candidates_naive(const std::vector<std::vector<double>>& fixed_columns,
                                              const DimensionSetup& dim, std::size_t n_points,
                                              const WeightSequence& weights, int threads) {
    const std::size_t d = fixed_columns.size();
    std::vector<double> errors(static_cast<std::size_t>(dim.candidates));
    const WeightSequence prefix = weights.prefix(d + 1);
    parallel_for(errors.size(), resolve_thread_count(threads), [&](int, std::size_t a) {
        DoubleMatrix pts(n_points, d + 1);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t n = 0; n < n_points; ++n) pts.at(n, j) = fixed_columns[j][n];
        const auto column =
            mid_simplified_column(dim.p, dim.m, n_points, static_cast<std::int64_t>(a));
        for (std::size_t n = 0; n < n_points; ++n) pts.at(n, d) = column[n];
        errors[a] = squared_wce(pts, prefix);
    });
    return errors;
}

} // namespace

CbcResult cbc_construct(const BaseVector& bases, std::size_t n_points,
                        const WeightSequence& weights, const CbcOptions& options) {
    const std::size_t s = bases.dimension();
    if (weights.dimension() < s)
        throw std::invalid_argument("cbc: weights materialized to fewer dimensions than bases");
    if (!options.m_override.empty() && options.m_override.size() != s)
        throw std::invalid_argument("cbc: m override dimension mismatch");
    const auto t0 = std::chrono::steady_clock::now();

    ErrorCache cache = cache_init(n_points, options.point_cap);
    std::vector<int> ms;
    std::vector<std::int64_t> numerators;
    std::vector<double> sq_errors;
    std::vector<double> bounds_sq;
    std::vector<std::int64_t> candidate_counts;
    std::vector<std::vector<double>> chosen_columns;

    for (std::size_t d = 0; d < s; ++d) {
        const DimensionSetup dim = setup_dimension(bases, d, n_points, options);
        const double gamma = weights.gamma(d);
        const std::vector<double> errors =
            options.naive_eval
                ? evaluate_candidates_naive(chosen_columns, dim, n_points, weights,
                                            options.threads)
                : evaluate_candidates(cache, dim, n_points, gamma, options.threads);
        const std::int64_t winner = scan_winner(errors);

        const auto column = mid_simplified_column(dim.p, dim.m, n_points, winner);
        cache = cache_extend(cache, column, gamma);
        chosen_columns.push_back(column);
        ms.push_back(dim.m);
        numerators.push_back(winner);
        candidate_counts.push_back(dim.candidates);

        // Direct re-evaluation of the accepted prefix.
        DoubleMatrix pts(n_points, d + 1);
        for (std::size_t j = 0; j <= d; ++j)
            for (std::size_t n = 0; n < n_points; ++n) pts.at(n, j) = chosen_columns[j][n];
        sq_errors.push_back(squared_wce(pts, weights.prefix(d + 1)));
        if (n_points >= 2) bounds_sq.push_back(cbc_bound_sq(bases, weights, n_points, d + 1));
    }

    CbcResult result{ShiftVector(bases, std::move(ms), std::move(numerators)),
                     std::move(sq_errors), std::move(bounds_sq), std::move(candidate_counts),
                     0.0};
    result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               t0)
                         .count();
    return result;
}

std::int64_t rescan_dimension(const CbcResult& result, std::size_t d,
                              const WeightSequence& weights, std::size_t n_points,
                              const CbcOptions& options) {
    const std::size_t s = result.shift.dimension();
    if (d >= s) throw std::out_of_range("rescan_dimension: index out of range");

    ErrorCache cache = cache_init(n_points, options.point_cap);
    for (std::size_t j = 0; j < d; ++j) {
        const auto column = mid_simplified_column(result.shift.bases.prime(j),
                                                  result.shift.ms[j], n_points,
                                                  result.shift.numerators[j]);
        cache = cache_extend(cache, column, weights.gamma(j));
    }
    DimensionSetup dim;
    dim.p = result.shift.bases.prime(d);
    dim.m = result.shift.ms[d];
    dim.candidates = checked_pow(dim.p, dim.m);
    const std::vector<double> errors =
        evaluate_candidates(cache, dim, n_points, weights.gamma(d), options.threads);
    return scan_winner(errors);
}

} // namespace halcbc
