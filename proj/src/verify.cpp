#include "halcbc/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "halcbc/numeric.hpp"
#include "halcbc/parallel.hpp"
#include "halcbc/rng.hpp"

namespace halcbc {

namespace {

// Shifted coordinates t_n = h_n (+)^simp sigma for the closed forms, exact
// until the final double conversion.
std::vector<double> simplified_column(std::int64_t p, int m, std::size_t n_points,
                                      std::int64_t numerator) {
    const PAdicDigits sigma = PAdicDigits::from_q(p, m, numerator);
    std::vector<double> t(n_points);
    for (std::size_t n = 0; n < n_points; ++n)
        t[n] = simplified_shift(radical_inverse(p, static_cast<std::int64_t>(n)), sigma, m)
                   .to_exact()
                   .to_double();
    return t;
}

void check_sigma_range(std::int64_t pm, std::int64_t numerator) {
    if (numerator < 0 || numerator >= pm)
        throw std::invalid_argument("sigma numerator out of [0, p^m)");
}

} // namespace

double cell_average_sq_error_1d(std::int64_t p, std::size_t n_points, double gamma,
                                std::int64_t sigma_numerator) {
    const int m = minimal_m(p, n_points);
    const std::int64_t pm_int = checked_pow(p, m);
    check_sigma_range(pm_int, sigma_numerator);
    const std::vector<double> t = simplified_column(p, m, n_points, sigma_numerator);

    const double pm = static_cast<double>(pm_int);
    const double inv_pm = 1.0 / pm;
    const std::size_t n = n_points;

    // linear term: 1 + g/2 (1 - t^2) - (g/2) p^-m t - g / (6 p^2m)
    const double c0 = 1.0 + 0.5 * gamma - gamma / (6.0 * pm * pm);
    const double c1 = -0.5 * gamma * inv_pm;
    const double c2 = -0.5 * gamma;
    double linear_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        linear_sum += c0 + t[i] * (c1 + t[i] * c2);

    // diagonal term: -g/(2 p^m) + 1 + g - g t_n
    const double d0 = 1.0 + gamma - 0.5 * gamma * inv_pm;
    double diag_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) diag_sum += d0 - gamma * t[i];

    // off-diagonal term: -g/(2 p^m) + 1 + g min(1 - t_n, 1 - t_k)
    const double e0 = 1.0 - 0.5 * gamma * inv_pm;
    std::vector<double> row_sums(n);
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            const double a = 1.0 - t[i];
            const double b = 1.0 - t[k];
            row += e0 + gamma * (a < b ? a : b);
        }
        row_sums[i] = row;
    }
    const double off_sum = pairwise_sum(row_sums);

    const double nn = static_cast<double>(n);
    return (1.0 + gamma / 3.0) - (2.0 * linear_sum) / nn + (diag_sum + off_sum) / (nn * nn);
}

double cell_average_sq_error_appended(const ErrorCache& cache, std::int64_t p,
                                      std::size_t n_points, double gamma,
                                      std::int64_t sigma_numerator) {
    if (cache.points != n_points)
        throw std::invalid_argument("appended cell average: cache built for a different N");
    const int m = minimal_m(p, n_points);
    const std::int64_t pm_int = checked_pow(p, m);
    check_sigma_range(pm_int, sigma_numerator);
    const std::vector<double> t = simplified_column(p, m, n_points, sigma_numerator);

    const double pm = static_cast<double>(pm_int);
    const double inv_pm = 1.0 / pm;
    const std::size_t n = n_points;

    const double c0 = 1.0 + 0.5 * gamma - gamma / (6.0 * pm * pm);
    const double c1 = -0.5 * gamma * inv_pm;
    const double c2 = -0.5 * gamma;
    double linear_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        linear_sum += cache.linear[i] * (c0 + t[i] * (c1 + t[i] * c2));

    const double d0 = 1.0 + gamma - 0.5 * gamma * inv_pm;
    double diag_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        diag_sum += cache.pair[i * n + i] * (d0 - gamma * t[i]);

    const double e0 = 1.0 - 0.5 * gamma * inv_pm;
    std::vector<double> row_sums(n);
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            const double a = 1.0 - t[i];
            const double b = 1.0 - t[k];
            row += cache.pair[i * n + k] * (e0 + gamma * (a < b ? a : b));
        }
        row_sums[i] = row;
    }
    const double off_sum = pairwise_sum(row_sums);

    const double nn = static_cast<double>(n);
    return cache.constant * (1.0 + gamma / 3.0) - (2.0 * linear_sum) / nn +
           (diag_sum + off_sum) / (nn * nn);
}

ExactPoint padic_shift_cell_midpoint(const PAdicDigits& x, int m_total, std::int64_t a) {
    const std::int64_t p = x.base();
    if (m_total < 1) throw std::invalid_argument("cell midpoint shift: M must be >= 1");
    const std::int64_t pm = checked_pow(p, m_total);
    check_sigma_range(pm, a);
    if (x.digit_count() > static_cast<std::size_t>(m_total))
        throw std::invalid_argument("cell midpoint shift: x has more than M digits");

    if (p == 2) {
        // 1/(2 * 2^M) = 2^-(M+1): the offset is a finite dyadic rational.
        const std::int64_t num = checked_add(checked_mul(a, 2), 1);
        const PAdicDigits sigma = PAdicDigits::from_q(2, m_total + 1, num);
        return padic_shift(x, sigma).to_exact();
    }

    // Odd p: digits of a/p^M followed by the repeating tail (p-1)/2 of the
    // half-cell offset. The digit-vector preimages add as integers below
    // p^M; at most one carry reaches the tail and is absorbed by its first
    // digit, since (p-1)/2 + 1 <= p - 1.
    const std::int64_t u = monna_inverse(x);
    const std::int64_t a_rev = monna_inverse(PAdicDigits::from_q(p, m_total, a));
    const std::int64_t w = checked_add(u, a_rev);
    const std::int64_t w_lo = w % pm;
    const std::int64_t w_hi = w / pm; // 0 or 1

    const ExactPoint head = radical_inverse(p, w_lo).to_exact();
    if (w_hi == 0) {
        // tail value: sum_{k > M} ((p-1)/2) p^-k = 1/(2 p^M)
        return head.plus(ExactPoint(1, checked_mul(2, pm)));
    }
    // carried tail: ((p-1)/2 + 1) p^-(M+1) + 1/(2 p^(M+1)) = (p+2)/(2 p^(M+1))
    const std::int64_t den = checked_mul(2, checked_mul(pm, p));
    return head.plus(ExactPoint(p + 2, den));
}

double cell_average_quadrature_1d(std::int64_t p, std::size_t n_points, double gamma,
                                  std::int64_t sigma_numerator, int extra_digits, int threads) {
    const int m = minimal_m(p, n_points);
    check_sigma_range(checked_pow(p, m), sigma_numerator);
    const int m_total = m + extra_digits;
    const std::int64_t cells = checked_pow(p, extra_digits);
    const std::int64_t base_num = checked_mul(sigma_numerator, cells);
    const WeightSequence w1 = WeightSequence::unchecked({gamma});

    std::vector<PAdicDigits> h;
    h.reserve(n_points);
    for (std::size_t n = 0; n < n_points; ++n)
        h.push_back(radical_inverse(p, static_cast<std::int64_t>(n)));

    std::vector<double> values(static_cast<std::size_t>(cells));
    parallel_for(values.size(), resolve_thread_count(threads), [&](int, std::size_t t) {
        DoubleMatrix pts(n_points, 1);
        const std::int64_t a = base_num + static_cast<std::int64_t>(t);
        for (std::size_t n = 0; n < n_points; ++n)
            pts.at(n, 0) = padic_shift_cell_midpoint(h[n], m_total, a).to_double();
        values[t] = squared_wce(pts, w1);
    });
    return pairwise_sum(values) / static_cast<double>(cells);
}

double cell_average_quadrature_appended(const DoubleMatrix& prior,
                                        std::span<const double> prior_gammas, std::int64_t p,
                                        std::size_t n_points, double gamma,
                                        std::int64_t sigma_numerator, int extra_digits,
                                        int threads) {
    if (prior.rows != n_points || prior.cols != prior_gammas.size())
        throw std::invalid_argument("appended quadrature: prior shape mismatch");
    const int m = minimal_m(p, n_points);
    check_sigma_range(checked_pow(p, m), sigma_numerator);
    const int m_total = m + extra_digits;
    const std::int64_t cells = checked_pow(p, extra_digits);
    const std::int64_t base_num = checked_mul(sigma_numerator, cells);

    std::vector<double> gammas(prior_gammas.begin(), prior_gammas.end());
    gammas.push_back(gamma);
    const WeightSequence weights = WeightSequence::unchecked(std::move(gammas));

    std::vector<PAdicDigits> h;
    h.reserve(n_points);
    for (std::size_t n = 0; n < n_points; ++n)
        h.push_back(radical_inverse(p, static_cast<std::int64_t>(n)));

    const std::size_t d = prior.cols;
    std::vector<double> values(static_cast<std::size_t>(cells));
    parallel_for(values.size(), resolve_thread_count(threads), [&](int, std::size_t t) {
        DoubleMatrix pts(n_points, d + 1);
        for (std::size_t n = 0; n < n_points; ++n)
            for (std::size_t j = 0; j < d; ++j) pts.at(n, j) = prior.at(n, j);
        const std::int64_t a = base_num + static_cast<std::int64_t>(t);
        for (std::size_t n = 0; n < n_points; ++n)
            pts.at(n, d) = padic_shift_cell_midpoint(h[n], m_total, a).to_double();
        values[t] = squared_wce(pts, weights);
    });
    return pairwise_sum(values) / static_cast<double>(cells);
}

std::pair<std::int64_t, double> exhaustive_search_1d(std::int64_t p, std::size_t n_points,
                                                     double gamma, std::size_t cap) {
    const int m = minimal_m(p, n_points);
    const std::int64_t pm = checked_pow(p, m);
    if (pm > static_cast<std::int64_t>(cap))
        throw std::invalid_argument("exhaustive_search_1d: search space exceeds cap");
    // Same evaluator as the greedy step: near-ties must rank identically in
    // both searches, so the brute force scans the identical doubles.
    const ErrorCache empty = cache_init(n_points);
    WceScratch scratch;
    std::int64_t best_a = 0;
    double best_err = 0.0;
    for (std::int64_t a = 0; a < pm; ++a) {
        const auto column = mid_simplified_column(p, m, n_points, a);
        const double err = squared_wce_from_cache(empty, column, gamma, scratch);
        if (a == 0 || err < best_err) {
            best_a = a;
            best_err = err;
        }
    }
    return {best_a, best_err};
}

std::pair<ShiftVector, double> exhaustive_search_full(const BaseVector& bases,
                                                      std::size_t n_points,
                                                      const WeightSequence& weights,
                                                      std::size_t cap) {
    const std::size_t s = bases.dimension();
    if (weights.dimension() < s)
        throw std::invalid_argument("exhaustive_search_full: weights too short");
    std::vector<int> ms(s);
    std::vector<std::int64_t> sizes(s);
    std::int64_t total = 1;
    for (std::size_t j = 0; j < s; ++j) {
        ms[j] = minimal_m(bases.prime(j), n_points);
        sizes[j] = checked_pow(bases.prime(j), ms[j]);
        total = checked_mul(total, sizes[j]);
    }
    if (total > static_cast<std::int64_t>(cap))
        throw std::invalid_argument("exhaustive_search_full: search space exceeds cap");

    std::vector<std::int64_t> current(s, 0), best(s, 0);
    double best_err = 0.0;
    bool first = true;
    WceScratch scratch;
    while (true) {
        ErrorCache cache = cache_init(n_points);
        for (std::size_t j = 0; j + 1 < s; ++j) {
            const auto column = mid_simplified_column(bases.prime(j), ms[j], n_points, current[j]);
            cache = cache_extend(cache, column, weights.gamma(j));
        }
        const auto last =
            mid_simplified_column(bases.prime(s - 1), ms[s - 1], n_points, current[s - 1]);
        const double err = squared_wce_from_cache(cache, last, weights.gamma(s - 1), scratch);
        if (first || err < best_err) {
            best = current;
            best_err = err;
            first = false;
        }
        // advance mixed-radix counter, last dimension fastest, so the first
        // minimum hit is the lexicographically smallest numerator tuple
        std::size_t j = s;
        while (j > 0) {
            --j;
            if (++current[j] < sizes[j]) break;
            current[j] = 0;
            if (j == 0) return {ShiftVector(bases, ms, best), best_err};
        }
    }
}

double shift_invariance_check(std::int64_t p, TestFunction f, const PAdicDigits& sigma, int k,
                              double cap_value) {
    if (k < 1 || k > 20) throw std::invalid_argument("shift_invariance_check: need 1 <= K <= 20");
    if (sigma.base() != p) throw std::invalid_argument("shift_invariance_check: base mismatch");
    const std::int64_t pk = checked_pow(p, k);
    const auto eval = [&](double x) {
        switch (f) {
            case TestFunction::square: return x * x;
            case TestFunction::identity: return x;
            case TestFunction::min_cap: return std::min(1.0 - x, cap_value);
        }
        return 0.0;
    };
    double sum_shifted = 0.0, sum_plain = 0.0;
    for (std::int64_t a = 0; a < pk; ++a) {
        const PAdicDigits grid_point = PAdicDigits::from_q(p, k, a);
        const double shifted = simplified_shift(grid_point, sigma, k).to_exact().to_double();
        sum_shifted += eval(shifted);
        sum_plain += eval(static_cast<double>(a) / static_cast<double>(pk));
    }
    return std::abs(sum_shifted - sum_plain) / static_cast<double>(pk);
}

McEstimate mc_rms_estimate(const BaseVector& bases, std::size_t n_points,
                           const WeightSequence& weights, std::size_t trials,
                           std::uint64_t seed, int threads) {
    if (trials == 0) throw std::invalid_argument("mc_rms_estimate: need trials >= 1");
    const std::size_t s = bases.dimension();
    const WeightSequence prefix = weights.prefix(s);

    std::vector<int> digit_counts(s);
    for (std::size_t j = 0; j < s; ++j) {
        digit_counts[j] = minimal_m(bases.prime(j), n_points) + 16;
        if (digit_counts[j] > 64)
            throw std::invalid_argument("mc_rms_estimate: shift digit count exceeds 64");
    }

    std::vector<std::vector<PAdicDigits>> halton_digits(s);
    for (std::size_t j = 0; j < s; ++j) {
        halton_digits[j].reserve(n_points);
        for (std::size_t n = 0; n < n_points; ++n)
            halton_digits[j].push_back(
                radical_inverse(bases.prime(j), static_cast<std::int64_t>(n)));
    }

    const CounterRng rng{seed};
    std::vector<double> sq(trials);
    parallel_for(trials, resolve_thread_count(threads), [&](int, std::size_t trial) {
        DoubleMatrix pts(n_points, s);
        for (std::size_t j = 0; j < s; ++j) {
            const std::uint32_t p = static_cast<std::uint32_t>(bases.prime(j));
            std::vector<std::uint32_t> digits(static_cast<std::size_t>(digit_counts[j]));
            for (std::size_t r = 0; r < digits.size(); ++r) {
                const std::uint64_t counter =
                    (static_cast<std::uint64_t>(trial) * s + j) * 64 + r;
                digits[r] = rng.below(counter, p);
            }
            const PAdicDigits sigma = PAdicDigits::from_digits(bases.prime(j), std::move(digits));
            for (std::size_t n = 0; n < n_points; ++n)
                pts.at(n, j) = padic_shift(halton_digits[j][n], sigma).to_double();
        }
        sq[trial] = squared_wce(pts, prefix);
    });

    McEstimate out;
    out.trials = trials;
    double mean = 0.0;
    for (double v : sq) mean += v;
    mean /= static_cast<double>(trials);
    out.mean_sq = mean;
    if (trials > 1) {
        double var = 0.0;
        for (double v : sq) var += (v - mean) * (v - mean);
        var /= static_cast<double>(trials - 1);
        out.std_error = std::sqrt(var / static_cast<double>(trials));
    }
    return out;
}

namespace {

void add_inequality(VerifyReport& report, std::string name, double lhs, double rhs, double tol) {
    CheckResult check;
    check.name = std::move(name);
    check.lhs = lhs;
    check.rhs = rhs;
    check.slack = rhs + tol - lhs;
    check.pass = check.slack >= 0.0;
    report.checks.push_back(std::move(check));
}

void add_agreement(VerifyReport& report, std::string name, double lhs, double rhs, double tol) {
    CheckResult check;
    check.name = std::move(name);
    check.lhs = lhs;
    check.rhs = rhs;
    check.slack = tol - std::abs(lhs - rhs);
    check.pass = check.slack >= 0.0;
    report.checks.push_back(std::move(check));
}

std::string case_tag(std::int64_t p, std::size_t n, double gamma) {
    return "p=" + std::to_string(p) + "/N=" + std::to_string(n) + "/gamma=" + std::to_string(gamma);
}

} // namespace

VerifyReport run_verification(const VerifyGrid& grid, const VerifyOptions& options) {
    constexpr double kIneqTol = 1e-10;
    constexpr double kQuadTol = 2e-4;
    constexpr double kInvarianceTol = 1e-12;
    VerifyReport report;
    bool injected = false;

    // Lemma-1-style per-cell inequalities plus quadrature agreement.
    for (std::int64_t p : grid.primes) {
        for (std::size_t n : grid.counts) {
            const int m = minimal_m(p, n);
            const std::int64_t pm = checked_pow(p, m);
            for (double gamma : grid.gammas) {
                const WeightSequence w1 = WeightSequence::unchecked({gamma});
                for (std::int64_t a = 0; a < pm; ++a) {
                    DoubleMatrix pts(n, 1);
                    const auto column = mid_simplified_column(p, m, n, a);
                    for (std::size_t i = 0; i < n; ++i) pts.at(i, 0) = column[i];
                    const double lhs = squared_wce(pts, w1);
                    const double rhs = cell_average_sq_error_1d(p, n, gamma, a);
                    add_inequality(report,
                                   "cell-average-1d/" + case_tag(p, n, gamma) +
                                       "/sigma=" + std::to_string(a),
                                   lhs, rhs, kIneqTol);
                    if (grid.with_quadrature) {
                        double closed = rhs;
                        if (!injected && options.inject_lhs_offset != 0.0) {
                            closed += options.inject_lhs_offset;
                            injected = true;
                        }
                        const double quad = cell_average_quadrature_1d(
                            p, n, gamma, a, grid.quad_digits, options.threads);
                        add_agreement(report,
                                      "cell-average-1d-quadrature/" + case_tag(p, n, gamma) +
                                          "/sigma=" + std::to_string(a),
                                      closed, quad, kQuadTol);
                    }
                }
                // min over the cell grid is bounded by the mean of the cell averages
                double min_lhs = 0.0, mean_rhs = 0.0;
                for (std::int64_t a = 0; a < pm; ++a) {
                    DoubleMatrix pts(n, 1);
                    const auto column = mid_simplified_column(p, m, n, a);
                    for (std::size_t i = 0; i < n; ++i) pts.at(i, 0) = column[i];
                    const double err = squared_wce(pts, w1);
                    min_lhs = a == 0 ? err : std::min(min_lhs, err);
                    mean_rhs += cell_average_sq_error_1d(p, n, gamma, a);
                }
                mean_rhs /= static_cast<double>(pm);
                add_inequality(report, "min-vs-mean/" + case_tag(p, n, gamma), min_lhs, mean_rhs,
                               kIneqTol);
            }
        }
    }

    // Appended (one fixed prior coordinate: base-2 column with its greedily
    // chosen shift, weight 1).
    CbcOptions prior_options;
    prior_options.threads = options.threads;
    for (std::size_t n : grid.counts) {
        const CbcResult prior = cbc_construct(BaseVector({2}), n,
                                              WeightSequence::explicit_list({1.0}), prior_options);
        const auto prior_column =
            mid_simplified_column(2, prior.shift.ms[0], n, prior.shift.numerators[0]);
        ErrorCache cache = cache_init(n);
        cache = cache_extend(cache, prior_column, 1.0);
        DoubleMatrix prior_pts(n, 1);
        for (std::size_t i = 0; i < n; ++i) prior_pts.at(i, 0) = prior_column[i];
        const std::vector<double> prior_gammas{1.0};

        for (std::int64_t p : grid.primes) {
            const int m = minimal_m(p, n);
            const std::int64_t pm = checked_pow(p, m);
            for (double gamma : grid.gammas) {
                const WeightSequence w2 = WeightSequence::unchecked({1.0, gamma});
                for (std::int64_t a = 0; a < pm; ++a) {
                    DoubleMatrix pts(n, 2);
                    const auto column = mid_simplified_column(p, m, n, a);
                    for (std::size_t i = 0; i < n; ++i) {
                        pts.at(i, 0) = prior_column[i];
                        pts.at(i, 1) = column[i];
                    }
                    const double lhs = squared_wce(pts, w2);
                    const double rhs = cell_average_sq_error_appended(cache, p, n, gamma, a);
                    add_inequality(report,
                                   "cell-average-appended/" + case_tag(p, n, gamma) +
                                       "/sigma=" + std::to_string(a),
                                   lhs, rhs, kIneqTol);
                    if (grid.with_quadrature) {
                        const double quad = cell_average_quadrature_appended(
                            prior_pts, prior_gammas, p, n, gamma, a, grid.quad_digits,
                            options.threads);
                        add_agreement(report,
                                      "cell-average-appended-quadrature/" + case_tag(p, n, gamma) +
                                          "/sigma=" + std::to_string(a),
                                      rhs, quad, kQuadTol);
                    }
                }
            }
        }
    }

    // Averaging identity on a small subgrid: the mean of the closed-form
    // cell averages equals the full-interval quadrature mean.
    if (grid.with_quadrature) {
        for (std::int64_t p : {std::int64_t{2}, std::int64_t{3}}) {
            for (std::size_t n : {std::size_t{2}, std::size_t{4}}) {
                const int m = minimal_m(p, n);
                const std::int64_t pm = checked_pow(p, m);
                double mean_closed = 0.0, mean_quad = 0.0;
                for (std::int64_t a = 0; a < pm; ++a) {
                    mean_closed += cell_average_sq_error_1d(p, n, 1.0, a);
                    mean_quad += cell_average_quadrature_1d(p, n, 1.0, a, grid.quad_digits,
                                                            options.threads);
                }
                mean_closed /= static_cast<double>(pm);
                mean_quad /= static_cast<double>(pm);
                add_agreement(report,
                              "averaging-identity/p=" + std::to_string(p) +
                                  "/N=" + std::to_string(n) + "/gamma=1",
                              mean_closed, mean_quad, kQuadTol);
            }
        }
    }

    // Shift invariance of grid averages under the simplified shift.
    {
        const struct {
            std::int64_t p;
            int k;
        } invariance_grid[] = {{2, 10}, {3, 6}, {5, 5}};
        const TestFunction functions[] = {TestFunction::square, TestFunction::identity,
                                          TestFunction::min_cap};
        const char* fnames[] = {"x^2", "x", "min(1-x,0.4)"};
        for (const auto& [p, k] : invariance_grid) {
            std::vector<PAdicDigits> sigmas;
            sigmas.push_back(PAdicDigits(p));
            sigmas.push_back(PAdicDigits::from_q(p, 1, 1));
            sigmas.push_back(PAdicDigits::from_q(p, 2, checked_pow(p, 2) - 1));
            for (std::size_t fi = 0; fi < 3; ++fi) {
                for (std::size_t si = 0; si < sigmas.size(); ++si) {
                    const double discrepancy =
                        shift_invariance_check(p, functions[fi], sigmas[si], k);
                    add_inequality(report,
                                   "shift-invariance/p=" + std::to_string(p) +
                                       "/K=" + std::to_string(k) + "/f=" + fnames[fi] +
                                       "/sigma#" + std::to_string(si),
                                   discrepancy, 0.0, kInvarianceTol);
                }
            }
        }
    }

    return report;
}

} // namespace halcbc
