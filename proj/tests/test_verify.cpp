#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "halcbc/bounds.hpp"
#include "halcbc/verify.hpp"

using namespace halcbc;

TEST_CASE("one-dimensional cell average hand value") {
    // p = 2, N = 1 (m = 1), gamma = 1, sigma = 0: the shifted coordinate is 0
    // and the closed form collapses to 4/3 - 35/12 + 7/4 = 1/6.
    CHECK(cell_average_sq_error_1d(2, 1, 1.0, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(cell_average_sq_error_1d(2, 1, 0.0, 0) == 0.0);
    CHECK_THROWS_AS(cell_average_sq_error_1d(2, 1, 1.0, 2), std::invalid_argument);
}

TEST_CASE("cell midpoint shift against a digit-truncation oracle") {
    // Brute reference: extend sigma = a/p^M + 1/(2 p^M) to M + 40 digits and
    // add digitwise; agreement to ~p^-(M+38) validates the tail handling.
    for (std::int64_t p : {2, 3, 5}) {
        const int m_total = 4;
        const std::int64_t pm = checked_pow(p, m_total);
        for (std::int64_t a = 0; a < pm; a += (p == 2 ? 3 : 7)) {
            for (std::int64_t xnum = 0; xnum < pm; xnum += 5) {
                const PAdicDigits x = PAdicDigits::from_q(p, m_total, xnum);
                const double got = padic_shift_cell_midpoint(x, m_total, a).to_double();

                std::vector<std::uint32_t> sigma_digits;
                std::int64_t rest = a;
                for (int r = m_total - 1; r >= 0; --r) {
                    const std::int64_t place = checked_pow(p, r);
                    sigma_digits.push_back(static_cast<std::uint32_t>(rest / place));
                    rest %= place;
                }
                if (p == 2) {
                    sigma_digits.push_back(1); // 1/2^(M+1)
                } else {
                    for (int r = 0; r < 40; ++r)
                        sigma_digits.push_back(static_cast<std::uint32_t>((p - 1) / 2));
                }
                const PAdicDigits sigma = PAdicDigits::from_digits(p, sigma_digits);
                const double reference = padic_shift(x, sigma).to_double();
                CHECK(got == doctest::Approx(reference).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("quadrature agrees with the closed-form cell average") {
    CHECK(cell_average_quadrature_1d(2, 1, 1.0, 0) ==
          doctest::Approx(1.0 / 6.0).epsilon(2e-4));
    for (std::int64_t a = 0; a < 9; a += 4) {
        const double closed = cell_average_sq_error_1d(3, 3, 0.5, a);
        const double quad = cell_average_quadrature_1d(3, 3, 0.5, a);
        CHECK(std::abs(closed - quad) < 2e-4);
    }
}

TEST_CASE("appended form with an empty cache reduces to the 1-d form") {
    for (std::int64_t a = 0; a < 8; ++a) {
        const ErrorCache empty = cache_init(5);
        const double appended = cell_average_sq_error_appended(empty, 2, 5, 1.0, a);
        const double plain = cell_average_sq_error_1d(2, 5, 1.0, a);
        CHECK(appended == plain); // bitwise: identical accumulation order
    }
}

TEST_CASE("appended form against the two-dimensional quadrature oracle") {
    const std::size_t n = 3;
    const auto prior_column = mid_simplified_column(2, minimal_m(2, n), n, 1);
    ErrorCache cache = cache_init(n);
    cache = cache_extend(cache, prior_column, 1.0);
    DoubleMatrix prior(n, 1);
    for (std::size_t i = 0; i < n; ++i) prior.at(i, 0) = prior_column[i];
    const std::vector<double> prior_gammas{1.0};

    for (std::int64_t a = 0; a < 9; ++a) {
        const double closed = cell_average_sq_error_appended(cache, 3, n, 0.5, a);
        const double quad =
            cell_average_quadrature_appended(prior, prior_gammas, 3, n, 0.5, a);
        CHECK(std::abs(closed - quad) < 2e-4);
    }
}

TEST_CASE("per-cell inequality bounds the mid-simplified error") {
    const std::size_t n = 6;
    const int m = minimal_m(3, n);
    const WeightSequence w1 = WeightSequence::explicit_list({0.5});
    for (std::int64_t a = 0; a < checked_pow(3, m); ++a) {
        DoubleMatrix pts(n, 1);
        const auto column = mid_simplified_column(3, m, n, a);
        for (std::size_t i = 0; i < n; ++i) pts.at(i, 0) = column[i];
        CHECK(squared_wce(pts, w1) <= cell_average_sq_error_1d(3, n, 0.5, a) + 1e-10);
    }
}

TEST_CASE("exhaustive one-dimensional search") {
    // N = 1, p = 2: candidates give the single points {1/4} and {3/4}; the
    // one-point error gamma (1/3 - x + x^2) takes the value 7 gamma / 48 at
    // both, so the tie resolves to numerator 0.
    const auto [a1, e1] = exhaustive_search_1d(2, 1, 1.0);
    CHECK(a1 == 0);
    CHECK(e1 == doctest::Approx(7.0 / 48.0).epsilon(1e-13));

    // The one-weight error is gamma times a shift-dependent shape term, so
    // rescaling gamma cannot make a different candidate strictly better.
    // Exact ties exist (mirror candidates), and rounding may pick different
    // members of the tied set at different scales, so assert value-level
    // optimality of the base argmin rather than numerator equality.
    for (std::int64_t p : {2, 5}) {
        const auto [base_a, base_err] = exhaustive_search_1d(p, 6, 1.0);
        for (double gamma : {0.37, 0.1}) {
            const auto [a, err] = exhaustive_search_1d(p, 6, gamma);
            CHECK(err == doctest::Approx(gamma * base_err).epsilon(1e-11));
            if (a != base_a) // tied set member: same quality required
                CHECK(exhaustive_search_1d(p, 6, gamma).second ==
                      doctest::Approx(gamma * base_err).epsilon(1e-11));
        }
    }

    CHECK_THROWS_AS(exhaustive_search_1d(2, 1, 1.0, 1), std::invalid_argument);
}

TEST_CASE("exhaustive full search dominates the greedy construction") {
    const WeightSequence weights = WeightSequence::explicit_list({1.0, 0.5});
    for (std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{4}}) {
        const BaseVector bases({2, 3});
        const auto [shift, global_err] = exhaustive_search_full(bases, n, weights);
        const CbcResult greedy = cbc_construct(bases, n, weights);
        CHECK(global_err <= greedy.sq_errors[1] + 1e-14);
        if (n >= 2) CHECK(global_err <= cbc_bound_sq(bases, weights, n, 2));
    }

    // one dimension: identical to the dedicated search
    const auto [full_shift, full_err] =
        exhaustive_search_full(BaseVector({3}), 5, WeightSequence::explicit_list({1.0}));
    const auto [a, e] = exhaustive_search_1d(3, 5, 1.0);
    CHECK(full_shift.numerators[0] == a);
    CHECK(full_err == doctest::Approx(e).epsilon(1e-14));
}

TEST_CASE("shift invariance of grid averages") {
    CHECK(shift_invariance_check(2, TestFunction::square, PAdicDigits(2), 6) == 0.0);
    CHECK(shift_invariance_check(2, TestFunction::square, PAdicDigits::from_q(2, 1, 1), 10) <=
          1e-12);
    CHECK(shift_invariance_check(3, TestFunction::min_cap, PAdicDigits::from_q(3, 1, 2), 6) <=
          1e-12);
    CHECK(shift_invariance_check(5, TestFunction::identity, PAdicDigits::from_q(5, 2, 24), 5) <=
          1e-12);
    CHECK_THROWS_AS(shift_invariance_check(2, TestFunction::square, PAdicDigits(2), 0),
                    std::invalid_argument);
}

TEST_CASE("monte-carlo estimate is reproducible and bounded") {
    const BaseVector bases({2});
    const WeightSequence w1 = WeightSequence::explicit_list({1.0});
    const McEstimate once = mc_rms_estimate(bases, 2, w1, 1, 42);
    const McEstimate again = mc_rms_estimate(bases, 2, w1, 1, 42);
    CHECK(once.mean_sq == again.mean_sq);
    CHECK(once.std_error == 0.0);

    const McEstimate zero = mc_rms_estimate(bases, 4, WeightSequence::unchecked({0.0}), 50, 7);
    CHECK(zero.mean_sq == 0.0);

    const McEstimate estimate = mc_rms_estimate(bases, 2, w1, 2000, 123);
    CHECK(estimate.mean_sq + 3.0 * estimate.std_error <=
          rms_bound_sq(bases, w1, 2, 1));

    const McEstimate threaded = mc_rms_estimate(bases, 2, w1, 500, 9, 4);
    const McEstimate serial = mc_rms_estimate(bases, 2, w1, 500, 9, 1);
    CHECK(threaded.mean_sq == serial.mean_sq); // bitwise
}

TEST_CASE("verification sweep on a reduced grid") {
    VerifyGrid grid;
    grid.primes = {2, 3};
    grid.counts = {2, 3};
    grid.gammas = {1.0, 0.5};
    const VerifyReport report = run_verification(grid);
    CHECK(report.all_pass());
    CHECK(report.checks.size() > 50);

    VerifyOptions broken;
    broken.inject_lhs_offset = 1e-3;
    const VerifyReport bad = run_verification(grid, broken);
    CHECK(bad.failures() == 1);
    std::string failed_name;
    for (const auto& check : bad.checks)
        if (!check.pass) failed_name = check.name;
    CHECK(failed_name.substr(0, 26) == "cell-average-1d-quadrature");
}
