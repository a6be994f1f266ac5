#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "halcbc/bounds.hpp"
#include "support/oracles.hpp"

using namespace halcbc;

TEST_CASE("hand values at d = 1") {
    const BaseVector b2({2});
    const WeightSequence w1 = WeightSequence::explicit_list({1.0});
    // (1/4)[(1 + 4) + (3/2)(4/3)] with log(2)/log(2) = 1
    CHECK(rms_bound_sq(b2, w1, 2, 1) == doctest::Approx(7.0 / 4.0).epsilon(1e-14));
    // (1/4)[(1 + 8) + 2 (4/3)]
    CHECK(cbc_bound_sq(b2, w1, 2, 1) == doctest::Approx(35.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("vanishing weights approach the empty-product limit") {
    const BaseVector bases({2, 3});
    const WeightSequence tiny = WeightSequence::explicit_list({1e-13, 1e-13});
    for (std::size_t n : {std::size_t{2}, std::size_t{16}}) {
        const double limit = 2.0 / (static_cast<double>(n) * static_cast<double>(n));
        CHECK(rms_bound_sq(bases, tiny, n, 2) == doctest::Approx(limit).epsilon(1e-9));
        CHECK(cbc_bound_sq(bases, tiny, n, 2) == doctest::Approx(limit).epsilon(1e-9));
    }
}

TEST_CASE("agreement with the log-space re-implementation") {
    const BaseVector bases = BaseVector::first_primes(5);
    for (const char* family : {"1/j^2", "1/j^3", "0.9^j"}) {
        const WeightSequence w = WeightSequence::parse(family, 5);
        for (std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{16}, std::size_t{64}}) {
            for (std::size_t d = 1; d <= 5; ++d) {
                CHECK(rms_bound_sq(bases, w, n, d) ==
                      doctest::Approx(test_support::rms_bound_sq_alt(bases, w, n, d))
                          .epsilon(1e-12));
                CHECK(cbc_bound_sq(bases, w, n, d) ==
                      doctest::Approx(test_support::cbc_bound_sq_alt(bases, w, n, d))
                          .epsilon(1e-12));
            }
        }
    }
    // the d = 3 spot value from the dual-evaluation grid
    const WeightSequence w3 = WeightSequence::parse("1/j^2", 3);
    const BaseVector b3({2, 3, 5});
    CHECK(cbc_bound_sq(b3, w3, 16, 3) ==
          doctest::Approx(test_support::cbc_bound_sq_alt(b3, w3, 16, 3)).epsilon(1e-13));
}

TEST_CASE("construction bound dominates the rms bound") {
    const BaseVector bases = BaseVector::first_primes(4);
    const WeightSequence w = WeightSequence::parse("1/j^2", 4);
    for (std::size_t n : {std::size_t{2}, std::size_t{8}, std::size_t{64}})
        for (std::size_t d = 1; d <= 4; ++d)
            CHECK(cbc_bound_sq(bases, w, n, d) >= rms_bound_sq(bases, w, n, d));
}

TEST_CASE("monotonicity in d and in the weights") {
    const BaseVector bases = BaseVector::first_primes(4);
    const WeightSequence w = WeightSequence::parse("1/j^2", 4);
    const WeightSequence w_small = WeightSequence::parse("0.5/j^2", 4);
    double prev_rms = 0.0, prev_cbc = 0.0;
    for (std::size_t d = 1; d <= 4; ++d) {
        const double r = rms_bound_sq(bases, w, 16, d);
        const double c = cbc_bound_sq(bases, w, 16, d);
        CHECK(r >= prev_rms);
        CHECK(c >= prev_cbc);
        prev_rms = r;
        prev_cbc = c;
        CHECK(rms_bound_sq(bases, w_small, 16, d) <= r);
        CHECK(cbc_bound_sq(bases, w_small, 16, d) <= c);
    }
}

TEST_CASE("bound times N^2 over log^d N decreases, so the rate shape holds") {
    const BaseVector bases({2, 3});
    const WeightSequence w = WeightSequence::parse("1/j^2", 2);
    double prev = 0.0;
    for (int k = 6; k <= 20; ++k) {
        const std::size_t n = static_cast<std::size_t>(1) << k;
        const double nn = static_cast<double>(n);
        const double ratio =
            cbc_bound_sq(bases, w, n, 2) * nn * nn / std::pow(std::log(nn), 2.0);
        if (k > 6) CHECK(ratio < prev);
        prev = ratio;
    }
}

TEST_CASE("argument validation and the report") {
    const BaseVector bases({2, 3});
    const WeightSequence w = WeightSequence::parse("1/j^2", 2);
    CHECK_THROWS_AS(rms_bound_sq(bases, w, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cbc_bound_sq(bases, w, 2, 3), std::invalid_argument);

    const BoundReport report = bound_report(bases, w, 16, 2);
    CHECK(report.rms_bound_sq > 0.0);
    CHECK(report.cbc_bound_sq > report.rms_bound_sq);
    const double expected_summability =
        1.0 * 4.0 / std::log(2.0) + 0.25 * 9.0 / std::log(3.0);
    CHECK(report.weight_summability == doctest::Approx(expected_summability).epsilon(1e-14));
}
