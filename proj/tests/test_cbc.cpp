#include "doctest.h"

#include <stdexcept>

#include "halcbc/bounds.hpp"
#include "halcbc/cbc.hpp"
#include "halcbc/verify.hpp"

using namespace halcbc;

TEST_CASE("minimal m") {
    CHECK(minimal_m(2, 8) == 4);
    CHECK(minimal_m(3, 8) == 2);
    CHECK(minimal_m(2, 1) == 1);
    CHECK(minimal_m(2, 512) == 10);
    CHECK(minimal_m(3, 9) == 3);
    CHECK(minimal_m(11, 64) == 2);
    CHECK_THROWS_AS(minimal_m(4, 8), std::invalid_argument);
    CHECK_THROWS_AS(minimal_m(2, 0), std::invalid_argument);
}

TEST_CASE("one-dimensional construction matches the exhaustive search") {
    for (std::int64_t p : {2, 3}) {
        for (std::size_t n = 2; n <= 8; ++n) {
            const CbcResult got =
                cbc_construct(BaseVector({p}), n, WeightSequence::explicit_list({1.0}));
            const auto [best_a, best_err] = exhaustive_search_1d(p, n, 1.0);
            CHECK(got.shift.numerators[0] == best_a);
            CHECK(got.sq_errors[0] == doctest::Approx(best_err).epsilon(1e-12));
        }
    }
}

TEST_CASE("single point ties break to the smallest numerator") {
    const CbcResult got =
        cbc_construct(BaseVector({2}), 1, WeightSequence::explicit_list({1.0}));
    const auto [best_a, best_err] = exhaustive_search_1d(2, 1, 1.0);
    CHECK(got.shift.numerators[0] == 0);
    CHECK(best_a == 0);
    CHECK(got.cbc_bounds_sq.empty()); // bounds need N >= 2
}

TEST_CASE("rescan confirms each greedy step") {
    const BaseVector bases({2, 3});
    const WeightSequence weights = WeightSequence::explicit_list({1.0, 0.5});
    const CbcResult result = cbc_construct(bases, 4, weights);
    for (std::size_t d = 0; d < 2; ++d)
        CHECK(rescan_dimension(result, d, weights, 4) == result.shift.numerators[d]);
    CHECK_THROWS_AS(rescan_dimension(result, 2, weights, 4), std::out_of_range);
}

TEST_CASE("errors stay below the construction bound") {
    const BaseVector bases({2, 3});
    const WeightSequence weights = WeightSequence::explicit_list({1.0, 0.5});
    const CbcResult result = cbc_construct(bases, 4, weights);
    REQUIRE(result.cbc_bounds_sq.size() == 2);
    for (std::size_t d = 0; d < 2; ++d) {
        CHECK(result.sq_errors[d] <= result.cbc_bounds_sq[d]);
        CHECK(result.cbc_bounds_sq[d] ==
              doctest::Approx(cbc_bound_sq(bases, weights, 4, d + 1)).epsilon(1e-14));
    }
}

TEST_CASE("cached winner error agrees with the direct re-evaluation") {
    const BaseVector bases({2, 3, 5});
    const WeightSequence weights = WeightSequence::parse("1/j^2", 3);
    const std::size_t n = 8;
    const CbcResult result = cbc_construct(bases, n, weights);

    ErrorCache cache = cache_init(n);
    for (std::size_t d = 0; d < 3; ++d) {
        const auto column = mid_simplified_column(bases.prime(d), result.shift.ms[d], n,
                                                  result.shift.numerators[d]);
        const double cached = squared_wce_from_cache(cache, column, weights.gamma(d));
        CHECK(cached == doctest::Approx(result.sq_errors[d]).epsilon(1e-12));
        cache = cache_extend(cache, column, weights.gamma(d));
    }
}

TEST_CASE("naive evaluation mode selects the same shifts") {
    const BaseVector bases({2, 3});
    const WeightSequence weights = WeightSequence::explicit_list({1.0, 0.5});
    CbcOptions naive;
    naive.naive_eval = true;
    const CbcResult fast = cbc_construct(bases, 4, weights);
    const CbcResult slow = cbc_construct(bases, 4, weights, naive);
    CHECK(fast.shift.numerators == slow.shift.numerators);
    CHECK(fast.sq_errors == slow.sq_errors);
}

TEST_CASE("thread count does not change the result") {
    const BaseVector bases({2, 3});
    const WeightSequence weights = WeightSequence::parse("1/j^2", 2);
    CbcOptions one_thread;
    one_thread.threads = 1;
    CbcOptions many_threads;
    many_threads.threads = 8;
    const CbcResult a = cbc_construct(bases, 16, weights, one_thread);
    const CbcResult b = cbc_construct(bases, 16, weights, many_threads);
    CHECK(a.shift.numerators == b.shift.numerators);
    CHECK(a.sq_errors == b.sq_errors); // bitwise
}

TEST_CASE("m override widens the candidate grid") {
    const BaseVector bases({2, 3});
    const WeightSequence weights = WeightSequence::explicit_list({1.0, 0.5});
    CbcOptions options;
    options.m_override = {3, 2};
    const CbcResult result = cbc_construct(bases, 2, weights, options);
    CHECK(result.candidate_counts == std::vector<std::int64_t>{8, 9});
    CHECK(result.shift.ms == std::vector<int>{3, 2});
}

TEST_CASE("configuration errors") {
    const BaseVector bases({2, 3});
    const WeightSequence w1 = WeightSequence::explicit_list({1.0});
    CHECK_THROWS_AS(cbc_construct(bases, 4, w1), std::invalid_argument);

    CbcOptions tiny_cap;
    tiny_cap.candidate_cap = 4;
    CHECK_THROWS_AS(
        cbc_construct(bases, 4, WeightSequence::explicit_list({1.0, 0.5}), tiny_cap),
        std::invalid_argument);

    CbcOptions small_points;
    small_points.point_cap = 8;
    CHECK_THROWS_AS(
        cbc_construct(bases, 9, WeightSequence::explicit_list({1.0, 0.5}), small_points),
        std::invalid_argument);
}
