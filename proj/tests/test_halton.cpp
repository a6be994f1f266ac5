#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "halcbc/halton.hpp"

using namespace halcbc;

TEST_CASE("halton points in one base") {
    const PointSet pts = halton_points(BaseVector({2}), 4);
    CHECK(pts.at(0, 0) == ExactPoint(0, 1));
    CHECK(pts.at(1, 0) == ExactPoint(1, 2));
    CHECK(pts.at(2, 0) == ExactPoint(1, 4));
    CHECK(pts.at(3, 0) == ExactPoint(3, 4));
}

TEST_CASE("first point is the origin") {
    const PointSet pts = halton_points(BaseVector({2, 3}), 1);
    CHECK(pts.count() == 1);
    CHECK(pts.at(0, 0) == ExactPoint(0, 1));
    CHECK(pts.at(0, 1) == ExactPoint(0, 1));
}

TEST_CASE("first p^m points fill Q(p^m)") {
    const PointSet pts = halton_points(BaseVector({3}), 9);
    std::vector<ExactPoint> got;
    for (std::size_t n = 0; n < 9; ++n) got.push_back(pts.at(n, 0));
    std::sort(got.begin(), got.end(), [](const ExactPoint& a, const ExactPoint& b) {
        return a.num * b.den < b.num * a.den;
    });
    for (std::size_t a = 0; a < 9; ++a)
        CHECK(got[a] == ExactPoint(static_cast<std::int64_t>(a), 9));
}

TEST_CASE("leading points are n/p") {
    const std::int64_t p = 7;
    const PointSet pts = halton_points(BaseVector({p}), static_cast<std::size_t>(p));
    for (std::int64_t n = 0; n < p; ++n)
        CHECK(pts.at(static_cast<std::size_t>(n), 0) == ExactPoint(n, p));
}

TEST_CASE("zero shift in full mode reproduces the plain sequence") {
    const BaseVector bases({2, 3});
    const ShiftVector zero(bases, {3, 2}, {0, 0});
    const PointSet plain = halton_points(bases, 6);
    const PointSet shifted = shifted_halton_points(bases, 6, zero, ShiftMode::full);
    for (std::size_t n = 0; n < 6; ++n)
        for (std::size_t j = 0; j < 2; ++j) CHECK(plain.at(n, j) == shifted.at(n, j));
}

TEST_CASE("shifted examples in base 2") {
    const BaseVector bases({2});
    const ShiftVector shift(bases, {2}, {1}); // sigma = 1/4

    const PointSet simp = shifted_halton_points(bases, 2, shift, ShiftMode::simplified);
    CHECK(simp.at(0, 0) == ExactPoint(1, 4));
    CHECK(simp.at(1, 0) == ExactPoint(3, 4));

    const PointSet mid = shifted_halton_points(bases, 2, shift, ShiftMode::mid_simplified);
    CHECK(mid.at(0, 0) == ExactPoint(3, 8));
    CHECK(mid.at(1, 0) == ExactPoint(7, 8));
}

TEST_CASE("simplified shift keeps the n = p^m multiset equal to Q(p^m)") {
    const BaseVector bases({3});
    const ShiftVector shift(bases, {2}, {7});
    const PointSet pts = shifted_halton_points(bases, 9, shift, ShiftMode::simplified);
    std::vector<ExactPoint> got;
    for (std::size_t n = 0; n < 9; ++n) got.push_back(pts.at(n, 0));
    std::sort(got.begin(), got.end(), [](const ExactPoint& a, const ExactPoint& b) {
        return a.num * b.den < b.num * a.den;
    });
    for (std::size_t a = 0; a < 9; ++a)
        CHECK(got[a] == ExactPoint(static_cast<std::int64_t>(a), 9));
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(BaseVector({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(BaseVector({6}), std::invalid_argument);
    CHECK_THROWS_AS(BaseVector({}), std::invalid_argument);
    CHECK_THROWS_AS(ShiftVector(BaseVector({2}), {1}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(ShiftVector(BaseVector({2, 3}), {1}, {0}), std::invalid_argument);
    const ShiftVector other(BaseVector({5}), {1}, {0});
    CHECK_THROWS_AS(shifted_halton_points(BaseVector({2}), 2, other, ShiftMode::full),
                    std::invalid_argument);
}

TEST_CASE("first_primes helper") {
    const BaseVector b = BaseVector::first_primes(5);
    CHECK(b.primes() == std::vector<std::int64_t>{2, 3, 5, 7, 11});
}

TEST_CASE("csv export") {
    const PointSet pts = halton_points(BaseVector({2, 3}), 2);
    std::ostringstream frac;
    write_points_csv(frac, pts, true);
    CHECK(frac.str() == "n,x1,x2\n0,0/1,0/1\n1,1/2,1/3\n");

    std::ostringstream dec;
    write_points_csv(dec, pts, false);
    CHECK(dec.str().substr(0, 9) == "n,x1,x2\n0");
    CHECK(dec.str().find("0.5") != std::string::npos);
}
