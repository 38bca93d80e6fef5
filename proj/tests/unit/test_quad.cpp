#include "diogon/quad.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace diogon;

namespace {

QuadScalar surd(long long rat_n, long long rat_d, long long c_n, long long c_d,
                long long rad) {
    return QuadScalar(Rational(rat_n, rat_d), Rational(c_n, c_d), Int(rad));
}

}  // namespace

TEST_CASE("construction normalizes to canonical form") {
    QuadScalar a = surd(0, 1, 1, 1, 12);  // sqrt(12) = 2*sqrt(3)
    CHECK(a.rat_part() == Rational(0));
    CHECK(a.surd_coeff() == Rational(2));
    CHECK(a.radicand() == Int(3));
    CHECK(a == surd(0, 1, 2, 1, 3));

    // radicand 1 folds into the rational part
    QuadScalar b = surd(1, 2, 3, 4, 1);
    CHECK(b.is_rational());
    CHECK(b.as_rational() == Rational(5, 4));
    CHECK(b.radicand() == Int(1));

    // radicand 0 erases the surd
    QuadScalar c = surd(7, 3, 5, 1, 0);
    CHECK(c.is_rational());
    CHECK(c.as_rational() == Rational(7, 3));

    // zero coefficient erases the radicand
    QuadScalar d = surd(2, 1, 0, 1, 7);
    CHECK(d.radicand() == Int(1));

    CHECK_THROWS_AS(QuadScalar(Rational(0), Rational(1), Int(-2)), std::domain_error);
    CHECK_THROWS_AS(surd(1, 1, 1, 1, 3).as_rational(), std::domain_error);
}

TEST_CASE("exact sign with opposed parts") {
    CHECK(surd(-1, 1, 1, 1, 2).sign() == +1);   // sqrt(2) > 1
    CHECK(surd(3, 1, -2, 1, 2).sign() == +1);   // 9 > 8
    CHECK(surd(2, 1, -3, 1, 2).sign() == -1);   // 4 < 18
    CHECK(surd(-3, 1, 2, 1, 2).sign() == -1);
    CHECK(surd(2, 1, -1, 1, 4).sign() == 0);    // 2 - 2
    CHECK(QuadScalar(Rational(-5, 7)).sign() == -1);
    CHECK(QuadScalar().sign() == 0);
}

TEST_CASE("field arithmetic") {
    QuadScalar r2 = surd(0, 1, 1, 1, 2);
    QuadScalar one_plus = surd(1, 1, 1, 1, 2);
    QuadScalar one_minus = surd(1, 1, -1, 1, 2);

    CHECK(one_plus * one_minus == QuadScalar(Rational(-1)));
    CHECK(r2 * r2 == QuadScalar(Rational(2)));
    CHECK(one_plus + one_minus == QuadScalar(Rational(2)));
    CHECK(one_plus - one_minus == surd(0, 1, 2, 1, 2));
    CHECK(-one_plus == surd(-1, 1, -1, 1, 2));

    QuadScalar q(Rational(3, 2));
    CHECK(q * r2 == surd(0, 1, 3, 2, 2));  // rationals combine with any field

    QuadScalar r3 = surd(0, 1, 1, 1, 3);
    CHECK_THROWS_AS(r2 + r3, std::domain_error);
    CHECK_THROWS_AS(r2 * r3, std::domain_error);
    CHECK(QuadScalar::common_radicand(q, r3) == Int(3));
    CHECK(QuadScalar::common_radicand(r3, r3) == Int(3));
    CHECK_THROWS_AS(QuadScalar::common_radicand(r2, r3), std::domain_error);
}

TEST_CASE("order comparisons") {
    QuadScalar one_plus_r2 = surd(1, 1, 1, 1, 2);
    CHECK(one_plus_r2 > QuadScalar(Rational(2)));
    CHECK(one_plus_r2 < QuadScalar(Rational(5, 2)));
    QuadScalar r5 = surd(0, 1, 1, 1, 5);
    CHECK(r5 < QuadScalar(Rational(9, 4)));
    CHECK(r5 >= surd(0, 1, 1, 1, 5));
    CHECK(r5 <= surd(0, 1, 1, 1, 5));
}

TEST_CASE("sign of r + s*sqrt(g)") {
    CHECK(sign_r_plus_s_sqrt(QuadScalar(-3), QuadScalar(1), QuadScalar(8)) == -1);
    CHECK(sign_r_plus_s_sqrt(QuadScalar(-2), QuadScalar(1), QuadScalar(8)) == +1);
    CHECK(sign_r_plus_s_sqrt(QuadScalar(-3), QuadScalar(1), QuadScalar(9)) == 0);
    CHECK(sign_r_plus_s_sqrt(QuadScalar(5), QuadScalar(0), QuadScalar(2)) == +1);
    CHECK(sign_r_plus_s_sqrt(QuadScalar(0), QuadScalar(0), QuadScalar(2)) == 0);
}

TEST_CASE("nested radical comparison of sqrt sums") {
    auto cmp = [](long long a, long long b, long long c, long long d) {
        return compare_sqrt_sums(QuadScalar(Rational(a)), QuadScalar(Rational(b)),
                                 QuadScalar(Rational(c)), QuadScalar(Rational(d)));
    };
    CHECK(cmp(4, 9, 25, 0) == 0);   // 2 + 3 = 5
    CHECK(cmp(4, 9, 16, 1) == 0);   // 2 + 3 = 4 + 1
    CHECK(cmp(2, 8, 18, 0) == 0);   // sqrt2 + 2 sqrt2 = 3 sqrt2
    CHECK(cmp(4, 9, 26, 0) == -1);
    CHECK(cmp(9, 16, 4, 1) == +1);
    CHECK(cmp(2, 3, 2, 3) == 0);
    CHECK(cmp(5, 5, 20, 0) == 0);   // 2 sqrt5 = sqrt20
    CHECK(cmp(0, 0, 0, 1) == -1);

    // brute float cross-check on a small grid, ties excluded by exactness
    for (long long a = 0; a <= 12; ++a)
        for (long long b = 0; b <= 12; ++b)
            for (long long c = 0; c <= 12; ++c)
                for (long long d = 0; d <= 12; ++d) {
                    double lhs = std::sqrt(double(a)) + std::sqrt(double(b));
                    double rhs = std::sqrt(double(c)) + std::sqrt(double(d));
                    int got = cmp(a, b, c, d);
                    if (lhs > rhs + 1e-9) CHECK(got == +1);
                    else if (lhs < rhs - 1e-9) CHECK(got == -1);
                    else CHECK(got * got <= 1);  // near-ties settled exactly
                }
}

TEST_CASE("points demand one field") {
    QuadPoint p(QuadScalar(Rational(1, 2)), surd(0, 1, 1, 2, 3));
    CHECK(p.radicand() == Int(3));
    CHECK(QuadPoint(QuadScalar(1), QuadScalar(2)).radicand() == Int(1));
    CHECK_THROWS_AS(QuadPoint(surd(0, 1, 1, 1, 2), surd(0, 1, 1, 1, 3)),
                    std::domain_error);
}

TEST_CASE("distances") {
    QuadPoint o(QuadScalar(0), QuadScalar(0));
    QuadPoint a(QuadScalar(3), QuadScalar(4));
    CHECK(distance_squared(o, a) == QuadScalar(Rational(25)));
    CHECK(integer_distance(o, a) == Int(5));

    // apex of the unit isosceles triangle: distance 1 from the origin
    QuadPoint apex(QuadScalar(Rational(1, 2)), surd(0, 1, 1, 2, 3));
    CHECK(distance_squared(o, apex) == QuadScalar(Rational(1)));
    CHECK(integer_distance(o, apex) == Int(1));

    CHECK(!integer_distance(o, QuadPoint(QuadScalar(Rational(1, 2)), QuadScalar(0))));
    CHECK(!integer_distance(o, o));  // coincident points have no natural distance
    CHECK(!integer_distance(o, QuadPoint(QuadScalar(0), surd(0, 1, 1, 1, 2))));

    QuadPoint r2(surd(0, 1, 1, 1, 2), QuadScalar(0));
    QuadPoint r3(surd(0, 1, 1, 1, 3), QuadScalar(0));
    CHECK_THROWS_AS(distance_squared(r2, r3), std::domain_error);
}
