#include "diogon/trigon_laws.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace diogon;

namespace {

QuadPoint rp(long long xn, long long xd, long long yn, long long yd) {
    return QuadPoint(QuadScalar(Rational(xn, xd)), QuadScalar(Rational(yn, yd)));
}

QuadPoint ip(long long x, long long y) { return rp(x, 1, y, 1); }

}  // namespace

TEST_CASE("law of cosines") {
    CHECK(cos_angle(Int(3), Int(4), Int(5)) == Rational(0));
    CHECK(cos_angle(Int(1), Int(1), Int(1)) == Rational(1, 2));
    CHECK(cos_angle(Int(2), Int(2), Int(1)) == Rational(7, 8));
    CHECK(cos_angle(Int(2), Int(2), Int(3)) == Rational(-1, 8));
    CHECK_THROWS_AS(cos_angle(Int(1), Int(2), Int(3)), std::domain_error);
    CHECK_THROWS_AS(cos_angle(Int(1), Int(1), Int(3)), std::domain_error);
    CHECK_THROWS_AS(cos_angle(Int(0), Int(1), Int(1)), std::domain_error);
}

TEST_CASE("shared-base triangle comparison: frozen instances") {
    TriangleCompareInstance i1{Int(1), Int(2), Int(2), Int(1)};
    REQUIRE(i1.valid());
    CHECK(lemma1_check(i1));

    TriangleCompareInstance i2{Int(2), Int(3), Int(3), Int(1)};
    REQUIRE(i2.valid());
    CHECK(lemma1_check(i2));

    CHECK(!TriangleCompareInstance{Int(2), Int(1), Int(2), Int(1)}.valid());  // a >= b
    CHECK(!TriangleCompareInstance{Int(1), Int(2), Int(2), Int(2)}.valid());  // m >= k
    CHECK(!TriangleCompareInstance{Int(1), Int(3), Int(5), Int(2)}.valid());  // 2a <= m
    CHECK(!TriangleCompareInstance{Int(1), Int(2), Int(2), Int(0)}.valid());
    CHECK_THROWS_AS(lemma1_check(TriangleCompareInstance{Int(2), Int(1), Int(2), Int(1)}),
                    std::domain_error);
}

TEST_CASE("shared-base sweep: tiny grid row count and determinism") {
    auto r = lemma1_sweep(Int(3), Int(3), Int(3), Int(3));
    CHECK(r.rows.size() == 7);
    CHECK(r.counterexamples == 0);
    for (const auto& row : r.rows) CHECK(row.holds);

    // frozen first row (lexicographic): a=1 b=2 k=2 m=1
    CHECK(r.rows[0].a == Int(1));
    CHECK(r.rows[0].b == Int(2));
    CHECK(r.rows[0].k == Int(2));
    CHECK(r.rows[0].m == Int(1));
    CHECK(r.rows[0].cos_c1 == Rational(7, 8));
    CHECK(r.rows[0].cos_c2 == Rational(3, 4));
    CHECK(r.rows[0].cos_a1 == Rational(1, 4));
    CHECK(r.rows[0].cos_a2 == Rational(-1, 8));

    auto r4 = lemma1_sweep(Int(3), Int(3), Int(3), Int(3), 4);
    REQUIRE(r4.rows.size() == r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(r4.rows[i].a == r.rows[i].a);
        CHECK(r4.rows[i].b == r.rows[i].b);
        CHECK(r4.rows[i].k == r.rows[i].k);
        CHECK(r4.rows[i].m == r.rows[i].m);
        CHECK(r4.rows[i].holds == r.rows[i].holds);
    }
}

TEST_CASE("minimal-angle bounds") {
    CHECK(task1_cos_bound(Int(3)) == Rational(3, 4));
    CHECK(task1_cos_bound(Int(2)) == Rational(1, 4));
    CHECK(task2_cos_bound(Int(2)) == Rational(3, 4));
    CHECK(task2_cos_bound(Int(1)) == Rational(1, 4));
    CHECK_THROWS_AS(task1_cos_bound(Int(1)), std::domain_error);
    CHECK_THROWS_AS(task2_cos_bound(Int(0)), std::domain_error);
}

TEST_CASE("minimal-angle checks: equality cases and mode guards") {
    CHECK(task1_check(Int(2), Int(3), Int(2)));  // cos alpha = bound exactly
    CHECK(task1_check(Int(4), Int(5), Int(3)));
    CHECK_THROWS_AS(task1_check(Int(2), Int(3), Int(3)), std::domain_error);  // c >= b
    CHECK_THROWS_AS(task1_check(Int(2), Int(2), Int(1)), std::domain_error);  // b < 3
    CHECK_THROWS_AS(task1_check(Int(1), Int(3), Int(2)), std::domain_error);  // a < 2

    CHECK(task2_check(Int(2), Int(2), Int(3)));  // equality again
    CHECK(task2_check(Int(5), Int(3), Int(4)));
    CHECK_THROWS_AS(task2_check(Int(1), Int(2), Int(3)), std::domain_error);  // a <= m
    CHECK_THROWS_AS(task2_check(Int(2), Int(3), Int(3)), std::domain_error);  // c == b
}

TEST_CASE("minimal-angle sweeps") {
    auto t1 = task1_sweep(Int(5));
    CHECK(t1.counterexamples == 0);
    CHECK(t1.skipped_out_of_hypothesis == 1);  // the b=2, c=1, a=2 corner
    for (const auto& row : t1.rows) CHECK(row.holds);

    auto t2 = task2_sweep(Int(3), Int(2));
    CHECK(t2.rows.size() == 18);
    CHECK(t2.counterexamples == 0);
    CHECK(t2.skipped_out_of_hypothesis == 0);

    auto t1b = task1_sweep(Int(5), 3);
    CHECK(t1b.rows.size() == t1.rows.size());
}

TEST_CASE("crossing instances: frozen labelings") {
    // vertical chords never cross
    CrossingInstance parallel{ip(0, 0), ip(2, 0), ip(2, 2), ip(0, 2)};
    CHECK(!parallel.valid());
    CHECK_THROWS_AS(crossing_inequality(parallel), std::domain_error);

    // swap the C labels: chords (0,0)-(2,2) and (2,0)-(0,2) cross at (1,1)
    CrossingInstance crossing{ip(0, 0), ip(2, 0), ip(0, 2), ip(2, 2)};
    REQUIRE(crossing.valid());
    CHECK(crossing_inequality(crossing));

    // crossing with surd ordinates
    CrossingInstance surds{
        ip(0, 0), ip(2, 0),
        QuadPoint(QuadScalar(0), QuadScalar(Rational(0), Rational(1), Int(3))),
        QuadPoint(QuadScalar(1), QuadScalar(Rational(0), Rational(1), Int(3)))};
    REQUIRE(surds.valid());
    CHECK(crossing_inequality(surds));
}

TEST_CASE("random crossing instances are valid and satisfy the inequality") {
    std::uint64_t state = 42;
    for (int i = 0; i < 50; ++i) {
        CrossingInstance inst = random_crossing_instance(state);
        REQUIRE(inst.valid());
        CHECK(crossing_inequality(inst));
    }

    // same seed, same stream
    std::uint64_t s1 = 7, s2 = 7;
    CrossingInstance a = random_crossing_instance(s1);
    CrossingInstance b = random_crossing_instance(s2);
    CHECK(a.A == b.A);
    CHECK(a.B == b.B);
    CHECK(a.C1 == b.C1);
    CHECK(a.C2 == b.C2);

    auto sweep = crossing_random_sweep(100, 99);
    CHECK(sweep.checked == 100);
    CHECK(sweep.counterexamples == 0);
}

TEST_CASE("integer consequence of the crossing inequality") {
    CHECK(lemma2_integer_consequence(Int(3), Int(2), Int(2), Int(1)));
    CHECK(!lemma2_integer_consequence(Int(3), Int(2), Int(1), Int(1)));
    CHECK(lemma2_integer_consequence(Int(5), Int(1), Int(3), Int(2)));
    CHECK_THROWS_AS(lemma2_integer_consequence(Int(0), Int(1), Int(1), Int(1)),
                    std::domain_error);
}
