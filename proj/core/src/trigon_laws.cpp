#include "diogon/trigon_laws.hpp"

#include "diogon/detail/parallel.hpp"
#include "diogon/predicates.hpp"

#include <stdexcept>
#include <tuple>

namespace diogon {

Rational cos_angle(const Int& adj1, const Int& adj2, const Int& opp) {
    if (adj1 < 1 || adj2 < 1 || opp < 1)
        throw std::domain_error("cos_angle: sides must be naturals");
    Int lo = adj1 < adj2 ? adj2 - adj1 : adj1 - adj2;
    if (!(lo < opp && opp < adj1 + adj2))
        throw std::domain_error("cos_angle: strict triangle inequality violated");
    return Rational(adj1 * adj1 + adj2 * adj2 - opp * opp, 2 * adj1 * adj2);
}

bool TriangleCompareInstance::valid() const {
    return a >= 1 && m >= 1 && a < b && m < k && 2 * a > m;
}

namespace {

Lemma1Row lemma1_row(const TriangleCompareInstance& t) {
    Lemma1Row row;
    row.a = t.a;
    row.b = t.b;
    row.k = t.k;
    row.m = t.m;
    row.cos_c1 = cos_angle(t.k, t.a + t.k - t.m, t.a);
    row.cos_c2 = cos_angle(t.k, t.b + t.k - t.m, t.b);
    row.cos_a1 = cos_angle(t.a, t.k, t.a + t.k - t.m);
    row.cos_a2 = cos_angle(t.b, t.k, t.b + t.k - t.m);
    row.holds = row.cos_c1 > row.cos_c2 && row.cos_a1 > row.cos_a2;
    return row;
}

}  // namespace

bool lemma1_check(const TriangleCompareInstance& inst) {
    if (!inst.valid())
        throw std::domain_error("lemma1_check: invalid instance");
    return lemma1_row(inst).holds;
}

Lemma1SweepResult lemma1_sweep(const Int& a_max, const Int& b_max, const Int& k_max,
                               const Int& m_max, unsigned threads) {
    std::vector<TriangleCompareInstance> grid;
    for (Int a = 1; a <= a_max; ++a)
        for (Int b = a + 1; b <= b_max; ++b)
            for (Int k = 2; k <= k_max; ++k)
                for (Int m = 1; m < k && m <= m_max; ++m) {
                    TriangleCompareInstance t{a, b, k, m};
                    if (t.valid()) grid.push_back(t);
                }

    Lemma1SweepResult res;
    res.rows.resize(grid.size());
    detail::parallel_for(grid.size(), threads,
                         [&](std::size_t i) { res.rows[i] = lemma1_row(grid[i]); });
    for (const auto& r : res.rows)
        if (!r.holds) ++res.counterexamples;
    return res;
}

Rational task1_cos_bound(const Int& b) {
    if (b < 2) throw std::domain_error("task1_cos_bound: b must be >= 2");
    return Rational(2 * b * b - 2 * b - 3, 2 * b * (b - 1));
}

Rational task2_cos_bound(const Int& b) {
    if (b < 1) throw std::domain_error("task2_cos_bound: b must be >= 1");
    return Rational(2 * b * (b + 1) - 3, 2 * b * (b + 1));
}

bool task1_check(const Int& a, const Int& b, const Int& c) {
    if (b < 3 || c < 1 || c > b - 1 || a < 2)
        throw std::domain_error("task1_check: mode invariants violated");
    return cos_angle(b, c, a) <= task1_cos_bound(b);
}

bool task2_check(const Int& a, const Int& b, const Int& c) {
    if (b < 1 || c < b + 1 || a < c - b + 1)
        throw std::domain_error("task2_check: mode invariants violated");
    return cos_angle(b, c, a) <= task2_cos_bound(b);
}

namespace {

TaskSweepResult task_sweep_impl(std::vector<std::tuple<Int, Int, Int>> grid,
                                bool first_mode, unsigned threads,
                                std::size_t skipped) {
    TaskSweepResult res;
    res.skipped_out_of_hypothesis = skipped;
    res.rows.resize(grid.size());
    detail::parallel_for(grid.size(), threads, [&](std::size_t i) {
        const auto& [a, b, c] = grid[i];
        TaskRow row;
        row.a = a;
        row.b = b;
        row.c = c;
        row.cos_alpha = cos_angle(b, c, a);
        row.cos_bound = first_mode ? task1_cos_bound(b) : task2_cos_bound(b);
        row.holds = row.cos_alpha <= row.cos_bound;
        res.rows[i] = row;
    });
    for (const auto& r : res.rows)
        if (!r.holds) ++res.counterexamples;
    return res;
}

}  // namespace

TaskSweepResult task1_sweep(const Int& b_max, unsigned threads) {
    std::vector<std::tuple<Int, Int, Int>> grid;
    std::size_t skipped = 0;
    for (Int b = 2; b <= b_max; ++b)
        for (Int c = 1; c < b; ++c)
            for (Int a = b - c + 1; a < b + c; ++a) {
                // c <= b-1 forces a >= 2 automatically.
                if (b < 3) {
                    ++skipped;  // valid triangle, outside the mode
                    continue;
                }
                grid.emplace_back(a, b, c);
            }
    return task_sweep_impl(std::move(grid), true, threads, skipped);
}

TaskSweepResult task2_sweep(const Int& b_max, const Int& m_max, unsigned threads) {
    std::vector<std::tuple<Int, Int, Int>> grid;
    for (Int b = 1; b <= b_max; ++b)
        for (Int m = 1; m <= m_max; ++m)
            for (Int a = m + 1; a < 2 * b + m; ++a)
                grid.emplace_back(a, b, b + m);
    return task_sweep_impl(std::move(grid), false, threads, 0);
}

bool CrossingInstance::valid() const {
    return segments_cross(A, C2, B, C1);
}

bool crossing_inequality(const CrossingInstance& inst) {
    if (!inst.valid())
        throw std::domain_error(
            "crossing_inequality: segments A-C2 and B-C1 do not cross properly");
    QuadScalar lhs1 = distance_squared(inst.A, inst.C2);
    QuadScalar lhs2 = distance_squared(inst.C1, inst.B);
    QuadScalar rhs1 = distance_squared(inst.A, inst.C1);
    QuadScalar rhs2 = distance_squared(inst.B, inst.C2);
    return compare_sqrt_sums(lhs1, lhs2, rhs1, rhs2) > 0;
}

bool lemma2_integer_consequence(const Int& b, const Int& a, const Int& m, const Int& t) {
    if (b < 1 || a < 1 || m < 1 || t < 1)
        throw std::domain_error("lemma2_integer_consequence: naturals required");
    return m > t;
}

namespace {

// splitmix64: tiny, portable, fully deterministic across platforms.
std::uint64_t next_u64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational small_rational(std::uint64_t& state, long long lo, long long hi) {
    long long span = hi - lo + 1;
    long long n = lo + static_cast<long long>(next_u64(state) % static_cast<std::uint64_t>(span));
    long long d = 1 + static_cast<long long>(next_u64(state) % 9ULL);
    return Rational(n, d);
}

}  // namespace

CrossingInstance random_crossing_instance(std::uint64_t& state) {
    // Crossing point O, two non-parallel integer directions, positive
    // rational extents on each of the four rays.
    Rational ox = small_rational(state, -20, 20);
    Rational oy = small_rational(state, -20, 20);
    long long d1x, d1y, d2x, d2y;
    do {
        auto pick = [&]() {
            return static_cast<long long>(next_u64(state) % 21ULL) - 10;
        };
        d1x = pick();
        d1y = pick();
        d2x = pick();
        d2y = pick();
    } while ((d1x == 0 && d1y == 0) || (d2x == 0 && d2y == 0) ||
             d1x * d2y - d1y * d2x == 0);

    auto extent = [&]() { return small_rational(state, 1, 20); };
    Rational e1 = extent(), e2 = extent(), e3 = extent(), e4 = extent();

    auto pt = [](const Rational& x, const Rational& y) {
        return QuadPoint(QuadScalar(x), QuadScalar(y));
    };
    CrossingInstance inst;
    inst.A = pt(ox - e1 * d1x, oy - e1 * d1y);
    inst.C2 = pt(ox + e2 * d1x, oy + e2 * d1y);
    inst.B = pt(ox - e3 * d2x, oy - e3 * d2y);
    inst.C1 = pt(ox + e4 * d2x, oy + e4 * d2y);
    return inst;
}

CrossingSweepResult crossing_random_sweep(std::size_t count, std::uint64_t seed) {
    CrossingSweepResult res;
    std::uint64_t state = seed;
    for (std::size_t i = 0; i < count; ++i) {
        CrossingInstance inst = random_crossing_instance(state);
        ++res.checked;
        if (!crossing_inequality(inst)) ++res.counterexamples;
    }
    return res;
}

}  // namespace diogon
