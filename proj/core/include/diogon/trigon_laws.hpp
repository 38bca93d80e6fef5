#pragma once

// Exact law-of-cosines comparisons and the crossing-chord length inequality,
// plus the sweep drivers that grind them over parameter grids.

#include "diogon/quad.hpp"
#include "diogon/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace diogon {

// cos of the angle between sides adj1 and adj2, opposite side opp, via the
// law of cosines: (adj1^2 + adj2^2 - opp^2) / (2*adj1*adj2). All sides must
// be >= 1 and satisfy the strict triangle inequality; throws
// std::domain_error otherwise. Result lies strictly between -1 and 1.
Rational cos_angle(const Int& adj1, const Int& adj2, const Int& opp);

// Two integer triangles sharing a base side k: (k, a+k-m, a) and
// (k, b+k-m, b) with a < b and 1 <= m < k. Both are non-degenerate exactly
// when 2a > m.
struct TriangleCompareInstance {
    Int a, b, k, m;
    bool valid() const;
};

// True iff both angle comparisons hold strictly for the instance: the angle
// opposite the shorter third side has the larger cosine at both the base
// vertex and the apex. Invalid instances (including a swapped a/b pair)
// throw std::domain_error; they are never reported as false.
bool lemma1_check(const TriangleCompareInstance& inst);

struct Lemma1Row {
    Int a, b, k, m;
    Rational cos_c1, cos_c2, cos_a1, cos_a2;
    bool holds;
};

struct Lemma1SweepResult {
    std::vector<Lemma1Row> rows;  // (a, b, k, m) ascending lexicographic
    std::size_t counterexamples = 0;
};

// Full grid a < b <= b_max, a <= a_max, 1 <= m < k <= k_max, m <= m_max,
// restricted to valid instances. Deterministic row order regardless of
// thread count.
Lemma1SweepResult lemma1_sweep(const Int& a_max, const Int& b_max, const Int& k_max,
                               const Int& m_max, unsigned threads = 1);

// Minimal-angle tasks. In triangle (b, c, a) the angle alpha sits between
// sides b and c, opposite side a. Each task bounds cos(alpha) from above by
// the cosine of the smallest admissible configuration.

// Bound for the side regime c <= b - 1: cos of the angle opposite side 2 in
// triangle (b, b-1, 2), i.e. (2b^2 - 2b - 3) / (2b(b-1)). Requires b >= 2.
Rational task1_cos_bound(const Int& b);

// Bound for the side regime c >= b + 1: cos of the angle opposite side 2 in
// triangle (b, b+1, 2), i.e. (2b(b+1) - 3) / (2b(b+1)). Requires b >= 1.
Rational task2_cos_bound(const Int& b);

// Mode 1: integer triangle with c <= b - 1, b >= 3, a >= 2.
// Returns cos_angle(b, c, a) <= task1_cos_bound(b). Violated mode
// invariants or a degenerate triangle throw std::domain_error.
bool task1_check(const Int& a, const Int& b, const Int& c);

// Mode 2: integer triangle with c = b + m (m >= 1) and a >= m + 1.
// Returns cos_angle(b, c, a) <= task2_cos_bound(b).
bool task2_check(const Int& a, const Int& b, const Int& c);

struct TaskRow {
    Int a, b, c;
    Rational cos_alpha;
    Rational cos_bound;
    bool holds;
};

struct TaskSweepResult {
    std::vector<TaskRow> rows;
    std::size_t counterexamples = 0;
    // Grid instances that form a valid triangle but fall outside the task's
    // side regime; counted, never checked against a bound that does not
    // claim them.
    std::size_t skipped_out_of_hypothesis = 0;
};

// All triangles with b <= b_max, c <= b - 1, a over the full strict range
// (mode-1 instances require b >= 3; the b = 2 corner is counted as skipped).
TaskSweepResult task1_sweep(const Int& b_max, unsigned threads = 1);

// All triangles with b <= b_max, c = b + m for 1 <= m <= m_max, a over the
// full strict range [m+1, 2b+m-1].
TaskSweepResult task2_sweep(const Int& b_max, const Int& m_max, unsigned threads = 1);

// Two segments A-C2 and B-C1 crossing at a point interior to both. The
// labeling follows the two triangles of the underlying picture: each chord
// contributes one endpoint to each triangle around the crossing point.
struct CrossingInstance {
    QuadPoint A, B, C1, C2;
    bool valid() const;  // proper crossing of A-C2 and B-C1
};

// Strict chord-swap inequality |AC2| + |C1B| > |AC1| + |BC2|, compared
// exactly with nested-radical arithmetic. Invalid instances throw
// std::domain_error.
bool crossing_inequality(const CrossingInstance& inst);

// The integer distillation of the crossing inequality: with naturals
// b + (a + m) > a + (b + t) the conclusion is m > t. Returns m > t.
bool lemma2_integer_consequence(const Int& b, const Int& a, const Int& m, const Int& t);

// Deterministic pseudo-random rational crossing configuration (interior
// point plus two non-parallel directions with positive extents). `state`
// advances; the same seed always yields the same instance sequence.
CrossingInstance random_crossing_instance(std::uint64_t& state);

struct CrossingSweepResult {
    std::size_t checked = 0;
    std::size_t counterexamples = 0;
};

// Runs `count` random instances from `seed` through crossing_inequality.
CrossingSweepResult crossing_random_sweep(std::size_t count, std::uint64_t seed);

}  // namespace diogon
