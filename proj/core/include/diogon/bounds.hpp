#pragma once

// Closed-form vertex-count bounds for integer-distance polygons with a
// shortest side k, the recorded small-k range claims, and the half-plane
// distance-difference profile that drives the convex bound.

#include "diogon/ngon_search.hpp"
#include "diogon/set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diogon {

// All four throw std::domain_error on k < 1.
Int n0_bound(const Int& k);                // 4k: overall vertex cap
Int concave_side_bound(const Int& k);      // 2k+1: cap along one boundary chain
Int concave_diagonal_bound(const Int& k);  // 4k: cap through the diagonal split
Int convex_halfplane_bound(const Int& k);  // 2k-1: cap per open half-plane

struct ClaimedSpan {
    unsigned lo = 0, hi = 0;
    std::vector<unsigned> open;  // claimed attainable but with no known witness
};

// Recorded range claims for small shortest sides. `any` applies to every
// n-gon; convex/concave split the claim by polygon class where the source
// does.
struct ClaimedRange {
    Int k;
    std::optional<ClaimedSpan> any, convex, concave;
    std::string note;
};

// Present for k in {1, 2, 3}; absent for larger k (no recorded claim).
std::optional<ClaimedRange> claimed_n_range(const Int& k);

struct HalfplaneGroup {
    std::vector<std::size_t> vertices;  // set indices, clockwise about P
    std::vector<Int> deltas;            // |VP| - |VQ| per vertex, same order
    bool strictly_monotone = true;      // strictly increasing or decreasing
    bool all_distinct = true;
};

struct HalfplaneProfile {
    HalfplaneGroup upper, lower;
};

// For each vertex V off the baseline, delta(V) = |VP| - |VQ| is an integer
// with |delta| <= k-1 (strict triangle inequality); at most k-1 distinct
// values fit in each open half-plane, which is where the convex bound comes
// from. Vertices are grouped by half-plane and ordered clockwise about P;
// monotonicity and distinctness are reported as observed, not assumed.
// Throws std::domain_error on bad indices or matrix[p][q] != k.
HalfplaneProfile halfplane_difference_profile(const DiophantineSet& s,
                                              std::size_t p_index,
                                              std::size_t q_index, const Int& k);

struct BoundReport {
    Int k;
    Int n0, concave_side, concave_diagonal, convex_halfplane;
    std::optional<ClaimedRange> claimed;
    std::optional<std::size_t> search_max_n;
    bool consistent = true;  // search_max_n absent or <= n0
};

BoundReport make_bound_report(const Int& k);

// Cross-checks a finished search against the closed-form cap.
BoundReport check_claims(const SearchReport& rep);

// Human-readable fixed-width table.
std::string bound_report_table(const BoundReport& rep);

}  // namespace diogon
