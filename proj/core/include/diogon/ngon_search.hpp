#pragma once

// Frame-based search for integer-distance point sets containing a fixed
// baseline: P = (0,0) and Q = (k,0) at integer distance k, plus apex
// vertices at integer distances (a, b) <= M from P and Q. Apex ordinates are
// generally quadratic irrationals; two apexes can coexist only when their
// mutual distance is a natural and no three points fall on a line.
//
// The search route factors ordinates into square-free radicand classes and
// finds maximum compatible sets as cliques; brute_force_oracle re-derives
// the same answers from coordinates alone (rational arithmetic, subset
// enumeration, no graph) so the two routes can be compared bit for bit.

#include "diogon/quad.hpp"
#include "diogon/set.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace diogon {

enum class SearchMode { sets, convex_polygons, concave_polygons };

const char* to_string(SearchMode m);
std::optional<SearchMode> search_mode_from_string(std::string_view s);

struct SearchConfig {
    Int k{1};  // baseline length, >= 1
    Int M{1};  // distance budget per baseline endpoint, >= 1
    std::optional<std::size_t> target_n;
    SearchMode mode = SearchMode::sets;
};

// One admissible apex: integer distances a to P and b to Q with the strict
// triangle inequality |a-b| < k < a+b (equality would put the apex on the
// baseline). Coordinates: x = (a^2 - b^2 + k^2) / (2k), y = sign * y_coeff *
// sqrt(D) with y^2 = s = a^2 - x^2 > 0 and D the square-free class of s.
struct ApexCandidate {
    Int k;
    Int a, b;
    int sign;  // +1 upper half-plane, -1 lower
    Rational x;
    Rational s;
    Int D;
    Rational y_coeff;  // positive

    bool operator==(const ApexCandidate& o) const {
        return k == o.k && a == o.a && b == o.b && sign == o.sign;
    }
};

QuadPoint baseline_p();
QuadPoint baseline_q(const Int& k);
QuadPoint apex_point(const ApexCandidate& c);

// Derives x, s, D, y_coeff from (k, a, b, sign). Throws std::domain_error
// unless k, a, b >= 1, |a - b| < k < a + b and sign is +1 or -1.
ApexCandidate make_apex_candidate(const Int& k, const Int& a, const Int& b, int sign);

// All candidates for the frame, ordered by (a, b, sign with + first).
// Throws std::domain_error on k < 1 or M < 1.
std::vector<ApexCandidate> enumerate_apexes(const SearchConfig& cfg);

// Mutual integer distance when u and v can coexist in one set: distance a
// natural and neither baseline endpoint collinear with the pair. Absent
// otherwise (mismatched radicand classes, irrational or non-integer
// distance, baseline collinearity). Identical candidates or different
// frames throw std::invalid_argument.
std::optional<Int> compatible(const ApexCandidate& u, const ApexCandidate& v);

struct CompatibilityGraph {
    Int k, M;
    std::vector<ApexCandidate> vertices;
    // i < j, ascending lexicographic; weight = mutual integer distance.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Int>> edges;
};

// Deterministic regardless of thread count.
CompatibilityGraph build_graph(const SearchConfig& cfg, unsigned threads = 1);

// All maximal legal vertex sets of size >= min_size, where legal means
// pairwise adjacent with no collinear apex triple. Maximal graph cliques
// containing a collinear triple are split by removing each offender in
// turn; results are deduplicated, filtered to maximal sets, re-verified
// from coordinates, and returned sorted by size descending then
// lexicographic index order.
std::vector<std::vector<std::size_t>> find_max_cliques(const CompatibilityGraph& g,
                                                       std::size_t min_size);

struct Witness {
    // points[0] = P, points[1] = Q, then apexes ordered by (x, sign, a, b).
    DiophantineSet set;
    std::vector<ApexCandidate> apexes;
    Int D{1};                       // shared radicand class of the apexes
    bool convex = false;            // class of the assembled polygon
    bool no_interior_vertex = false;  // no vertex strictly inside a triangle
                                      // spanned by three other vertices
};

struct SearchReport {
    Int k, M;
    SearchMode mode = SearchMode::sets;
    std::optional<std::size_t> target_n;
    std::string completeness_scope;
    std::size_t apex_count = 0;
    std::size_t edge_count = 0;
    // 2 baseline endpoints + apexes of the best set; 2 means no set of the
    // requested kind exists in the frame.
    std::size_t max_n_found = 0;
    Int bound_4k;
    bool exceeded = false;
    std::vector<Witness> witnesses;  // every maximum set, canonically ordered
};

// Exhaustive search of the frame. Mode `sets` maximizes over all legal
// sets; `convex_polygons` over legal sets in convex position (with the
// baseline endpoints); `concave_polygons` over legal sets that are not in
// convex position. Witnesses are all maximum-size sets unless target_n is
// set and unmet (then the list is empty).
SearchReport search(const SearchConfig& cfg, unsigned threads = 1);

// Independent ground truth for small frames (M <= 12, else throws
// std::domain_error): enumerates subsets of the candidate list by DFS with
// pairwise re-verification from coordinates in plain rational arithmetic.
// No radicand classes, no graph, no cliques. Produces a SearchReport
// canonically identical to search() on the same config.
SearchReport brute_force_oracle(const SearchConfig& cfg);

// Star-shaped polygonization: P first, then the vertices above the P-Q line
// in clockwise order about P, then Q, then the vertices below. Always a
// simple polygon for a set in general position; verified edge-by-edge
// before returning. Throws std::domain_error on a collinear triple, P == Q,
// P or Q missing, or fewer than 3 points.
std::vector<QuadPoint> assemble_polygon(const std::vector<QuadPoint>& pts,
                                        const QuadPoint& P, const QuadPoint& Q);

enum class PolygonClass { convex, concave };

// Walks the ordered boundary: every turn the same way is convex, any
// reversal is concave. Degenerate (consecutive collinear vertices) or
// non-simple input throws std::domain_error.
PolygonClass classify_polygon(const std::vector<QuadPoint>& ordered);

namespace detail {
// Plain maximal-clique enumeration (pivoting Bron-Kerbosch over a
// degeneracy order) on an adjacency matrix; exposed for direct testing.
std::vector<std::vector<std::size_t>> bron_kerbosch(
    const std::vector<std::vector<bool>>& adj);
}  // namespace detail

}  // namespace diogon
