#pragma once

// Exact geometric predicates over QuadPoints. All points handed to one call
// must be pairwise combinable (one field plus rationals); a mismatch
// surfaces as std::domain_error from the underlying arithmetic.

#include "diogon/quad.hpp"

#include <cstddef>
#include <vector>

namespace diogon {

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
// 0 collinear.
int orientation(const QuadPoint& a, const QuadPoint& b, const QuadPoint& c);

bool collinear(const QuadPoint& a, const QuadPoint& b, const QuadPoint& c);

// Strict interior containment of p in triangle (t1, t2, t3). A degenerate
// (collinear) triangle throws std::domain_error. Boundary points are out.
bool point_in_triangle(const QuadPoint& p, const QuadPoint& t1,
                       const QuadPoint& t2, const QuadPoint& t3);

// True iff every point is a vertex of the convex hull of the set. Requires
// at least 3 points and no collinear triple (throws std::domain_error
// otherwise). Equivalent formulation used here: no point lies strictly
// inside a triangle spanned by three others.
bool convex_position(const std::vector<QuadPoint>& pts);

// Proper crossing: the open segments (a1,a2) and (b1,b2) meet in exactly one
// point interior to both. Touching at an endpoint, collinear overlap, and
// degenerate segments all return false.
bool segments_cross(const QuadPoint& a1, const QuadPoint& a2,
                    const QuadPoint& b1, const QuadPoint& b2);

// Comparator utility: strictly-decreasing angle about `center`, valid for
// points confined to one open half-plane through `center`. Returns true when
// u precedes v in clockwise order (angle(u) > angle(v)).
bool clockwise_about(const QuadPoint& center, const QuadPoint& u, const QuadPoint& v);

}  // namespace diogon
