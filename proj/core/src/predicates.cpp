#include "diogon/predicates.hpp"

#include <stdexcept>

namespace diogon {

int orientation(const QuadPoint& a, const QuadPoint& b, const QuadPoint& c) {
    QuadScalar cross = (b.x() - a.x()) * (c.y() - a.y()) -
                       (b.y() - a.y()) * (c.x() - a.x());
    return cross.sign();
}

bool collinear(const QuadPoint& a, const QuadPoint& b, const QuadPoint& c) {
    return orientation(a, b, c) == 0;
}

bool point_in_triangle(const QuadPoint& p, const QuadPoint& t1,
                       const QuadPoint& t2, const QuadPoint& t3) {
    if (collinear(t1, t2, t3))
        throw std::domain_error("point_in_triangle: degenerate triangle");
    int s1 = orientation(t1, t2, p);
    int s2 = orientation(t2, t3, p);
    int s3 = orientation(t3, t1, p);
    return s1 != 0 && s1 == s2 && s2 == s3;
}

bool convex_position(const std::vector<QuadPoint>& pts) {
    const std::size_t n = pts.size();
    if (n < 3) throw std::domain_error("convex_position: need at least 3 points");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l)
                if (collinear(pts[i], pts[j], pts[l]))
                    throw std::domain_error("convex_position: collinear triple");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m) {
                    if (m == i || m == j || m == l) continue;
                    if (point_in_triangle(pts[m], pts[i], pts[j], pts[l]))
                        return false;
                }
    return true;
}

bool segments_cross(const QuadPoint& a1, const QuadPoint& a2,
                    const QuadPoint& b1, const QuadPoint& b2) {
    int o1 = orientation(a1, a2, b1);
    int o2 = orientation(a1, a2, b2);
    int o3 = orientation(b1, b2, a1);
    int o4 = orientation(b1, b2, a2);
    // Strict straddling on both sides; any zero orientation means an
    // endpoint touch, overlap, or degeneracy, none of which qualify.
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool clockwise_about(const QuadPoint& center, const QuadPoint& u, const QuadPoint& v) {
    // Within one open half-plane the angular difference is in (-pi, pi), so
    // the cross product sign decides: cross(u-c, v-c) < 0 iff angle(u) > angle(v).
    QuadScalar cross = (u.x() - center.x()) * (v.y() - center.y()) -
                       (u.y() - center.y()) * (v.x() - center.x());
    return cross.sign() < 0;
}

}  // namespace diogon
