#include "diogon/set.hpp"

#include "diogon/predicates.hpp"

#include <stdexcept>

namespace diogon {

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

template <typename Entry>
bool check_matrix_shape(const std::vector<std::vector<Entry>>& m, std::size_t n,
                        std::string* why) {
    if (m.size() != n) return fail(why, "distance matrix has wrong row count");
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) return fail(why, "distance matrix has wrong column count");
        if (m[i][i] != 0) return fail(why, "distance matrix diagonal is not zero");
        for (std::size_t j = 0; j < n; ++j)
            if (m[i][j] != m[j][i]) return fail(why, "distance matrix is not symmetric");
    }
    return true;
}

bool check_no_collinear_triple(const std::vector<QuadPoint>& pts, std::string* why) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t l = j + 1; l < pts.size(); ++l)
                if (collinear(pts[i], pts[j], pts[l]))
                    return fail(why, "collinear triple present");
    return true;
}

}  // namespace

bool verify_certificate(const DiophantineSet& s, std::string* why) {
    const std::size_t n = s.points.size();
    if (n == 0) return fail(why, "empty point set");
    if (!check_matrix_shape(s.distance_matrix, n, why)) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Int& d = s.distance_matrix[i][j];
            if (d < 1) return fail(why, "distance entry below 1");
            QuadScalar expect{Rational(d * d)};
            if (distance_squared(s.points[i], s.points[j]) != expect)
                return fail(why, "distance entry does not match coordinates");
        }
    return check_no_collinear_triple(s.points, why);
}

bool verify_quasi_certificate(const QuasiDiophantineSet& s, std::string* why) {
    const std::size_t n = s.points.size();
    if (n == 0) return fail(why, "empty point set");
    if (!check_matrix_shape(s.distance_matrix, n, why)) return false;
    for (const QuadPoint& p : s.points) {
        if (!p.x().is_rational() || !p.y().is_rational())
            return fail(why, "coordinate is not rational");
        if (p.x() * p.x() + p.y() * p.y() != QuadScalar(1))
            return fail(why, "point is not on the unit circle");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational& d = s.distance_matrix[i][j];
            if (d <= 0) return fail(why, "distance entry not positive");
            if (distance_squared(s.points[i], s.points[j]) != QuadScalar(d * d))
                return fail(why, "distance entry does not match coordinates");
        }
    return check_no_collinear_triple(s.points, why);
}

std::vector<std::vector<Int>> integer_distance_matrix(const std::vector<QuadPoint>& pts) {
    const std::size_t n = pts.size();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto d = integer_distance(pts[i], pts[j]);
            if (!d)
                throw std::domain_error(
                    "integer_distance_matrix: pair without a natural distance");
            m[i][j] = m[j][i] = *d;
        }
    return m;
}

}  // namespace diogon
