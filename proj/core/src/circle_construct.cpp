#include "diogon/circle_construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace diogon {

std::vector<PythagoreanAngle> gen_pythagorean_angles(std::size_t count) {
    std::vector<PythagoreanAngle> out;
    if (count == 0) return out;
    for (Int cap = 8;; cap *= 2) {
        std::vector<PythagoreanAngle> all;
        for (Int m = 2; m <= cap; ++m)
            for (Int n = 1; n < m; ++n) {
                if ((m - n) % 2 == 0) continue;
                if (boost::multiprecision::gcd(m, n) != 1) continue;
                all.push_back({m * m - n * n, 2 * m * n, m * m + n * n});
            }
        std::sort(all.begin(), all.end(),
                  [](const PythagoreanAngle& x, const PythagoreanAngle& y) {
                      if (x.r != y.r) return x.r < y.r;
                      return x.p < y.p;
                  });
        // Every triple with hypotenuse <= cap^2 has m <= cap, so once the
        // prefix fits under cap^2 it is globally correct.
        if (all.size() >= count && all[count - 1].r <= cap * cap) {
            all.resize(count);
            return all;
        }
    }
}

QuasiDiophantineSet place_on_circle(const std::vector<PythagoreanAngle>& angles) {
    const std::size_t n = angles.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (angles[i].q * angles[j].p - angles[i].p * angles[j].q == 0)
                throw std::domain_error("place_on_circle: duplicate angle");

    QuasiDiophantineSet qs;
    qs.points.reserve(n);
    for (const auto& a : angles) {
        Rational x(a.p * a.p - a.q * a.q, a.r * a.r);
        Rational y(2 * a.p * a.q, a.r * a.r);
        qs.points.emplace_back(QuadScalar(x), QuadScalar(y));
    }
    qs.distance_matrix.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Int cross = angles[i].q * angles[j].p - angles[i].p * angles[j].q;
            if (cross < 0) cross = -cross;
            Rational d(2 * cross, angles[i].r * angles[j].r);
            qs.distance_matrix[i][j] = qs.distance_matrix[j][i] = d;
        }
    return qs;
}

Int lcm_of_denominators(const std::vector<std::vector<Rational>>& matrix) {
    Int scale = 1;
    for (const auto& row : matrix)
        for (const auto& d : row)
            scale = boost::multiprecision::lcm(scale, den(d));
    return scale;
}

DiophantineSet homothety_scale(const QuasiDiophantineSet& qs) {
    const std::size_t n = qs.points.size();
    if (n < 2) throw std::domain_error("homothety_scale: need at least 2 points");
    Int scale = lcm_of_denominators(qs.distance_matrix);

    DiophantineSet out;
    out.scale_note = scale;
    out.points.reserve(n);
    QuadScalar s{Rational(scale)};
    for (const auto& p : qs.points)
        out.points.emplace_back(p.x() * s, p.y() * s);
    out.distance_matrix.assign(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational d = qs.distance_matrix[i][j] * scale;
            // scale is a multiple of every reduced denominator
            out.distance_matrix[i][j] = num(d);
        }
    return out;
}

DiophantineSet construct_diophantine(std::size_t n) {
    if (n == 0) throw std::domain_error("construct_diophantine: n must be >= 1");
    auto angles = gen_pythagorean_angles(n);
    QuasiDiophantineSet qs = place_on_circle(angles);
    if (n == 1) {
        DiophantineSet out;
        out.points = qs.points;
        out.distance_matrix = {{Int(0)}};
        out.scale_note = 1;
        return out;
    }
    return homothety_scale(qs);
}

}  // namespace diogon
