#pragma once

// Arbitrarily large integer-distance sets in general position: rational
// points on the unit circle whose pairwise chords are rational, then one
// homothety clears every denominator at once. No three concyclic points are
// ever collinear, so general position comes for free.

#include "diogon/set.hpp"

#include <cstddef>
#include <vector>

namespace diogon {

// A primitive Pythagorean triple p^2 + q^2 = r^2 standing in for the angle
// with cos = p/r, sin = q/r.
struct PythagoreanAngle {
    Int p, q, r;
    bool operator==(const PythagoreanAngle& o) const {
        return p == o.p && q == o.q && r == o.r;
    }
};

// First `count` primitive triples ordered by hypotenuse, then odd leg.
// Generated from the two-parameter form (m^2-n^2, 2mn, m^2+n^2) over coprime
// m > n of opposite parity; deterministic.
std::vector<PythagoreanAngle> gen_pythagorean_angles(std::size_t count);

// Places one unit-circle point per angle: ((p^2-q^2)/r^2, 2pq/r^2), which is
// the double-angle image of (p/r, q/r). The chord between angles i and j is
// the exact rational 2|q_i p_j - p_i q_j| / (r_i r_j). Duplicate angles
// throw std::domain_error.
QuasiDiophantineSet place_on_circle(const std::vector<PythagoreanAngle>& angles);

// Scales a rational-distance set (>= 2 points) by the least common multiple
// of the distance denominators: the minimal positive integer homothety
// making every pairwise distance a natural. Throws std::domain_error on
// fewer than 2 points.
DiophantineSet homothety_scale(const QuasiDiophantineSet& qs);

// Minimal positive integer S with S*d integral for every matrix entry d:
// the lcm of the reduced denominators. Exposed for direct testing.
Int lcm_of_denominators(const std::vector<std::vector<Rational>>& matrix);

// End-to-end: n concyclic points (scaled onto the circle x^2 + y^2 = S^2)
// with natural pairwise distances and no collinear triple. n = 1 is a single
// point with scale 1. Throws std::domain_error on n = 0.
DiophantineSet construct_diophantine(std::size_t n);

}  // namespace diogon
