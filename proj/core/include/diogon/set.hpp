#pragma once

// Point sets in general position with recorded pairwise distances.
//
// DiophantineSet: all pairwise distances are naturals (>= 1), no three
// points collinear. QuasiDiophantineSet: rational points on the unit circle
// with rational pairwise distances, the pre-scaling stage of the concyclic
// construction.

#include "diogon/quad.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diogon {

struct DiophantineSet {
    std::vector<QuadPoint> points;
    // Symmetric, zero diagonal, entries are the exact integer distances.
    std::vector<std::vector<Int>> distance_matrix;
    // Present on constructed sets: the homothety factor that produced them.
    std::optional<Int> scale_note;
};

struct QuasiDiophantineSet {
    std::vector<QuadPoint> points;  // rational coordinates, on the unit circle
    std::vector<std::vector<Rational>> distance_matrix;
};

// Full independent re-check of a DiophantineSet: matrix shape/symmetry/zero
// diagonal, every off-diagonal entry a natural >= 1 whose square equals the
// recomputed distance_squared, and no collinear triple. On failure returns
// false and, when `why` is given, a one-line reason.
bool verify_certificate(const DiophantineSet& s, std::string* why = nullptr);

// Same spirit for the pre-scaling stage: rational coordinates on x^2+y^2=1,
// rational positive distances matching recomputation, no collinear triple,
// pairwise distinct points.
bool verify_quasi_certificate(const QuasiDiophantineSet& s, std::string* why = nullptr);

// Builds the distance matrix from coordinates via integer_distance. Throws
// std::domain_error if some pair has no natural distance.
std::vector<std::vector<Int>> integer_distance_matrix(const std::vector<QuadPoint>& pts);

}  // namespace diogon
