#pragma once

#include "diogon/set.hpp"

#include <string>

namespace diogon {

// Static SVG figure of a certified set: every vertex, every pairwise segment
// labeled with its integer distance, the star polygonization around
// points[0] and points[1] drawn heavier than the remaining chords. Doubles
// enter only for layout; labels come from the exact distance matrix, the
// viewport autoscales to the set and the output is byte-deterministic.
// Throws std::domain_error on an empty set.
std::string render_svg(const DiophantineSet& set);

}  // namespace diogon
