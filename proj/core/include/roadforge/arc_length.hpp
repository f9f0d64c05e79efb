#pragma once

#include <cstddef>
#include <vector>

#include "roadforge/polyline.hpp"

namespace roadforge {

/// Per-point cumulative signed arc length relative to a chosen origin point.
/// Chord length stands in for true arc length throughout; l is strictly
/// increasing along the point order and l[origin] == 0.
struct ArcLengthTable {
    std::vector<double> l;
    std::size_t origin{0};
};

/// l[i] = signed sum of chord lengths between `origin` and i (negative for
/// i < origin).
ArcLengthTable cumulative_arc_length(const RoadPolyline& polyline, std::size_t origin = 0);

}  // namespace roadforge
