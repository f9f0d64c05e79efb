#include "roadforge/arc_length.hpp"

#include "roadforge/errors.hpp"

namespace roadforge {

ArcLengthTable cumulative_arc_length(const RoadPolyline& polyline, std::size_t origin) {
    const auto& pts = polyline.points();
    if (origin >= pts.size()) {
        throw InvalidParameterError("arc length origin " + std::to_string(origin) +
                                    " out of range for " + std::to_string(pts.size()) +
                                    " points");
    }
    ArcLengthTable table;
    table.origin = origin;
    table.l.assign(pts.size(), 0.0);
    for (std::size_t i = origin + 1; i < pts.size(); ++i) {
        table.l[i] = table.l[i - 1] + distance(pts[i - 1], pts[i]);
    }
    for (std::size_t i = origin; i > 0; --i) {
        table.l[i - 1] = table.l[i] - distance(pts[i - 1], pts[i]);
    }
    return table;
}

}  // namespace roadforge
