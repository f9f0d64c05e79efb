#include "roadforge/polyline.hpp"

#include <utility>

#include "roadforge/errors.hpp"

namespace roadforge {

std::size_t remove_duplicate_points(std::vector<Vec2>& points, double tol) {
    if (points.empty()) return 0;
    std::size_t kept = 1;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (distance(points[i], points[kept - 1]) > tol) {
            points[kept++] = points[i];
        }
    }
    const std::size_t removed = points.size() - kept;
    points.resize(kept);
    return removed;
}

RoadPolyline::RoadPolyline(std::vector<Vec2> points, std::string source_id)
    : points_(std::move(points)), source_id_(std::move(source_id)) {
    if (points_.size() < 2) {
        throw InvalidPolylineError("polyline '" + source_id_ + "' needs at least 2 points, got " +
                                   std::to_string(points_.size()));
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (distance(points_[i], points_[i - 1]) <= kMinPointSpacing) {
            throw InvalidPolylineError("polyline '" + source_id_ +
                                       "' has coincident consecutive points at index " +
                                       std::to_string(i));
        }
    }
}

}  // namespace roadforge
