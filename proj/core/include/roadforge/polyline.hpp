#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "roadforge/vec2.hpp"

namespace roadforge {

/// Consecutive points closer than this are considered coincident, meters.
inline constexpr double kMinPointSpacing = 1e-9;

/// Drops every point closer than `tol` to its predecessor. Returns the number
/// of points removed. Used by ingestion; construction rejects duplicates.
std::size_t remove_duplicate_points(std::vector<Vec2>& points, double tol = kMinPointSpacing);

/// Ordered planar point sequence in meters, as extracted from a GIS road layer.
///
/// Invariants enforced at construction: at least 2 points, no two consecutive
/// points coincident. Coordinates must already be in a local planar projection.
class RoadPolyline {
public:
    explicit RoadPolyline(std::vector<Vec2> points, std::string source_id = {});

    const std::vector<Vec2>& points() const { return points_; }
    const std::string& source_id() const { return source_id_; }
    std::size_t size() const { return points_.size(); }
    const Vec2& operator[](std::size_t i) const { return points_[i]; }
    const Vec2& front() const { return points_.front(); }
    const Vec2& back() const { return points_.back(); }

private:
    std::vector<Vec2> points_;
    std::string source_id_;
};

}  // namespace roadforge
