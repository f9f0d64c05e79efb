#pragma once

#include <cstddef>
#include <string>

#include "roadforge/curvature.hpp"

namespace roadforge {

enum class Projection {
    kNone,              ///< input coordinates are already planar meters
    kLocalTangentPlane  ///< lon/lat degrees, projected about the polyline centroid
};

/// Every tunable that affects pipeline output, in one auditable record.
struct PipelineConfig {
    std::size_t q = 4;              ///< curvature window half-width, window 2q+1
    CurvatureMethod method = CurvatureMethod::kIndependentCoordinates;
    std::size_t vote_w = 7;         ///< turn-vote window size, odd
    double straight_delta = 2e-3;   ///< |kappa| below this is straight, 1/m
    double error_bound = 2.0;       ///< max deviation per fitted primitive, m
    double half_width = 3.5;        ///< road half-width for edge offsets, m
    double sample_step = 2.0;       ///< arc step for sampled outputs, m
    Projection projection = Projection::kNone;

    /// Throws InvalidParameterError on any out-of-range field.
    void validate() const;
};

std::string to_string(CurvatureMethod method);
std::string to_string(Projection projection);
CurvatureMethod curvature_method_from_string(const std::string& name);
Projection projection_from_string(const std::string& name);

}  // namespace roadforge
