#pragma once

#include <string>
#include <vector>

#include "roadforge/pipeline.hpp"

namespace roadforge::io {

/// Writes stage plots for one processed polyline.
///
/// `path` receives a combined SVG with one layer per stage; next to it one
/// file per stage is written (suffixes _raw, _curvature, _labels, _fit,
/// _road). Color semantics: input points red, curvature combs along the
/// normals, labels colored by class, fitted centerline blue, road edges
/// magenta. The viewBox contains all input points padded by the configured
/// half width. Returns the list of files written.
std::vector<std::string> plot_stages(const RoadPolyline& polyline,
                                     const StageArtifacts& artifacts, const RoadModel& model,
                                     const std::string& path);

}  // namespace roadforge::io
