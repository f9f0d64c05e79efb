#pragma once

#include <vector>

#include "roadforge/config.hpp"
#include "roadforge/curvature.hpp"
#include "roadforge/fitting.hpp"
#include "roadforge/segmentation.hpp"

namespace roadforge {

/// Intermediate per-stage outputs, retained for plotting and export.
struct StageArtifacts {
    std::vector<CurvatureSample> curvatures;
    LabelArray labels;
    std::vector<PrimitiveRun> runs;
};

struct PipelineResult {
    RoadModel model;
    StageArtifacts artifacts;
};

/// Deterministic composition of the four stages: curvature estimation,
/// segmentation, primitive assignment, fitting. Stage errors are rethrown
/// with the stage name attached.
PipelineResult run_pipeline(const RoadPolyline& polyline, const PipelineConfig& config);

}  // namespace roadforge
