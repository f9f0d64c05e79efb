#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "roadforge/fitting.hpp"

namespace roadforge::io {

/// JSON document for one road model: config snapshot, per-primitive
/// {type, id, nbr, paramX, paramY, length, max_error}, total length and
/// junction diagnostics. Serialization is deterministic and numbers
/// round-trip losslessly.
std::string model_to_json_string(const RoadModel& model);
RoadModel model_from_json_string(const std::string& text);

void export_model(const RoadModel& model, const std::string& path);
RoadModel import_model(const std::string& path);

/// Multi-road document sharing one config, as written by the CLI.
std::string road_set_to_json_string(std::span<const RoadModel> models,
                                    const PipelineConfig& config);
std::pair<std::vector<RoadModel>, PipelineConfig> road_set_from_json_string(
    const std::string& text);

void export_road_set(std::span<const RoadModel> models, const PipelineConfig& config,
                     const std::string& path);
std::pair<std::vector<RoadModel>, PipelineConfig> import_road_set(const std::string& path);

}  // namespace roadforge::io
