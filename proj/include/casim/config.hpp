#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "casim/cas.hpp"
#include "casim/engine.hpp"
#include "casim/optimizer.hpp"
#include "casim/trajectory.hpp"

namespace casim::config {

struct HeatmapGrid {
    int nx = 6;
    int ny = 6;
    // Bounding box in local tangent-plane feet; unset = derived from data.
    std::optional<double> min_x_ft, min_y_ft, max_x_ft, max_y_ft;
};

struct ExperimentConfig {
    trajectory::PipelineConfig pipeline;
    bool altitudes_in_meters = true;  // OpenSky reports meters
    optimizer::OptimizerConfig opt;
    engine::ResponseModel response;
    cas::SensitivityTable sensitivity = cas::SensitivityTable::defaults();
    HeatmapGrid heatmap;
    int workers = 1;
    uint64_t seed = 0;
};

// Missing keys keep their defaults; unknown keys are ignored.
ExperimentConfig from_json(const nlohmann::json& j);
ExperimentConfig load(const std::string& path);

}  // namespace casim::config
