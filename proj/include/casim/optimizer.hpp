#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "casim/engine.hpp"

namespace casim::optimizer {

struct OptimizerConfig {
    int max_iterations = 20;        // gradient iterations per restart phase
    int restarts = 5;               // restart budget
    double probe_crossing = 0.02;
    double probe_vrate_fps = 2.0;
    double initial_crossing_step = 0.25;
    double initial_vrate_step_fps = 30.0;
    double decay = 0.85;            // per-iteration step decay, reset on restart
    int plateau_patience = 3;       // iterations without improvement before restart
    uint64_t rng_seed = 0;
    bool optimize_site = true;      // false pins the site (heatmap mode)
    attacker::SitePosition fixed_site = attacker::SitePosition::MidTrajectory;
    std::optional<attacker::AttackerSite> site_override;
};

struct IterationRecord {
    attacker::AttackStrategy strategy;
    double cost = 0.0;
};

struct OptimizationResult {
    attacker::AttackStrategy best;
    double best_cost = 0.0;
    engine::RunMetrics best_metrics;
    std::vector<IterationRecord> trace;
    int restarts_used = 0;
};

attacker::AttackStrategy clamp(attacker::AttackStrategy s);

OptimizationResult optimize(const trajectory::Trajectory& traj,
                            const OptimizerConfig& cfg,
                            const engine::ResponseModel& response,
                            const cas::SensitivityTable& table);

struct GridSpec {
    int crossing_points = 51;
    int vrate_points = 85;
    bool both_sites = true;
    size_t max_cells = 200000;
};

struct GridCell {
    attacker::AttackStrategy strategy;
    double cost = 0.0;
};

// Exhaustive lattice evaluation; independent brute-force reference.
std::pair<attacker::AttackStrategy, double> grid_oracle(
    const trajectory::Trajectory& traj, const GridSpec& spec,
    const engine::ResponseModel& response, const cas::SensitivityTable& table,
    const std::optional<attacker::AttackerSite>& site_override = std::nullopt,
    std::vector<GridCell>* cells_out = nullptr);

}  // namespace casim::optimizer
