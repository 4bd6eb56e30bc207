#pragma once

#include <optional>
#include <vector>

#include "json.hpp"

#include "casim/attacker.hpp"
#include "casim/cas.hpp"
#include "casim/trajectory.hpp"

namespace casim::engine {

struct RunMetrics {
    int t_pa = 0;  // steps with the injected aircraft proximate
    int t_ta = 0;  // steps in TA state
    int t_ra = 0;  // steps in RA state
    int l_ra = 0;  // longest continuous RA
    int t_vr = 0;  // RA steps requiring a nonzero vertical rate
    int ra_episodes = 0;
    double max_abs_deviation_ft = 0.0;
    double greatest_signed_deviation_ft = 0.0;
};

enum class ReturnBehavior { HoldNewLevel, ResumeOriginalRate, Auto };

struct ResponseModel {
    double ra_follow_vrate_fps = 25.0;  // 1500 ft/min
    int response_delay_steps = 0;
    // Auto: HoldNewLevel for level targets, ResumeOriginalRate otherwise.
    ReturnBehavior return_behavior = ReturnBehavior::Auto;
};

struct AttackedTrajectory {
    std::vector<double> actual_alt_ft;  // same length as the input
    std::vector<cas::Advisory> advisories;
    std::vector<bool> proximate;
};

struct RunResult {
    RunMetrics metrics;
    AttackedTrajectory attacked;
    double cost = 0.0;
};

// C(x) = 1*t_PA + 2*t_TA + 5*t_RA + 5*l_RA + 10*t_VR
double cost(const RunMetrics& m);

// Deterministic single-run simulation: attacker response, CAS step and
// target RA response at 1 Hz. site_override pins the attacker to a fixed
// point (heatmap mode) instead of the strategy's Mid/End selector.
RunResult run(const trajectory::Trajectory& traj,
              const attacker::AttackStrategy& strategy,
              const ResponseModel& response,
              const cas::SensitivityTable& table,
              const std::optional<attacker::AttackerSite>& site_override =
                  std::nullopt);

// (max |deviation|, deviation of largest magnitude with sign)
std::pair<double, double> deviation_stats(const AttackedTrajectory& attacked,
                                          const trajectory::Trajectory& traj);

nlohmann::json metrics_to_json(const RunMetrics& m);

// Run-length encoded advisory timeline: [{kind, start, length}, ...]
nlohmann::json advisory_timeline_json(const AttackedTrajectory& attacked);

}  // namespace casim::engine
