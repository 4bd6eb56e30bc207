#pragma once

#include <optional>

#include "casim/cas.hpp"
#include "casim/trajectory.hpp"

namespace casim::attacker {

enum class SitePosition { MidTrajectory, EndTrajectory };

// Static ground site at altitude 0 in local tangent-plane coordinates.
struct AttackerSite {
    double x_ft = 0.0;
    double y_ft = 0.0;
    SitePosition selector = SitePosition::MidTrajectory;
};

// Optimizer decision vector.
struct AttackStrategy {
    double crossing_point = 0.5;  // [0, 1] along the target trajectory
    double vrate_fps = 0.0;       // [-84, 84]
    SitePosition site = SitePosition::MidTrajectory;
};

inline constexpr double kVrateMinFps = -84.0;
inline constexpr double kVrateMaxFps = 84.0;

// Per-step injected track state as the ownship CAS would derive it.
struct InjectedState {
    double reported_alt_ft = 0.0;
    double slant_ft = 0.0;
    double bearing_deg = 0.0;
    bool responded = false;
    bool clamped = false;     // altitude claim exceeded the slant range
    double own_alt_ft = 0.0;  // ownship altitude at response time
};

AttackerSite site_for(const trajectory::Trajectory& traj, SitePosition selector);

// Step index at which the injected aircraft crosses the target's altitude.
int crossing_step(const AttackStrategy& strategy, size_t n_steps);

// Linear injected altitude profile crossing the target's altitude exactly
// at the crossing step.
double injected_altitude(const AttackStrategy& strategy,
                         const trajectory::Trajectory& traj, int step);

// Respond-on-arrival: the reported slant range is always the true
// site-to-ownship slant. No response outside the active-surveillance
// envelope (there is no interrogation to answer). prev provides the
// previous responding state for range/separation rate derivation.
InjectedState respond(const AttackerSite& site, const cas::OwnState& own,
                      const AttackStrategy& strategy,
                      const trajectory::Trajectory& traj, int step,
                      const std::optional<InjectedState>& prev);

}  // namespace casim::attacker
