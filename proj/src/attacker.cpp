#include "casim/attacker.hpp"

#include <cmath>
#include <stdexcept>

#include "casim/geometry.hpp"
#include "casim/units.hpp"

namespace casim::attacker {

AttackerSite site_for(const trajectory::Trajectory& traj,
                      SitePosition selector) {
    if (traj.steps.empty())
        throw std::invalid_argument("site_for: empty trajectory");
    const size_t idx = selector == SitePosition::MidTrajectory
                           ? traj.steps.size() / 2
                           : traj.steps.size() - 1;
    return {traj.steps[idx].x_ft, traj.steps[idx].y_ft, selector};
}

int crossing_step(const AttackStrategy& strategy, size_t n_steps) {
    if (n_steps == 0) throw std::invalid_argument("crossing_step: empty run");
    return static_cast<int>(
        std::lround(strategy.crossing_point * static_cast<double>(n_steps - 1)));
}

double injected_altitude(const AttackStrategy& strategy,
                         const trajectory::Trajectory& traj, int step) {
    const int k = crossing_step(strategy, traj.steps.size());
    return traj.steps[k].alt_ft + strategy.vrate_fps * (step - k);
}

InjectedState respond(const AttackerSite& site, const cas::OwnState& own,
                      const AttackStrategy& strategy,
                      const trajectory::Trajectory& traj, int step,
                      const std::optional<InjectedState>& prev) {
    InjectedState out;
    const double dx = site.x_ft - own.x_ft;
    const double dy = site.y_ft - own.y_ft;
    out.slant_ft = std::sqrt(dx * dx + dy * dy + own.alt_ft * own.alt_ft);
    out.bearing_deg =
        std::fmod(std::atan2(dx, dy) * 180.0 / 3.14159265358979323846 + 360.0,
                  360.0);
    out.reported_alt_ft = injected_altitude(strategy, traj, step);

    // A claimed separation larger than the measured slant is geometrically
    // impossible; the CAS would reject it via decompose_slant.
    double sep = out.reported_alt_ft - own.alt_ft;
    if (std::fabs(sep) > out.slant_ft) {
        out.reported_alt_ft =
            own.alt_ft + std::copysign(out.slant_ft, sep);
        out.clamped = true;
        sep = out.reported_alt_ft - own.alt_ft;
    }

    geometry::VerticalState vert{std::fabs(sep), 0.0};
    geometry::RangeState range{ft_to_nm(out.slant_ft), 0.0};
    if (prev && prev->responded) {
        vert.sdot_fps =
            std::fabs(sep) - std::fabs(prev->reported_alt_ft - prev->own_alt_ft);
        range.rdot_kt = fps_to_kt(out.slant_ft - prev->slant_ft);
    }
    out.own_alt_ft = own.alt_ft;
    out.responded =
        geometry::active_surveillance(vert, range, own.airborne);
    return out;
}

}  // namespace casim::attacker
