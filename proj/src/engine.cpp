#include "casim/engine.hpp"

#include <algorithm>
#include <cmath>

namespace casim::engine {

double cost(const RunMetrics& m) {
    return 1.0 * m.t_pa + 2.0 * m.t_ta + 5.0 * m.t_ra + 5.0 * m.l_ra +
           10.0 * m.t_vr;
}

RunResult run(const trajectory::Trajectory& traj,
              const attacker::AttackStrategy& strategy,
              const ResponseModel& response,
              const cas::SensitivityTable& table,
              const std::optional<attacker::AttackerSite>& site_override) {
    RunResult out;
    const size_t n = traj.steps.size();
    if (n == 0) return out;

    const attacker::AttackerSite site =
        site_override ? *site_override
                      : attacker::site_for(traj, strategy.site);

    ReturnBehavior behavior = response.return_behavior;
    if (behavior == ReturnBehavior::Auto) {
        behavior = traj.trend == trajectory::Trend::Level
                       ? ReturnBehavior::HoldNewLevel
                       : ReturnBehavior::ResumeOriginalRate;
    }

    cas::Cas cas(table);
    cas::IntruderTrack track;
    std::optional<attacker::InjectedState> prev;

    auto& attacked = out.attacked;
    attacked.actual_alt_ft.resize(n);
    attacked.advisories.resize(n);
    attacked.proximate.resize(n);

    double actual_alt = traj.steps[0].alt_ft;
    double own_vrate = 0.0;
    bool holding_level = false;  // HoldNewLevel engaged after an RA cleared
    int ra_run = 0;
    int ra_pending = 0;  // response delay countdown
    bool ra_following = false;
    double follow_rate = 0.0;

    for (size_t i = 0; i < n; ++i) {
        const auto& step_in = traj.steps[i];
        cas::OwnState own{step_in.x_ft, step_in.y_ft, actual_alt, own_vrate,
                          true};

        auto injected =
            attacker::respond(site, own, strategy, traj, static_cast<int>(i),
                              prev);
        std::vector<const cas::IntruderTrack*> tracks;
        if (injected.responded) {
            track.add({static_cast<int>(i), injected.slant_ft,
                       injected.bearing_deg, injected.reported_alt_ft});
            tracks.push_back(&track);
            prev = injected;
        } else {
            prev.reset();
        }

        const auto step_out = cas.step(own, tracks);
        attacked.actual_alt_ft[i] = actual_alt;
        attacked.advisories[i] = step_out.advisory;
        attacked.proximate[i] = step_out.proximate;

        auto& m = out.metrics;
        if (step_out.proximate) ++m.t_pa;
        if (step_out.advisory.kind == cas::AdvisoryKind::TA) ++m.t_ta;
        if (step_out.advisory.kind == cas::AdvisoryKind::RA) {
            ++m.t_ra;
            if (step_out.advisory.target_vrate_fps != 0.0) ++m.t_vr;
            if (ra_run == 0) ++m.ra_episodes;
            ++ra_run;
            m.l_ra = std::max(m.l_ra, ra_run);
        } else {
            ra_run = 0;
        }

        // Target response: follow the RA rate after the configured delay,
        // otherwise fly the planned rate (or hold the new level).
        if (i + 1 < n) {
            const double planned_rate =
                traj.steps[i + 1].alt_ft - step_in.alt_ft;
            double rate;
            if (step_out.advisory.kind == cas::AdvisoryKind::RA) {
                if (!ra_following) {
                    if (ra_pending >= response.response_delay_steps) {
                        ra_following = true;
                    } else {
                        ++ra_pending;
                    }
                }
                follow_rate = step_out.advisory.target_vrate_fps;
                rate = ra_following ? follow_rate : planned_rate;
            } else {
                if (ra_following && behavior == ReturnBehavior::HoldNewLevel)
                    holding_level = true;
                ra_following = false;
                ra_pending = 0;
                rate = holding_level ? 0.0 : planned_rate;
            }
            actual_alt += rate;
            own_vrate = rate;
        }
    }

    auto [max_abs, greatest] = deviation_stats(attacked, traj);
    out.metrics.max_abs_deviation_ft = max_abs;
    out.metrics.greatest_signed_deviation_ft = greatest;
    out.cost = cost(out.metrics);
    return out;
}

std::pair<double, double> deviation_stats(const AttackedTrajectory& attacked,
                                          const trajectory::Trajectory& traj) {
    double max_abs = 0.0;
    double greatest = 0.0;
    for (size_t i = 0; i < attacked.actual_alt_ft.size(); ++i) {
        const double dev = attacked.actual_alt_ft[i] - traj.steps[i].alt_ft;
        if (std::fabs(dev) > max_abs) {
            max_abs = std::fabs(dev);
            greatest = dev;
        }
    }
    return {max_abs, greatest};
}

nlohmann::json metrics_to_json(const RunMetrics& m) {
    return {{"t_pa", m.t_pa},
            {"t_ta", m.t_ta},
            {"t_ra", m.t_ra},
            {"l_ra", m.l_ra},
            {"t_vr", m.t_vr},
            {"ra_episodes", m.ra_episodes},
            {"max_abs_deviation_ft", m.max_abs_deviation_ft},
            {"greatest_signed_deviation_ft", m.greatest_signed_deviation_ft}};
}

nlohmann::json advisory_timeline_json(const AttackedTrajectory& attacked) {
    nlohmann::json timeline = nlohmann::json::array();
    const auto kind_name = [](cas::AdvisoryKind k) {
        switch (k) {
            case cas::AdvisoryKind::TA: return "TA";
            case cas::AdvisoryKind::RA: return "RA";
            default: return "none";
        }
    };
    size_t start = 0;
    for (size_t i = 1; i <= attacked.advisories.size(); ++i) {
        if (i == attacked.advisories.size() ||
            attacked.advisories[i].kind != attacked.advisories[start].kind) {
            timeline.push_back({{"kind", kind_name(attacked.advisories[start].kind)},
                                {"start", start},
                                {"length", i - start}});
            start = i;
        }
    }
    return timeline;
}

}  // namespace casim::engine
