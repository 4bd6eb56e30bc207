#include "casim/cas.hpp"

#include <algorithm>
#include <cmath>

#include "casim/units.hpp"

namespace casim::cas {

SensitivityTable SensitivityTable::defaults() {
    SensitivityTable t;
    t.levels = {
        {2, 0.0, 2350.0, 20.0, 0.0, false},        // TA-only regime
        {3, 2350.0, 5000.0, 25.0, 15.0, true},
        {4, 5000.0, 10000.0, 30.0, 20.0, true},
        {5, 10000.0, 20000.0, 40.0, 25.0, true},
        {6, 20000.0, 42000.0, 45.0, 30.0, true},
        {7, 42000.0, 1e9, 48.0, 35.0, true},
    };
    return t;
}

const SensitivityLevel& SensitivityTable::level_for(double own_alt_ft) const {
    for (const auto& sl : levels) {
        if (own_alt_ft >= sl.floor_ft && own_alt_ft < sl.ceiling_ft) return sl;
    }
    return own_alt_ft < levels.front().floor_ft ? levels.front() : levels.back();
}

void IntruderTrack::add(const TrackSample& sample) {
    if (!samples_.empty() && sample.step <= samples_.back().step)
        throw std::invalid_argument("IntruderTrack: non-increasing step");
    samples_.push_back(sample);
}

double IntruderTrack::rdot_kt() const {
    if (samples_.size() < 2) return 0.0;
    const auto& a = samples_[samples_.size() - 2];
    const auto& b = samples_.back();
    const double dt = static_cast<double>(b.step - a.step);
    return fps_to_kt((b.slant_ft - a.slant_ft) / dt);
}

double IntruderTrack::vrate_fps() const {
    if (samples_.size() < 2) return 0.0;
    const auto& a = samples_[samples_.size() - 2];
    const auto& b = samples_.back();
    const double dt = static_cast<double>(b.step - a.step);
    return (b.reported_alt_ft - a.reported_alt_ft) / dt;
}

namespace {

geometry::RangeState range_state(const IntruderTrack& track) {
    return {ft_to_nm(track.latest().slant_ft), track.rdot_kt()};
}

geometry::VerticalState vertical_state(const OwnState& own,
                                       const IntruderTrack& track) {
    const double sep = own.alt_ft - track.latest().reported_alt_ft;
    const double rel_rate = own.vrate_fps - track.vrate_fps();
    // d/dt |sep|: converging when the relative rate points across the gap.
    const double sdot = sep >= 0.0 ? rel_rate : -rel_rate;
    return {std::fabs(sep), sdot};
}

// Unmodified time to CPA used for the vertical projection, clamped to the
// tau window. For an opening range the closest approach is already past,
// so altitudes are compared as they stand.
double projection_time_s(const geometry::RangeState& rs) {
    if (rs.rdot_kt >= 0.0) return 0.0;
    const double closing_kt = std::max(-rs.rdot_kt, -geometry::kRdotFloorKt);
    const double t = kSecPerHour * rs.r_nm / closing_kt;
    return std::clamp(t, 0.0, geometry::kTauWindowS);
}

}  // namespace

Phase surveillance_phase(const OwnState& own, const IntruderTrack& track) {
    if (track.empty()) return Phase::Passive;
    const bool active = geometry::active_surveillance(
        vertical_state(own, track), range_state(track), own.airborne);
    return active ? Phase::Active : Phase::Passive;
}

Assessment assess(const OwnState& own, const IntruderTrack& track,
                  const SensitivityLevel& sl, const SensitivityTable& table) {
    Assessment out;
    if (track.empty()) return out;

    const auto rs = range_state(track);
    const double sep = std::fabs(own.alt_ft - track.latest().reported_alt_ft);
    out.proximate = rs.r_nm <= table.proximate_range_nm &&
                    sep <= table.proximate_alt_ft;

    if (rs.r_nm <= 0.0) return out;
    const double tau = geometry::range_tau(rs);
    const double t = projection_time_s(rs);
    const double projected_sep =
        std::fabs((own.alt_ft + own.vrate_fps * t) -
                  (track.latest().reported_alt_ft + track.vrate_fps() * t));

    if (sl.ra_enabled && tau <= sl.ra_tau_s &&
        projected_sep < table.ra_vertical_thresh_ft) {
        out.kind = AdvisoryKind::RA;
    } else if (tau <= sl.ta_tau_s &&
               projected_sep < table.ta_vertical_thresh_ft) {
        out.kind = AdvisoryKind::TA;
    }
    return out;
}

Advisory select_sense(const OwnState& own, const IntruderTrack& track,
                      const SensitivityTable& table) {
    const auto rs = range_state(track);
    const double t = projection_time_s(rs);
    const double sep = own.alt_ft - track.latest().reported_alt_ft;
    const double intruder_rate = track.vrate_fps();
    const auto predicted = [&](double own_rate) {
        return std::fabs(sep + (own_rate - intruder_rate) * t);
    };

    Advisory ra;
    ra.kind = AdvisoryKind::RA;
    const double rel_rate = own.vrate_fps - intruder_rate;
    if (sep * rel_rate > 0.0 && predicted(0.0) >= table.ra_vertical_thresh_ft) {
        ra.sense = Sense::LevelOff;
        ra.target_vrate_fps = 0.0;
        return ra;
    }
    const double up = predicted(table.ra_rate_fps);
    const double down = predicted(-table.ra_rate_fps);
    if (up >= down) {  // ties break toward Climb
        ra.sense = Sense::Climb;
        ra.target_vrate_fps = table.ra_rate_fps;
    } else {
        ra.sense = Sense::Descend;
        ra.target_vrate_fps = -table.ra_rate_fps;
    }
    return ra;
}

StepOutput Cas::step(const OwnState& own,
                     const std::vector<const IntruderTrack*>& tracks) {
    const SensitivityLevel& sl = table_.level_for(std::max(own.alt_ft, 0.0));

    Assessment best;
    const IntruderTrack* threat = nullptr;
    for (const IntruderTrack* track : tracks) {
        if (track == nullptr || track->empty()) continue;
        Assessment a = assess(own, *track, sl, table_);
        if (surveillance_phase(own, *track) == Phase::Passive &&
            a.kind == AdvisoryKind::RA) {
            a.kind = AdvisoryKind::TA;  // no RA without active surveillance
        }
        best.proximate = best.proximate || a.proximate;
        if (a.kind > best.kind) {
            best.kind = a.kind;
            if (a.kind == AdvisoryKind::RA) threat = track;
        }
    }

    StepOutput out;
    out.proximate = best.proximate;

    if (best.kind == AdvisoryKind::RA) {
        if (!ra_active_) {
            ra_active_ = true;
            ra_age_ = 0;
            latched_ = select_sense(own, *threat, table_);
        }
        ++ra_age_;
        clear_count_ = 0;
        out.advisory = latched_;
    } else if (ra_active_) {
        ++ra_age_;
        ++clear_count_;
        if (ra_age_ <= table_.ra_min_hold_steps ||
            clear_count_ < table_.ra_clear_steps) {
            out.advisory = latched_;
        } else {
            ra_active_ = false;
            clear_count_ = 0;
            out.advisory.kind = best.kind;
        }
    } else {
        out.advisory.kind = best.kind;
    }
    return out;
}

}  // namespace casim::cas
