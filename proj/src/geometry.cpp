#include "casim/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "casim/units.hpp"

namespace casim::geometry {

double range_tau(const RangeState& state) {
    if (state.r_nm <= 0.0)
        throw std::domain_error("range_tau: slant range must be positive");
    const double numerator = state.r_nm - (kSmodNm * kSmodNm) / state.r_nm;
    const double denominator = std::min(kRdotFloorKt, state.rdot_kt);
    return kSecPerHour * -(numerator / denominator);
}

namespace {
// Absolute slack so the analytic worst-case boundaries (s = 4560 ft,
// r = 3.1 NM) land inside the window despite rounding in the quotient.
constexpr double kTauEps = 1e-9;
}  // namespace

bool vertical_tau_met(const VerticalState& state) {
    const double denominator = std::min(kSdotFloorFps, state.sdot_fps);
    return -(state.s_ft - kVerticalOffsetFt) / denominator <=
           kTauWindowS + kTauEps;
}

bool horizontal_tau_met(const RangeState& state) {
    const double denominator = std::min(kRdotFloorKt, state.rdot_kt);
    return -(state.r_nm - kSmodNm) / denominator <=
           kTauWindowS / kSecPerHour + kTauEps;
}

bool active_surveillance(const VerticalState& vert, const RangeState& range,
                         bool airborne) {
    return airborne && vert.s_ft < kAltitudeGateFt && vertical_tau_met(vert) &&
           horizontal_tau_met(range);
}

double slant_from_rtt(double rtt_s) {
    if (rtt_s < 0.0)
        throw std::domain_error("slant_from_rtt: negative round-trip time");
    return kSpeedOfLightMps * rtt_s / 2.0 * kFtPerMeter;
}

double rtt_from_slant(double slant_ft) {
    if (slant_ft < 0.0)
        throw std::domain_error("rtt_from_slant: negative slant range");
    return 2.0 * (slant_ft / kFtPerMeter) / kSpeedOfLightMps;
}

double decompose_slant(double r_ft, double s_ft) {
    if (s_ft < 0.0 || r_ft < 0.0)
        throw std::domain_error("decompose_slant: negative input");
    if (s_ft > r_ft)
        throw std::domain_error(
            "decompose_slant: altitude separation exceeds slant range");
    return std::sqrt(r_ft * r_ft - s_ft * s_ft);
}

bool in_vulnerable_band(double alt_ft) {
    return alt_ft >= kVulnerableBandFloorFt && alt_ft <= kVulnerableBandCeilingFt;
}

}  // namespace casim::geometry
