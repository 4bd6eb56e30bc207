#pragma once

#include <stdexcept>

namespace casim::geometry {

// Horizontal state of an intruder relative to ownship.
struct RangeState {
    double r_nm = 0.0;     // slant range, NM
    double rdot_kt = 0.0;  // range rate, kt; negative = closing
};

// Vertical state of an intruder relative to ownship.
struct VerticalState {
    double s_ft = 0.0;      // |altitude separation|, ft
    double sdot_fps = 0.0;  // separation rate, ft/s; negative = converging
};

// Full attacker-target geometry snapshot. slant^2 = horiz^2 + vert^2.
struct EncounterGeometry {
    double slant_ft = 0.0;
    double horiz_ft = 0.0;
    double vert_ft = 0.0;
    double rtt_s = 0.0;
};

inline constexpr double kSmodNm = 3.0;
inline constexpr double kVerticalOffsetFt = 4500.0;
inline constexpr double kTauWindowS = 60.0;
inline constexpr double kRdotFloorKt = -6.0;
inline constexpr double kSdotFloorFps = -1.0;
inline constexpr double kAltitudeGateFt = 10000.0;
inline constexpr double kCasMinAltFt = 2350.0;
inline constexpr double kVulnerableBandFloorFt = 2350.0;
inline constexpr double kVulnerableBandCeilingFt = 13306.0;

// Nominal Mode S transponder turnaround, assumed known and removed from
// measured round-trip times before range conversion.
inline constexpr double kProcessingDelayS = 128e-6;

// Modified range tau in seconds. r in NM, rdot in kt; the quotient is in
// hours and converted. Negative results mean the intruder is already
// inside the SMOD distance.
double range_tau(const RangeState& state);

// Vertical active-surveillance criterion: -(s - 4500) / min(-1, sdot) <= 60.
bool vertical_tau_met(const VerticalState& state);

// Horizontal active-surveillance criterion: -(r - 3) / min(-6, rdot) <= 60 s,
// with the window expressed in hours to match the kt rate unit. For opening
// geometry this reduces to r <= 3.1 NM.
bool horizontal_tau_met(const RangeState& state);

// An intruder is under active surveillance when airborne, within 10000 ft
// vertically and inside both tau windows.
bool active_surveillance(const VerticalState& vert, const RangeState& range,
                         bool airborne);

// Slant range from interrogation round-trip time: r = c * RTT / 2.
double slant_from_rtt(double rtt_s);
double rtt_from_slant(double slant_ft);

// Horizontal distance from slant range and altitude separation.
// Throws std::domain_error when s > r (impossible geometry).
double decompose_slant(double r_ft, double s_ft);

bool in_vulnerable_band(double alt_ft);

}  // namespace casim::geometry
