#pragma once

namespace casim {

// All internal distances are feet, rates ft/s. NM/kt appear only at the
// boundary of the tau formulas, which are specified in those units.
inline constexpr double kFtPerNm = 6076.12;
inline constexpr double kMetersPerNm = 1852.0;
inline constexpr double kFtPerMeter = kFtPerNm / kMetersPerNm;
inline constexpr double kSecPerHour = 3600.0;
inline constexpr double kSpeedOfLightMps = 299792458.0;

constexpr double nm_to_ft(double nm) { return nm * kFtPerNm; }
constexpr double ft_to_nm(double ft) { return ft / kFtPerNm; }
constexpr double kt_to_fps(double kt) { return kt * kFtPerNm / kSecPerHour; }
constexpr double fps_to_kt(double fps) { return fps * kSecPerHour / kFtPerNm; }
constexpr double fpm_to_fps(double fpm) { return fpm / 60.0; }

}  // namespace casim
