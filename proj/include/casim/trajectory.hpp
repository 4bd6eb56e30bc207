#pragma once

#include <optional>
#include <string>
#include <vector>

namespace casim::trajectory {

struct RawStateVector {
    double time_s = 0.0;
    std::string icao24;  // 6 hex chars
    double lat = 0.0;
    double lon = 0.0;
    std::optional<double> baro_alt_ft;
};

struct RawTrajectory {
    std::string icao24;
    std::vector<RawStateVector> records;
};

enum class Trend { Climbing, Level, Descending };
enum class Containment { Fully, Partly, Outside };

struct Step {
    double x_ft = 0.0;
    double y_ft = 0.0;
    double alt_ft = 0.0;
};

// Cleaned 1 Hz ownship trajectory in local tangent-plane coordinates.
struct Trajectory {
    std::string icao24;
    std::vector<Step> steps;
    Trend trend = Trend::Level;
    Containment containment = Containment::Outside;
};

struct PipelineConfig {
    double gap_split_s = 60.0;          // split on strictly greater gaps
    double max_missing_frac = 0.20;
    double min_alt_ft = 3750.0;
    double max_alt_ft = 30000.0;
    double max_climb_fpm = 5000.0;
    double max_descent_fpm = 4500.0;
    double trend_deadband_ft = 500.0;
    double center_lat = 0.0;
    double center_lon = 0.0;
};

struct Rejection {
    std::string stage;   // pipeline stage that rejected the flight
    std::string reason;
};

struct SplitResult {
    std::vector<RawTrajectory> trajectories;
    int duplicates_removed = 0;
};

// Group records by address and split into flights on reporting gaps
// longer than gap_split_s. Duplicate (icao24, timestamp) records keep the
// first occurrence.
SplitResult split_flights(std::vector<RawStateVector> records,
                          double gap_split_s = 60.0);

// Reject flights missing too many altitudes; trim leading/trailing gaps
// and linearly interpolate interior ones.
std::optional<Rejection> fill_altitudes(RawTrajectory& traj,
                                        double max_missing_frac = 0.20);

// Resampled 1 Hz sample prior to projection.
struct TimedFix {
    double time_s = 0.0;
    double lat = 0.0;
    double lon = 0.0;
    double alt_ft = 0.0;
};

std::vector<TimedFix> resample_1hz(const RawTrajectory& traj);

// Trim leading/trailing fixes outside the altitude window; reject when
// nothing remains.
std::optional<Rejection> threshold_altitude(std::vector<TimedFix>& fixes,
                                            const PipelineConfig& cfg);

// Reject flights exceeding the climb/descent limits or showing single-step
// altitude discontinuities.
std::optional<Rejection> rate_check(const std::vector<TimedFix>& fixes,
                                    const PipelineConfig& cfg);

void classify(Trajectory& traj, double trend_deadband_ft = 500.0);

// Flat-earth local tangent plane, feet east/north of the configured center.
std::pair<double, double> project_to_plane(double lat, double lon,
                                           double center_lat,
                                           double center_lon);

struct CleanOutcome {
    std::optional<Trajectory> traj;
    std::optional<Rejection> rejection;
};

CleanOutcome clean(const RawTrajectory& raw, const PipelineConfig& cfg);

// CSV I/O. Input columns: time, icao24, lat, lon, baroaltitude.
std::vector<RawStateVector> read_state_vectors_csv(const std::string& path,
                                                   bool altitudes_in_meters);
void write_trajectory_csv(const std::string& path, const Trajectory& traj);
Trajectory read_trajectory_csv(const std::string& path);

std::string to_string(Trend t);
std::string to_string(Containment c);

}  // namespace casim::trajectory
