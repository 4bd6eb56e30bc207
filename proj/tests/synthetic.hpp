#pragma once

#include <string>
#include <vector>

#include "casim/trajectory.hpp"

namespace casim::testing {

// Straight 1 Hz flight parallel to the y axis with a linear altitude
// profile; the workhorse fixture for engine and optimizer tests.
trajectory::Trajectory linear_flight(std::string id, int n_steps,
                                     double start_alt_ft, double end_alt_ft,
                                     double ground_speed_fps = 420.0,
                                     double x_offset_ft = 0.0,
                                     double y_start_ft = 0.0);

// Shifts every altitude by delta and re-classifies.
trajectory::Trajectory shifted(trajectory::Trajectory traj, double delta_ft);

// The three canonical encounter shapes.
trajectory::Trajectory head_on_descent(std::string id, int n_steps = 240);
trajectory::Trajectory level_overflight(std::string id, int n_steps = 240);
trajectory::Trajectory climb_out(std::string id, int n_steps = 240);

// Mixed-trend corpus inside the vulnerable band; deterministic in seed.
// Includes deep climbs whose mid and end points sit above the reachable
// slant envelope.
std::vector<trajectory::Trajectory> in_band_corpus(int count, uint64_t seed);

}  // namespace casim::testing
