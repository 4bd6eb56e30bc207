#include "synthetic.hpp"

#include <random>

namespace casim::testing {

trajectory::Trajectory linear_flight(std::string id, int n_steps,
                                     double start_alt_ft, double end_alt_ft,
                                     double ground_speed_fps,
                                     double x_offset_ft, double y_start_ft) {
    trajectory::Trajectory traj;
    traj.icao24 = std::move(id);
    traj.steps.reserve(n_steps);
    for (int i = 0; i < n_steps; ++i) {
        const double f = n_steps > 1 ? static_cast<double>(i) / (n_steps - 1)
                                     : 0.0;
        traj.steps.push_back({x_offset_ft, y_start_ft + ground_speed_fps * i,
                              start_alt_ft + f * (end_alt_ft - start_alt_ft)});
    }
    trajectory::classify(traj);
    return traj;
}

trajectory::Trajectory shifted(trajectory::Trajectory traj, double delta_ft) {
    for (auto& s : traj.steps) s.alt_ft += delta_ft;
    trajectory::classify(traj);
    return traj;
}

trajectory::Trajectory head_on_descent(std::string id, int n_steps) {
    return linear_flight(std::move(id), n_steps, 12000.0, 4200.0);
}

trajectory::Trajectory level_overflight(std::string id, int n_steps) {
    return linear_flight(std::move(id), n_steps, 8000.0, 8000.0);
}

trajectory::Trajectory climb_out(std::string id, int n_steps) {
    return linear_flight(std::move(id), n_steps, 4200.0, 12000.0);
}

std::vector<trajectory::Trajectory> in_band_corpus(int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<trajectory::Trajectory> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const std::string id = "syn" + std::to_string(i);
        const int n = 160 + static_cast<int>(u01(rng) * 120.0);
        const int kind = i % 10;
        if (kind < 4) {
            // shallow approach, long and low
            const double hi = 11000.0 + 5000.0 * u01(rng);
            const double lo = 4000.0 + 2000.0 * u01(rng);
            out.push_back(linear_flight(id, n, hi, lo));
        } else if (kind < 7) {
            // level segment inside the band
            const double alt = 5000.0 + 7000.0 * u01(rng);
            out.push_back(linear_flight(id, n, alt, alt));
        } else if (kind < 9) {
            // departure climb through the band
            const double lo = 4000.0 + 2000.0 * u01(rng);
            const double hi = 13000.0 + 6000.0 * u01(rng);
            out.push_back(linear_flight(id, n, lo, hi));
        } else {
            // deep climb: mid and end points above the reachable envelope
            const double lo = 8500.0 + 1000.0 * u01(rng);
            const double hi = 29500.0 + 2500.0 * u01(rng);
            const int deep_n = 260 + static_cast<int>(40.0 * u01(rng));
            out.push_back(linear_flight(id, deep_n, lo, hi, 480.0));
        }
    }
    return out;
}

}  // namespace casim::testing
