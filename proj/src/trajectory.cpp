#include "casim/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "casim/geometry.hpp"
#include "casim/units.hpp"

namespace casim::trajectory {

namespace {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
constexpr double kNmPerDegLat = 60.0;
}  // namespace

SplitResult split_flights(std::vector<RawStateVector> records,
                          double gap_split_s) {
    SplitResult out;
    std::stable_sort(records.begin(), records.end(),
                     [](const RawStateVector& a, const RawStateVector& b) {
                         if (a.icao24 != b.icao24) return a.icao24 < b.icao24;
                         return a.time_s < b.time_s;
                     });

    RawTrajectory current;
    for (const auto& rec : records) {
        if (!current.records.empty() && rec.icao24 == current.icao24 &&
            rec.time_s == current.records.back().time_s) {
            ++out.duplicates_removed;
            continue;
        }
        const bool new_flight =
            current.records.empty() || rec.icao24 != current.icao24 ||
            rec.time_s - current.records.back().time_s > gap_split_s;
        if (new_flight && !current.records.empty()) {
            out.trajectories.push_back(std::move(current));
            current = {};
        }
        current.icao24 = rec.icao24;
        current.records.push_back(rec);
    }
    if (!current.records.empty()) out.trajectories.push_back(std::move(current));
    return out;
}

std::optional<Rejection> fill_altitudes(RawTrajectory& traj,
                                        double max_missing_frac) {
    auto& recs = traj.records;
    if (recs.empty()) return Rejection{"fill_altitudes", "empty trajectory"};

    const size_t missing = std::count_if(
        recs.begin(), recs.end(),
        [](const RawStateVector& r) { return !r.baro_alt_ft.has_value(); });
    if (static_cast<double>(missing) / static_cast<double>(recs.size()) >
        max_missing_frac) {
        return Rejection{"fill_altitudes",
                         "more than 20% of altitude reports missing"};
    }

    // Trim leading/trailing gaps.
    auto first = std::find_if(recs.begin(), recs.end(), [](const auto& r) {
        return r.baro_alt_ft.has_value();
    });
    if (first == recs.end())
        return Rejection{"fill_altitudes", "no altitude reports"};
    auto last = std::find_if(recs.rbegin(), recs.rend(), [](const auto& r) {
                    return r.baro_alt_ft.has_value();
                }).base();
    recs.erase(last, recs.end());
    recs.erase(recs.begin(), first);

    // Linear interpolation of interior gaps over time.
    for (size_t i = 0; i < recs.size(); ++i) {
        if (recs[i].baro_alt_ft) continue;
        size_t lo = i - 1;
        size_t hi = i;
        while (!recs[hi].baro_alt_ft) ++hi;
        const double t0 = recs[lo].time_s;
        const double t1 = recs[hi].time_s;
        const double a0 = *recs[lo].baro_alt_ft;
        const double a1 = *recs[hi].baro_alt_ft;
        for (size_t j = i; j < hi; ++j) {
            const double f = (recs[j].time_s - t0) / (t1 - t0);
            recs[j].baro_alt_ft = a0 + f * (a1 - a0);
        }
        i = hi;
    }
    return std::nullopt;
}

std::vector<TimedFix> resample_1hz(const RawTrajectory& traj) {
    std::vector<TimedFix> out;
    const auto& recs = traj.records;
    if (recs.empty()) return out;
    if (recs.size() == 1) {
        out.push_back({recs[0].time_s, recs[0].lat, recs[0].lon,
                       recs[0].baro_alt_ft.value_or(0.0)});
        return out;
    }
    const double t0 = recs.front().time_s;
    const double t_end = recs.back().time_s;
    size_t seg = 0;
    for (double t = t0; t <= t_end + 1e-9; t += 1.0) {
        while (seg + 2 < recs.size() && recs[seg + 1].time_s < t) ++seg;
        const auto& a = recs[seg];
        const auto& b = recs[seg + 1];
        const double f =
            b.time_s > a.time_s ? (t - a.time_s) / (b.time_s - a.time_s) : 0.0;
        const double fc = std::clamp(f, 0.0, 1.0);
        out.push_back({t, a.lat + fc * (b.lat - a.lat),
                       a.lon + fc * (b.lon - a.lon),
                       *a.baro_alt_ft + fc * (*b.baro_alt_ft - *a.baro_alt_ft)});
    }
    return out;
}

std::optional<Rejection> threshold_altitude(std::vector<TimedFix>& fixes,
                                            const PipelineConfig& cfg) {
    const auto in_window = [&](const TimedFix& f) {
        return f.alt_ft >= cfg.min_alt_ft && f.alt_ft <= cfg.max_alt_ft;
    };
    auto first = std::find_if(fixes.begin(), fixes.end(), in_window);
    if (first == fixes.end())
        return Rejection{"threshold_altitude",
                         "no samples inside altitude window"};
    auto last = std::find_if(fixes.rbegin(), fixes.rend(), in_window).base();
    fixes.erase(last, fixes.end());
    fixes.erase(fixes.begin(), first);
    // Interior excursions would break the cleaned-trajectory contract.
    if (!std::all_of(fixes.begin(), fixes.end(), in_window))
        return Rejection{"threshold_altitude",
                         "interior altitude excursion outside window"};
    return std::nullopt;
}

std::optional<Rejection> rate_check(const std::vector<TimedFix>& fixes,
                                    const PipelineConfig& cfg) {
    const double climb_limit_fps = fpm_to_fps(cfg.max_climb_fpm);
    const double descent_limit_fps = fpm_to_fps(cfg.max_descent_fpm);
    for (size_t i = 1; i < fixes.size(); ++i) {
        const double delta = fixes[i].alt_ft - fixes[i - 1].alt_ft;
        if (std::fabs(delta) > 2.0 * climb_limit_fps)
            return Rejection{"rate_check", "altitude discontinuity"};
        if (delta > climb_limit_fps + 1e-9)
            return Rejection{"rate_check", "climb rate above limit"};
        if (delta < -(descent_limit_fps + 1e-9))
            return Rejection{"rate_check", "descent rate above limit"};
    }
    return std::nullopt;
}

void classify(Trajectory& traj, double trend_deadband_ft) {
    if (traj.steps.empty()) return;
    const double net = traj.steps.back().alt_ft - traj.steps.front().alt_ft;
    if (net > trend_deadband_ft)
        traj.trend = Trend::Climbing;
    else if (net < -trend_deadband_ft)
        traj.trend = Trend::Descending;
    else
        traj.trend = Trend::Level;

    const bool start_in = geometry::in_vulnerable_band(traj.steps.front().alt_ft);
    const bool end_in = geometry::in_vulnerable_band(traj.steps.back().alt_ft);
    if (start_in && end_in)
        traj.containment = Containment::Fully;
    else if (start_in || end_in)
        traj.containment = Containment::Partly;
    else
        traj.containment = Containment::Outside;
}

std::pair<double, double> project_to_plane(double lat, double lon,
                                           double center_lat,
                                           double center_lon) {
    const double y_nm = (lat - center_lat) * kNmPerDegLat;
    const double x_nm =
        (lon - center_lon) * kNmPerDegLat * std::cos(center_lat * kDegToRad);
    return {nm_to_ft(x_nm), nm_to_ft(y_nm)};
}

CleanOutcome clean(const RawTrajectory& raw, const PipelineConfig& cfg) {
    CleanOutcome out;
    RawTrajectory work = raw;
    if (auto rej = fill_altitudes(work, cfg.max_missing_frac)) {
        out.rejection = rej;
        return out;
    }
    auto fixes = resample_1hz(work);
    if (auto rej = threshold_altitude(fixes, cfg)) {
        out.rejection = rej;
        return out;
    }
    if (auto rej = rate_check(fixes, cfg)) {
        out.rejection = rej;
        return out;
    }
    Trajectory traj;
    traj.icao24 = raw.icao24;
    traj.steps.reserve(fixes.size());
    for (const auto& f : fixes) {
        auto [x, y] = project_to_plane(f.lat, f.lon, cfg.center_lat,
                                       cfg.center_lon);
        traj.steps.push_back({x, y, f.alt_ft});
    }
    classify(traj, cfg.trend_deadband_ft);
    out.traj = std::move(traj);
    return out;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

bool is_missing(const std::string& s) {
    return s.empty() || s == "NaN" || s == "nan" || s == "NULL" || s == "null";
}

}  // namespace

std::vector<RawStateVector> read_state_vectors_csv(const std::string& path,
                                                   bool altitudes_in_meters) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty input file " + path);

    auto header = split_line(line);
    std::map<std::string, size_t> col;
    for (size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const char* name : {"time", "icao24", "lat", "lon", "baroaltitude"}) {
        if (!col.count(name))
            throw std::runtime_error(path + ": missing column " +
                                     std::string(name));
    }

    std::vector<RawStateVector> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_line(line);
        if (fields.size() < header.size())
            throw std::runtime_error(path + ": short row");
        RawStateVector rec;
        rec.time_s = std::stod(fields[col["time"]]);
        rec.icao24 = fields[col["icao24"]];
        rec.lat = std::stod(fields[col["lat"]]);
        rec.lon = std::stod(fields[col["lon"]]);
        const std::string& alt = fields[col["baroaltitude"]];
        if (!is_missing(alt)) {
            double v = std::stod(alt);
            rec.baro_alt_ft = altitudes_in_meters ? v * kFtPerMeter : v;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "step,x_ft,y_ft,alt_ft\n";
    char buf[128];
    for (size_t i = 0; i < traj.steps.size(); ++i) {
        const auto& s = traj.steps[i];
        std::snprintf(buf, sizeof(buf), "%zu,%.3f,%.3f,%.3f\n", i, s.x_ft,
                      s.y_ft, s.alt_ft);
        out << buf;
    }
}

Trajectory read_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Trajectory traj;
    traj.icao24 = std::filesystem::path(path).stem().string();
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_line(line);
        if (fields.size() < 4) throw std::runtime_error(path + ": short row");
        traj.steps.push_back({std::stod(fields[1]), std::stod(fields[2]),
                              std::stod(fields[3])});
    }
    classify(traj);
    return traj;
}

std::string to_string(Trend t) {
    switch (t) {
        case Trend::Climbing: return "climbing";
        case Trend::Descending: return "descending";
        default: return "level";
    }
}

std::string to_string(Containment c) {
    switch (c) {
        case Containment::Fully: return "fully";
        case Containment::Partly: return "partly";
        default: return "outside";
    }
}

}  // namespace casim::trajectory
