#include "casim/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <thread>

#include "casim/stats.hpp"

namespace fs = std::filesystem;

namespace casim::batch {

namespace {

void parallel_for(size_t n, int workers,
                  const std::function<void(size_t)>& fn) {
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    const int count = std::min<int>(workers, static_cast<int>(n));
    pool.reserve(count);
    for (int w = 0; w < count; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

std::string trend_name(trajectory::Trend t) { return trajectory::to_string(t); }

nlohmann::json result_to_json(const std::string& id,
                              const trajectory::Trajectory& traj,
                              const optimizer::OptimizationResult& res,
                              const engine::RunResult& best_run) {
    const size_t n = traj.steps.size();
    const double mean_vrate =
        n > 1 ? (traj.steps.back().alt_ft - traj.steps.front().alt_ft) /
                    static_cast<double>(n - 1)
              : 0.0;
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& it : res.trace) {
        trace.push_back({{"crossing", it.strategy.crossing_point},
                         {"vrate_fps", it.strategy.vrate_fps},
                         {"site", it.strategy.site ==
                                          attacker::SitePosition::MidTrajectory
                                      ? "mid"
                                      : "end"},
                         {"cost", it.cost}});
    }
    return {{"id", id},
            {"length", n},
            {"trend", trend_name(traj.trend)},
            {"containment", trajectory::to_string(traj.containment)},
            {"target_mean_vrate_fps", mean_vrate},
            {"best",
             {{"crossing", res.best.crossing_point},
              {"vrate_fps", res.best.vrate_fps},
              {"site", res.best.site == attacker::SitePosition::MidTrajectory
                           ? "mid"
                           : "end"}}},
            {"best_cost", res.best_cost},
            {"metrics", engine::metrics_to_json(res.best_metrics)},
            {"restarts_used", res.restarts_used},
            {"advisory_timeline", engine::advisory_timeline_json(best_run.attacked)},
            {"trace", trace}};
}

struct TrendBucket {
    int runs = 0;
    int has_ta = 0;
    int has_ra = 0;
    int has_vr = 0;
    int partly = 0;  // superset of fully
    int fully = 0;
    std::vector<double> ra_lengths;
    std::vector<double> max_devs;
    std::vector<double> signed_devs;
};

nlohmann::json bucket_json(const TrendBucket& b) {
    const auto pct = [&](int c) {
        return b.runs == 0 ? 0.0 : 100.0 * c / b.runs;
    };
    return {{"runs", b.runs},
            {"has_ta", b.has_ta},
            {"has_ta_pct", pct(b.has_ta)},
            {"has_ra", b.has_ra},
            {"has_ra_pct", pct(b.has_ra)},
            {"has_vrate", b.has_vr},
            {"has_vrate_pct", pct(b.has_vr)},
            {"partly_contained", b.partly},
            {"partly_contained_pct", pct(b.partly)},
            {"fully_contained", b.fully},
            {"fully_contained_pct", pct(b.fully)},
            {"ra_length_median", stats::median(b.ra_lengths)},
            {"ra_length_stddev", stats::stddev(b.ra_lengths)},
            {"max_deviation_median_ft", stats::median(b.max_devs)},
            {"max_deviation_stddev_ft", stats::stddev(b.max_devs)},
            {"greatest_deviation_median_ft", stats::median(b.signed_devs)}};
}

int write_aggregate(const std::vector<nlohmann::json>& results,
                    const std::string& out_dir) {
    std::map<std::string, TrendBucket> buckets;
    TrendBucket total;
    std::vector<double> best_vrates, target_vrates;
    std::vector<double> crossings;
    int mid_sites = 0, end_sites = 0;

    for (const auto& r : results) {
        const auto& m = r.at("metrics");
        TrendBucket& b = buckets[r.at("trend").get<std::string>()];
        for (TrendBucket* t : {&b, &total}) {
            ++t->runs;
            if (m.at("t_ta").get<int>() > 0) ++t->has_ta;
            if (m.at("t_ra").get<int>() > 0) ++t->has_ra;
            if (m.at("t_vr").get<int>() > 0) ++t->has_vr;
            const std::string c = r.at("containment").get<std::string>();
            if (c == "fully") ++t->fully;
            if (c == "fully" || c == "partly") ++t->partly;
            if (m.at("t_ra").get<int>() > 0) {
                t->ra_lengths.push_back(m.at("l_ra").get<double>());
                t->max_devs.push_back(m.at("max_abs_deviation_ft").get<double>());
                t->signed_devs.push_back(
                    m.at("greatest_signed_deviation_ft").get<double>());
            }
        }
        if (m.at("t_ra").get<int>() > 0) {
            best_vrates.push_back(r.at("best").at("vrate_fps").get<double>());
            target_vrates.push_back(r.at("target_mean_vrate_fps").get<double>());
            crossings.push_back(r.at("best").at("crossing").get<double>());
            if (r.at("best").at("site").get<std::string>() == "mid")
                ++mid_sites;
            else
                ++end_sites;
        }
    }

    nlohmann::json agg;
    agg["total"] = bucket_json(total);
    for (const auto& [trend, b] : buckets) agg["by_trend"][trend] = bucket_json(b);
    agg["strategy"] = {
        {"vrate_median_fps", stats::median(best_vrates)},
        {"vrate_stddev_fps", stats::stddev(best_vrates)},
        {"crossing_median", stats::median(crossings)},
        {"site_mid", mid_sites},
        {"site_end", end_sites},
        {"spearman_vrate", best_vrates.size() >= 2
                               ? stats::spearman(best_vrates, target_vrates)
                               : 0.0}};

    std::ofstream jf(out_dir + "/aggregate.json");
    jf << agg.dump(2) << "\n";

    std::ofstream cf(out_dir + "/aggregate.csv");
    cf << "group,runs,has_ta,has_ta_pct,has_ra,has_ra_pct,has_vrate,"
          "has_vrate_pct,partly_contained,partly_contained_pct,"
          "fully_contained,fully_contained_pct\n";
    const auto row = [&](const std::string& name, const TrendBucket& b) {
        const auto pct = [&](int c) {
            return b.runs == 0 ? 0.0 : 100.0 * c / b.runs;
        };
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "%s,%d,%d,%.1f,%d,%.1f,%d,%.1f,%d,%.1f,%d,%.1f\n",
                      name.c_str(), b.runs, b.has_ta, pct(b.has_ta), b.has_ra,
                      pct(b.has_ra), b.has_vr, pct(b.has_vr), b.partly,
                      pct(b.partly), b.fully, pct(b.fully));
        cf << buf;
    };
    for (const auto& [trend, b] : buckets) row(trend, b);
    row("total", total);
    return 0;
}

}  // namespace

uint64_t derive_seed(uint64_t base_seed, const std::string& id) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h ^ base_seed;
}

std::vector<std::string> list_files(const std::string& dir,
                                    const std::string& extension) {
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == extension)
            out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cmd_clean(const std::vector<std::string>& input_csvs,
              const config::ExperimentConfig& cfg, const std::string& out_dir) {
    fs::create_directories(out_dir);
    std::ofstream manifest(out_dir + "/manifest.jsonl");
    if (!manifest) {
        std::cerr << "cannot write manifest in " << out_dir << "\n";
        return 1;
    }

    int failures = 0;
    for (const auto& path : input_csvs) {
        std::vector<trajectory::RawStateVector> records;
        try {
            records = trajectory::read_state_vectors_csv(
                path, cfg.altitudes_in_meters);
        } catch (const std::exception& e) {
            std::cerr << "skipping " << path << ": " << e.what() << "\n";
            ++failures;
            continue;
        }

        auto split = trajectory::split_flights(records,
                                               cfg.pipeline.gap_split_s);
        std::map<std::string, int> flight_index;
        for (const auto& raw : split.trajectories) {
            const std::string id =
                raw.icao24 + "_" + std::to_string(flight_index[raw.icao24]++);
            auto outcome = trajectory::clean(raw, cfg.pipeline);
            nlohmann::json line;
            line["icao24"] = raw.icao24;
            line["id"] = id;
            if (outcome.traj) {
                const auto& t = *outcome.traj;
                trajectory::write_trajectory_csv(out_dir + "/" + id + ".csv", t);
                line["length"] = t.steps.size();
                line["trend"] = trajectory::to_string(t.trend);
                line["containment"] = trajectory::to_string(t.containment);
                line["rejection"] = nullptr;
            } else {
                line["length"] = raw.records.size();
                line["rejection"] = {{"stage", outcome.rejection->stage},
                                     {"reason", outcome.rejection->reason}};
            }
            manifest << line.dump() << "\n";
        }
        manifest << nlohmann::json{{"input", fs::path(path).filename().string()},
                                   {"flights", split.trajectories.size()},
                                   {"duplicates_removed",
                                    split.duplicates_removed}}
                        .dump()
                 << "\n";
    }
    return failures == static_cast<int>(input_csvs.size()) &&
                   !input_csvs.empty()
               ? 1
               : 0;
}

int cmd_optimize(const std::vector<std::string>& traj_files,
                 const config::ExperimentConfig& cfg,
                 const std::string& out_dir) {
    fs::create_directories(out_dir);
    std::vector<std::string> files = traj_files;
    std::sort(files.begin(), files.end());

    std::vector<nlohmann::json> results(files.size());
    std::vector<std::string> errors(files.size());

    parallel_for(files.size(), cfg.workers, [&](size_t i) {
        try {
            auto traj = trajectory::read_trajectory_csv(files[i]);
            trajectory::classify(traj, cfg.pipeline.trend_deadband_ft);
            optimizer::OptimizerConfig oc = cfg.opt;
            oc.rng_seed = derive_seed(cfg.seed, traj.icao24);
            auto res = optimizer::optimize(traj, oc, cfg.response,
                                           cfg.sensitivity);
            auto best_run = engine::run(traj, res.best, cfg.response,
                                        cfg.sensitivity);
            results[i] = result_to_json(traj.icao24, traj, res, best_run);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });

    std::vector<nlohmann::json> ok;
    int failed = 0;
    for (size_t i = 0; i < files.size(); ++i) {
        if (!errors[i].empty()) {
            std::cerr << "failed " << files[i] << ": " << errors[i] << "\n";
            ++failed;
            continue;
        }
        std::ofstream rf(out_dir + "/" +
                         results[i].at("id").get<std::string>() +
                         ".result.json");
        rf << results[i].dump(2) << "\n";
        ok.push_back(results[i]);
    }
    if (failed > 0)
        std::cerr << failed << " trajectories excluded from aggregates\n";
    return write_aggregate(ok, out_dir);
}

int cmd_heatmap(const std::vector<std::string>& traj_files,
                const config::ExperimentConfig& cfg,
                const std::string& out_csv) {
    std::vector<std::string> files = traj_files;
    std::sort(files.begin(), files.end());
    std::vector<trajectory::Trajectory> trajs;
    trajs.reserve(files.size());
    for (const auto& f : files) {
        trajs.push_back(trajectory::read_trajectory_csv(f));
        trajectory::classify(trajs.back(), cfg.pipeline.trend_deadband_ft);
    }

    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    if (cfg.heatmap.min_x_ft && cfg.heatmap.min_y_ft && cfg.heatmap.max_x_ft &&
        cfg.heatmap.max_y_ft) {
        min_x = *cfg.heatmap.min_x_ft;
        min_y = *cfg.heatmap.min_y_ft;
        max_x = *cfg.heatmap.max_x_ft;
        max_y = *cfg.heatmap.max_y_ft;
    } else if (!trajs.empty()) {
        min_x = min_y = 1e18;
        max_x = max_y = -1e18;
        for (const auto& t : trajs) {
            for (const auto& s : t.steps) {
                min_x = std::min(min_x, s.x_ft);
                max_x = std::max(max_x, s.x_ft);
                min_y = std::min(min_y, s.y_ft);
                max_y = std::max(max_y, s.y_ft);
            }
        }
    }

    const int nx = cfg.heatmap.nx;
    const int ny = cfg.heatmap.ny;
    struct Cell {
        double x, y;
        double mean_cost = 0.0;
        size_t n = 0;
    };
    std::vector<Cell> cells;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            Cell c;
            c.x = nx == 1 ? (min_x + max_x) / 2
                          : min_x + (max_x - min_x) * ix / (nx - 1);
            c.y = ny == 1 ? (min_y + max_y) / 2
                          : min_y + (max_y - min_y) * iy / (ny - 1);
            cells.push_back(c);
        }
    }

    // One task per (cell, trajectory); attacker pinned to the grid point,
    // optimization restricted to crossing point and vertical rate.
    std::vector<double> costs(cells.size() * trajs.size(), 0.0);
    parallel_for(costs.size(), cfg.workers, [&](size_t task) {
        const size_t ci = task / std::max<size_t>(trajs.size(), 1);
        const size_t ti = task % std::max<size_t>(trajs.size(), 1);
        optimizer::OptimizerConfig oc = cfg.opt;
        oc.optimize_site = false;
        oc.site_override = attacker::AttackerSite{cells[ci].x, cells[ci].y};
        oc.rng_seed = derive_seed(cfg.seed, trajs[ti].icao24 + "@" +
                                                std::to_string(ci));
        auto res = optimizer::optimize(trajs[ti], oc, cfg.response,
                                       cfg.sensitivity);
        costs[task] = res.best_cost;
    });

    for (size_t ci = 0; ci < cells.size(); ++ci) {
        double sum = 0.0;
        for (size_t ti = 0; ti < trajs.size(); ++ti)
            sum += costs[ci * trajs.size() + ti];
        cells[ci].n = trajs.size();
        if (!trajs.empty()) cells[ci].mean_cost = sum / trajs.size();
    }

    std::ofstream out(out_csv);
    if (!out) {
        std::cerr << "cannot write " << out_csv << "\n";
        return 1;
    }
    out << "x_ft,y_ft,mean_cost,n\n";
    char buf[160];
    for (const auto& c : cells) {
        if (c.n == 0) {
            std::snprintf(buf, sizeof(buf), "%.1f,%.1f,,0\n", c.x, c.y);
        } else {
            std::snprintf(buf, sizeof(buf), "%.1f,%.1f,%.3f,%zu\n", c.x, c.y,
                          c.mean_cost, c.n);
        }
        out << buf;
    }
    return 0;
}

int cmd_report(const std::vector<std::string>& result_files,
               const config::ExperimentConfig& cfg,
               const std::string& out_dir) {
    (void)cfg;
    fs::create_directories(out_dir);
    std::vector<std::string> files = result_files;
    std::sort(files.begin(), files.end());

    std::vector<nlohmann::json> results;
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) {
            std::cerr << "cannot open " << f << "\n";
            return 1;
        }
        nlohmann::json j;
        in >> j;
        results.push_back(std::move(j));
    }

    write_aggregate(results, out_dir);

    // Distribution dumps for external plotting.
    std::ofstream rl(out_dir + "/ra_lengths.csv");
    rl << "id,trend,l_ra,t_ra,run_length\n";
    std::ofstream dv(out_dir + "/deviations.csv");
    dv << "id,trend,max_abs_deviation_ft,greatest_signed_deviation_ft\n";
    for (const auto& r : results) {
        const auto& m = r.at("metrics");
        if (m.at("t_ra").get<int>() == 0) continue;
        rl << r.at("id").get<std::string>() << ","
           << r.at("trend").get<std::string>() << "," << m.at("l_ra") << ","
           << m.at("t_ra") << "," << r.at("length") << "\n";
        dv << r.at("id").get<std::string>() << ","
           << r.at("trend").get<std::string>() << ","
           << m.at("max_abs_deviation_ft") << ","
           << m.at("greatest_signed_deviation_ft") << "\n";
    }
    return 0;
}

}  // namespace casim::batch
