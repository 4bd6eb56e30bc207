#include "casim/config.hpp"

#include <fstream>
#include <stdexcept>

namespace casim::config {

namespace {

template <typename T>
void maybe(const nlohmann::json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

ExperimentConfig from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;

    if (j.contains("airport")) {
        const auto& a = j.at("airport");
        maybe(a, "lat", cfg.pipeline.center_lat);
        maybe(a, "lon", cfg.pipeline.center_lon);
    }
    maybe(j, "altitudes_in_meters", cfg.altitudes_in_meters);
    maybe(j, "workers", cfg.workers);
    maybe(j, "seed", cfg.seed);
    if (cfg.workers < 1) throw std::runtime_error("config: workers must be >= 1");

    if (j.contains("pipeline")) {
        const auto& p = j.at("pipeline");
        maybe(p, "gap_split_s", cfg.pipeline.gap_split_s);
        maybe(p, "max_missing_frac", cfg.pipeline.max_missing_frac);
        maybe(p, "min_alt_ft", cfg.pipeline.min_alt_ft);
        maybe(p, "max_alt_ft", cfg.pipeline.max_alt_ft);
        maybe(p, "max_climb_fpm", cfg.pipeline.max_climb_fpm);
        maybe(p, "max_descent_fpm", cfg.pipeline.max_descent_fpm);
        maybe(p, "trend_deadband_ft", cfg.pipeline.trend_deadband_ft);
    }

    if (j.contains("optimizer")) {
        const auto& o = j.at("optimizer");
        maybe(o, "max_iterations", cfg.opt.max_iterations);
        maybe(o, "restarts", cfg.opt.restarts);
        maybe(o, "probe_crossing", cfg.opt.probe_crossing);
        maybe(o, "probe_vrate_fps", cfg.opt.probe_vrate_fps);
        maybe(o, "initial_crossing_step", cfg.opt.initial_crossing_step);
        maybe(o, "initial_vrate_step_fps", cfg.opt.initial_vrate_step_fps);
        maybe(o, "decay", cfg.opt.decay);
        maybe(o, "plateau_patience", cfg.opt.plateau_patience);
        if (cfg.opt.decay <= 0.0 || cfg.opt.decay >= 1.0)
            throw std::runtime_error("config: optimizer.decay must be in (0,1)");
    }

    if (j.contains("response")) {
        const auto& r = j.at("response");
        maybe(r, "ra_follow_vrate_fps", cfg.response.ra_follow_vrate_fps);
        maybe(r, "response_delay_steps", cfg.response.response_delay_steps);
        if (r.contains("return_behavior")) {
            const std::string b = r.at("return_behavior").get<std::string>();
            if (b == "hold_new_level")
                cfg.response.return_behavior = engine::ReturnBehavior::HoldNewLevel;
            else if (b == "resume_original_rate")
                cfg.response.return_behavior =
                    engine::ReturnBehavior::ResumeOriginalRate;
            else if (b == "auto")
                cfg.response.return_behavior = engine::ReturnBehavior::Auto;
            else
                throw std::runtime_error("config: unknown return_behavior " + b);
        }
        if (cfg.response.ra_follow_vrate_fps <= 0.0)
            throw std::runtime_error("config: ra_follow_vrate_fps must be > 0");
    }

    if (j.contains("sensitivity")) {
        const auto& s = j.at("sensitivity");
        maybe(s, "ra_vertical_thresh_ft", cfg.sensitivity.ra_vertical_thresh_ft);
        maybe(s, "ta_vertical_thresh_ft", cfg.sensitivity.ta_vertical_thresh_ft);
        maybe(s, "proximate_range_nm", cfg.sensitivity.proximate_range_nm);
        maybe(s, "proximate_alt_ft", cfg.sensitivity.proximate_alt_ft);
        maybe(s, "ra_rate_fps", cfg.sensitivity.ra_rate_fps);
        maybe(s, "ra_min_hold_steps", cfg.sensitivity.ra_min_hold_steps);
        maybe(s, "ra_clear_steps", cfg.sensitivity.ra_clear_steps);
        if (s.contains("levels")) {
            cfg.sensitivity.levels.clear();
            for (const auto& lj : s.at("levels")) {
                cas::SensitivityLevel sl;
                sl.level = lj.at("level").get<int>();
                sl.floor_ft = lj.at("floor_ft").get<double>();
                sl.ceiling_ft = lj.at("ceiling_ft").get<double>();
                sl.ta_tau_s = lj.at("ta_tau_s").get<double>();
                if (lj.contains("ra_tau_s") && !lj.at("ra_tau_s").is_null()) {
                    sl.ra_tau_s = lj.at("ra_tau_s").get<double>();
                    sl.ra_enabled = true;
                } else {
                    sl.ra_enabled = false;
                }
                cfg.sensitivity.levels.push_back(sl);
            }
            if (cfg.sensitivity.levels.empty())
                throw std::runtime_error("config: empty sensitivity table");
        }
    }

    if (j.contains("heatmap")) {
        const auto& h = j.at("heatmap");
        maybe(h, "nx", cfg.heatmap.nx);
        maybe(h, "ny", cfg.heatmap.ny);
        const auto opt_d = [&](const char* key, std::optional<double>& out) {
            if (h.contains(key)) out = h.at(key).get<double>();
        };
        opt_d("min_x_ft", cfg.heatmap.min_x_ft);
        opt_d("min_y_ft", cfg.heatmap.min_y_ft);
        opt_d("max_x_ft", cfg.heatmap.max_x_ft);
        opt_d("max_y_ft", cfg.heatmap.max_y_ft);
        if (cfg.heatmap.nx < 1 || cfg.heatmap.ny < 1)
            throw std::runtime_error("config: heatmap grid must be >= 1x1");
    }
    return cfg;
}

ExperimentConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

}  // namespace casim::config
