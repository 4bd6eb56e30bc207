#include "doctest.h"
#include "json.hpp"

#include "casim/config.hpp"

using namespace casim;
using nlohmann::json;

TEST_CASE("config defaults") {
    const auto cfg = config::from_json(json::object());
    CHECK(cfg.altitudes_in_meters);
    CHECK(cfg.workers == 1);
    CHECK(cfg.pipeline.gap_split_s == 60.0);
    CHECK(cfg.pipeline.min_alt_ft == 3750.0);
    CHECK(cfg.opt.restarts == 5);
    CHECK(cfg.response.ra_follow_vrate_fps == 25.0);
    CHECK(cfg.sensitivity.levels.size() == 6);
    CHECK(cfg.heatmap.nx == 6);
    CHECK_FALSE(cfg.heatmap.min_x_ft.has_value());
}

TEST_CASE("config overrides") {
    const auto cfg = config::from_json(json{
        {"airport", {{"lat", 48.35}, {"lon", 11.78}}},
        {"altitudes_in_meters", false},
        {"workers", 8},
        {"seed", 99},
        {"pipeline", {{"gap_split_s", 30.0}, {"max_alt_ft", 25000.0}}},
        {"optimizer", {{"restarts", 2}, {"decay", 0.9}}},
        {"response",
         {{"return_behavior", "resume_original_rate"},
          {"response_delay_steps", 5}}},
        {"heatmap", {{"nx", 4}, {"ny", 3}, {"min_x_ft", -1000.0}}},
    });
    CHECK(cfg.pipeline.center_lat == 48.35);
    CHECK_FALSE(cfg.altitudes_in_meters);
    CHECK(cfg.workers == 8);
    CHECK(cfg.seed == 99);
    CHECK(cfg.pipeline.gap_split_s == 30.0);
    CHECK(cfg.pipeline.max_alt_ft == 25000.0);
    CHECK(cfg.opt.restarts == 2);
    CHECK(cfg.opt.decay == 0.9);
    CHECK(cfg.response.return_behavior ==
          engine::ReturnBehavior::ResumeOriginalRate);
    CHECK(cfg.response.response_delay_steps == 5);
    CHECK(cfg.heatmap.nx == 4);
    CHECK(*cfg.heatmap.min_x_ft == -1000.0);
    CHECK_FALSE(cfg.heatmap.max_x_ft.has_value());
}

TEST_CASE("custom sensitivity levels with a TA-only band") {
    const auto cfg = config::from_json(json{
        {"sensitivity",
         {{"levels",
           json::array({{{"level", 2},
                         {"floor_ft", 0.0},
                         {"ceiling_ft", 2350.0},
                         {"ta_tau_s", 20.0},
                         {"ra_tau_s", nullptr}},
                        {{"level", 3},
                         {"floor_ft", 2350.0},
                         {"ceiling_ft", 1e9},
                         {"ta_tau_s", 25.0},
                         {"ra_tau_s", 15.0}}})}}},
    });
    REQUIRE(cfg.sensitivity.levels.size() == 2);
    CHECK_FALSE(cfg.sensitivity.levels[0].ra_enabled);
    CHECK(cfg.sensitivity.levels[1].ra_enabled);
    CHECK(cfg.sensitivity.levels[1].ra_tau_s == 15.0);
}

TEST_CASE("config validation") {
    CHECK_THROWS(config::from_json(json{{"workers", 0}}));
    CHECK_THROWS(config::from_json(json{{"optimizer", {{"decay", 1.5}}}}));
    CHECK_THROWS(config::from_json(
        json{{"response", {{"return_behavior", "bounce"}}}}));
    CHECK_THROWS(config::from_json(
        json{{"response", {{"ra_follow_vrate_fps", 0.0}}}}));
    CHECK_THROWS(config::from_json(json{{"heatmap", {{"nx", 0}}}}));
    CHECK_THROWS(config::from_json(
        json{{"sensitivity", {{"levels", json::array()}}}}));
    CHECK_THROWS(config::load("/nonexistent/config.json"));
}
