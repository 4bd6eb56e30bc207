#include <cmath>

#include "doctest.h"

#include "casim/engine.hpp"
#include "synthetic.hpp"

using namespace casim;
using namespace casim::engine;

namespace {

RunResult run_default(const trajectory::Trajectory& traj,
                      const attacker::AttackStrategy& s) {
    return run(traj, s, ResponseModel{}, cas::SensitivityTable::defaults());
}

}  // namespace

TEST_CASE("cost function hand values") {
    CHECK(cost({}) == 0.0);
    RunMetrics m;
    m.t_pa = 10;
    m.t_ta = 5;
    m.t_ra = 6;
    m.l_ra = 6;
    m.t_vr = 4;  // 10 + 10 + 30 + 30 + 40
    CHECK(cost(m) == 120.0);
    m = {};
    m.t_pa = 20;
    m.t_ta = 25;  // 20 + 50
    CHECK(cost(m) == 70.0);
    m = {};
    m.t_pa = 30;
    m.t_ta = 35;  // 30 + 70
    CHECK(cost(m) == 100.0);
}

TEST_CASE("metric ordering invariants") {
    auto traj = testing::head_on_descent("aaa000");
    attacker::AttackStrategy s{0.5, -10.0,
                               attacker::SitePosition::MidTrajectory};
    const auto res = run_default(traj, s);
    const auto& m = res.metrics;
    CHECK(m.t_vr <= m.t_ra);
    CHECK(m.l_ra <= m.t_ra);
    CHECK((m.ra_episodes == 0) == (m.t_ra == 0));
    CHECK(m.l_ra * m.ra_episodes >= m.t_ra);
    CHECK(m.t_ra + m.t_ta <=
          static_cast<int>(traj.steps.size()));
    CHECK(res.cost == cost(m));
    CHECK(std::fabs(m.greatest_signed_deviation_ft) ==
          doctest::Approx(m.max_abs_deviation_ft));
}

TEST_CASE("an attack inside the band produces alerts") {
    auto traj = testing::head_on_descent("aaa001");
    attacker::AttackStrategy s{0.5, -10.0,
                               attacker::SitePosition::MidTrajectory};
    const auto res = run_default(traj, s);
    CHECK(res.metrics.t_pa > 0);
    CHECK(res.metrics.t_ta + res.metrics.t_ra > 0);
    CHECK(res.cost > 0.0);
}

TEST_CASE("no attack surface above the reachable envelope") {
    // every point of the flight keeps the site-to-ownship slant above the
    // worst-case response bound
    auto traj = testing::shifted(testing::level_overflight("aaa002"), 14000.0);
    attacker::AttackStrategy s{0.5, 0.0,
                               attacker::SitePosition::MidTrajectory};
    const auto res = run_default(traj, s);
    CHECK(res.cost == 0.0);
    CHECK(res.metrics.t_pa == 0);
    CHECK(res.metrics.max_abs_deviation_ft == 0.0);
}

TEST_CASE("deviation accounting matches the advisory record") {
    auto traj = testing::level_overflight("aaa003");
    attacker::AttackStrategy s{0.5, -15.0,
                               attacker::SitePosition::MidTrajectory};
    ResponseModel rm;
    rm.return_behavior = ReturnBehavior::ResumeOriginalRate;
    const auto res =
        run(traj, s, rm, cas::SensitivityTable::defaults());
    // closed form: with ResumeOriginalRate and a level target the altitude
    // offset accumulated at step i equals the sum of RA rates so far minus
    // the planned (zero) rates
    double accum = 0.0;
    for (size_t i = 0; i + 1 < traj.steps.size(); ++i) {
        CHECK(res.attacked.actual_alt_ft[i] ==
              doctest::Approx(traj.steps[i].alt_ft + accum));
        const auto& adv = res.attacked.advisories[i];
        const double planned =
            traj.steps[i + 1].alt_ft - traj.steps[i].alt_ft;
        accum += adv.kind == cas::AdvisoryKind::RA ? adv.target_vrate_fps
                                                   : planned;
        accum -= planned;
    }
}

TEST_CASE("hold-new-level return behavior freezes the altitude") {
    auto traj = testing::level_overflight("aaa004");
    attacker::AttackStrategy s{0.5, -15.0,
                               attacker::SitePosition::MidTrajectory};
    ResponseModel rm;
    rm.return_behavior = ReturnBehavior::HoldNewLevel;
    const auto res = run(traj, s, rm, cas::SensitivityTable::defaults());
    if (res.metrics.t_ra > 0) {
        // after the last RA step the altitude never changes again
        size_t last_ra = 0;
        for (size_t i = 0; i < res.attacked.advisories.size(); ++i)
            if (res.attacked.advisories[i].kind == cas::AdvisoryKind::RA)
                last_ra = i;
        for (size_t i = last_ra + 2; i < res.attacked.actual_alt_ft.size(); ++i)
            CHECK(res.attacked.actual_alt_ft[i] ==
                  doctest::Approx(res.attacked.actual_alt_ft[last_ra + 1]));
    }
}

TEST_CASE("response delay postpones the maneuver") {
    auto traj = testing::level_overflight("aaa005");
    attacker::AttackStrategy s{0.5, -15.0,
                               attacker::SitePosition::MidTrajectory};
    ResponseModel immediate;
    ResponseModel delayed;
    delayed.response_delay_steps = 5;
    const auto table = cas::SensitivityTable::defaults();
    const auto a = run(traj, s, immediate, table);
    const auto b = run(traj, s, delayed, table);
    if (a.metrics.t_ra > 0)
        CHECK(b.metrics.max_abs_deviation_ft <=
              a.metrics.max_abs_deviation_ft + 1e-9);
}

TEST_CASE("run is deterministic") {
    auto traj = testing::climb_out("aaa006");
    attacker::AttackStrategy s{0.35, 20.0,
                               attacker::SitePosition::EndTrajectory};
    const auto a = run_default(traj, s);
    const auto b = run_default(traj, s);
    CHECK(a.cost == b.cost);
    CHECK(a.metrics.t_ra == b.metrics.t_ra);
    CHECK(a.metrics.max_abs_deviation_ft == b.metrics.max_abs_deviation_ft);
    REQUIRE(a.attacked.actual_alt_ft.size() == b.attacked.actual_alt_ft.size());
    for (size_t i = 0; i < a.attacked.actual_alt_ft.size(); ++i)
        CHECK(a.attacked.actual_alt_ft[i] == b.attacked.actual_alt_ft[i]);
}

TEST_CASE("site override pins the attacker position") {
    auto traj = testing::level_overflight("aaa007");
    attacker::AttackStrategy s{0.5, 0.0,
                               attacker::SitePosition::MidTrajectory};
    // a pinned site far from the route is out of range for the whole run
    attacker::AttackerSite far{500000.0, 500000.0,
                               attacker::SitePosition::MidTrajectory};
    const auto res = run(traj, s, ResponseModel{},
                         cas::SensitivityTable::defaults(), far);
    CHECK(res.cost == 0.0);
}

TEST_CASE("json serialization of metrics and timeline") {
    auto traj = testing::head_on_descent("aaa008");
    attacker::AttackStrategy s{0.5, -10.0,
                               attacker::SitePosition::MidTrajectory};
    const auto res = run_default(traj, s);
    const auto j = metrics_to_json(res.metrics);
    CHECK(j["t_ra"].get<int>() == res.metrics.t_ra);
    CHECK(j["max_abs_deviation_ft"].get<double>() ==
          res.metrics.max_abs_deviation_ft);

    const auto timeline = advisory_timeline_json(res.attacked);
    size_t total = 0;
    int ta_steps = 0;
    for (const auto& seg : timeline) {
        total += seg["length"].get<size_t>();
        if (seg["kind"] == "TA") ta_steps += seg["length"].get<int>();
    }
    CHECK(total == traj.steps.size());
    CHECK(ta_steps == res.metrics.t_ta);
}

TEST_CASE("empty trajectory yields an empty result") {
    trajectory::Trajectory empty;
    attacker::AttackStrategy s;
    const auto res = run_default(empty, s);
    CHECK(res.cost == 0.0);
    CHECK(res.attacked.actual_alt_ft.empty());
}
