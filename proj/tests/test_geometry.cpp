#include <cmath>
#include <random>

#include "doctest.h"

#include "casim/geometry.hpp"
#include "casim/units.hpp"

using namespace casim;
using namespace casim::geometry;

TEST_CASE("range tau hand-evaluated values") {
    CHECK(range_tau({3.0, -300.0}) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(range_tau({5.0, -300.0}) == doctest::Approx(38.4).epsilon(1e-9));
    // opening geometry clamps the denominator to -6 kt
    CHECK(range_tau({10.0, 50.0}) == doctest::Approx(5460.0).epsilon(1e-9));
    CHECK_THROWS_AS(range_tau({0.0, -100.0}), std::domain_error);
}

TEST_CASE("range tau decreases with closure speed outside SMOD") {
    double prev = range_tau({5.0, -50.0});
    for (double rdot = -100.0; rdot >= -600.0; rdot -= 50.0) {
        const double tau = range_tau({5.0, rdot});
        CHECK(tau < prev);
        prev = tau;
    }
}

TEST_CASE("range tau non-positive inside SMOD") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ur(0.01, 2.99);
    std::uniform_real_distribution<double> uv(-600.0, -6.0);
    for (int i = 0; i < 200; ++i) {
        CHECK(range_tau({ur(rng), uv(rng)}) <= 0.0);
    }
}

TEST_CASE("vertical tau criterion") {
    CHECK(vertical_tau_met({4560.0, 5.0}));   // worst-case boundary
    CHECK_FALSE(vertical_tau_met({4561.0, 5.0}));
    CHECK(vertical_tau_met({0.0, 0.0}));
}

TEST_CASE("horizontal tau criterion") {
    CHECK(horizontal_tau_met({3.1, 10.0}));   // worst-case boundary
    CHECK_FALSE(horizontal_tau_met({3.2, 10.0}));
    CHECK(horizontal_tau_met({0.0, -100.0}));
}

TEST_CASE("opening geometry reduces to the static bounds") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> us(0.0, 9000.0);
    std::uniform_real_distribution<double> ur(0.0, 6.0);
    std::uniform_real_distribution<double> uo_v(-1.0, 50.0);
    std::uniform_real_distribution<double> uo_h(-6.0, 50.0);
    for (int i = 0; i < 500; ++i) {
        const double s = us(rng);
        CHECK(vertical_tau_met({s, uo_v(rng)}) == (s <= 4560.0));
        const double r = ur(rng);
        CHECK(horizontal_tau_met({r, uo_h(rng)}) == (r <= 3.1));
    }
}

TEST_CASE("active surveillance gates") {
    CHECK(active_surveillance({0.0, 0.0}, {2.0, -100.0}, true));
    CHECK_FALSE(active_surveillance({12000.0, 0.0}, {2.0, -100.0}, true));
    CHECK_FALSE(active_surveillance({100.0, 0.0}, {2.0, -100.0}, false));
}

TEST_CASE("slant range and round-trip time conversion") {
    CHECK(slant_from_rtt(0.0) == 0.0);
    CHECK(rtt_from_slant(nm_to_ft(1.0)) ==
          doctest::Approx(2.0 * 1852.0 / 299792458.0).epsilon(1e-9));
    CHECK_THROWS_AS(slant_from_rtt(-1.0), std::domain_error);
    CHECK_THROWS_AS(rtt_from_slant(-1.0), std::domain_error);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double r = u(rng);
        CHECK(slant_from_rtt(rtt_from_slant(r)) ==
              doctest::Approx(r).epsilon(1e-6));
    }
    // linear in rtt
    const double x = 12.3e-6;
    CHECK(slant_from_rtt(2.0 * x) ==
          doctest::Approx(2.0 * slant_from_rtt(x)).epsilon(1e-12));
}

TEST_CASE("slant decomposition") {
    CHECK(decompose_slant(18836.0, 2350.0) ==
          doctest::Approx(18688.7).epsilon(1e-4));
    CHECK(ft_to_nm(decompose_slant(18836.0, 2350.0)) ==
          doctest::Approx(3.08).epsilon(0.002));
    // near the right-angle case h is close to s
    const double h = decompose_slant(18836.0, 13306.0);
    CHECK(std::fabs(h - 13306.0) < 50.0);
    CHECK(decompose_slant(1234.0, 0.0) == 1234.0);
    CHECK_THROWS_AS(decompose_slant(100.0, 200.0), std::domain_error);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 40000.0);
    for (int i = 0; i < 500; ++i) {
        double r = u(rng), s = u(rng);
        if (s > r) std::swap(r, s);
        const double hh = decompose_slant(r, s);
        CHECK(std::sqrt(hh * hh + s * s) == doctest::Approx(r).epsilon(1e-9));
    }
}

TEST_CASE("vulnerable altitude band") {
    CHECK(in_vulnerable_band(8000.0));
    CHECK(in_vulnerable_band(2350.0));
    CHECK(in_vulnerable_band(13306.0));
    CHECK_FALSE(in_vulnerable_band(2349.9));
    CHECK_FALSE(in_vulnerable_band(30000.0));
}
