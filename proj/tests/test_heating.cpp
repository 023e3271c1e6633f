#include <catch_amalgamated.hpp>

#include <cmath>

#include "chipnoise/error.hpp"
#include "chipnoise/heating.hpp"

using namespace chipnoise;
using Catch::Matchers::WithinRel;

TEST_CASE("fast rise by hand", "[heating]") {
  HeatingConfig cfg;
  // h ρ j² / k in SI: 1.4e-6 m · 2.21e-8 Ω m · (1e11 A/m²)² / 2.2e7 W/(m² K)
  CHECK_THAT(fast_rise(cfg), WithinRel(1.4e-6 * 2.21e-8 * 1e22 / 2.2e7, 1e-12));
}

TEST_CASE("slow rise by hand", "[heating]") {
  HeatingConfig cfg;
  const double pi = std::acos(-1.0);
  const double expected = 1.4e-6 * 5e-6 * 2.21e-8 * 1e22 / (2.0 * pi * 150.0) *
                          std::log(4.0 * pi * pi * 150.0 * 30.0 / (1.6e6 * 25e-12));
  const auto s = slow_rise(cfg);
  CHECK_FALSE(s.pre_diffusive);
  CHECK_THAT(s.delta_t, WithinRel(expected, 1e-12));
}

TEST_CASE("defaults give the calibrated rise", "[heating]") {
  HeatingConfig cfg;
  CHECK(total_rise(cfg) > 40.0);
  CHECK(total_rise(cfg) < 60.0);
  cfg.current_density = 1e6;
  CHECK(total_rise(cfg) > 0.4);
  CHECK(total_rise(cfg) < 0.6);
}

TEST_CASE("rise is quadratic in j and independent of T0", "[heating]") {
  HeatingConfig a;
  HeatingConfig b = a;
  b.current_density = 3.0 * a.current_density;
  CHECK_THAT(total_rise(b), WithinRel(9.0 * total_rise(a), 1e-13));
  CHECK_THAT(fast_rise(b), WithinRel(9.0 * fast_rise(a), 1e-13));
  b = a;
  b.base_temperature = 4.2;
  CHECK(total_rise(b) == total_rise(a));
}

TEST_CASE("early times are pre-diffusive", "[heating]") {
  HeatingConfig cfg;
  cfg.duration = 1e-9;
  const auto s = slow_rise(cfg);
  CHECK(s.pre_diffusive);
  CHECK(s.delta_t == 0.0);
  CHECK(total_rise(cfg) == fast_rise(cfg));
}

TEST_CASE("contact conductance calibration", "[heating]") {
  HeatingConfig cfg;
  const double k = calibrate_contact_conductance(cfg, 50.0);
  cfg.contact_conductance = k;
  CHECK_THAT(total_rise(cfg), WithinRel(50.0, 1e-10));
  CHECK_THROWS_AS(calibrate_contact_conductance(cfg, 1.0), DomainError);
}

TEST_CASE("self-consistent refinement", "[heating]") {
  HeatingConfig cfg;
  const double constant = total_rise_self_consistent(cfg, [](double) { return 2.21; });
  CHECK_THAT(constant, WithinRel(total_rise(cfg), 1e-14));
  const double rising = total_rise_self_consistent(cfg, [](double t) { return 2.21 * t / 300.0; });
  CHECK(rising > total_rise(cfg));
}

TEST_CASE("invalid configurations", "[heating]") {
  HeatingConfig cfg;
  cfg.width = 0.0;
  CHECK_THROWS_AS(total_rise(cfg), DomainError);
  cfg = {};
  cfg.contact_conductance = -1.0;
  CHECK_THROWS_AS(fast_rise(cfg), DomainError);
  cfg = {};
  cfg.duration = -1.0;
  CHECK_THROWS_AS(slow_rise(cfg), DomainError);
}
