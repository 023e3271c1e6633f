#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "chipnoise/error.hpp"
#include "chipnoise/noise.hpp"

using namespace chipnoise;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// μ0² k_B T μ_B² / (4π² ρ ħ²) with Y = 1/µm, all in SI, for T = 300 K and
// ρ = 2.21 µΩ·cm.
double gold_rate_by_hand() {
  const double pi = std::acos(-1.0);
  const double mu0 = 4e-7 * pi * 1.00000000055;
  const double kb = 1.380649e-23;
  const double mub = 9.2740100783e-24;
  const double hbar = 6.62607015e-34 / (2.0 * pi);
  return mu0 * mu0 * kb * 300.0 * mub * mub / (4.0 * pi * pi * 2.21e-8 * hbar * hbar) * 1e6;
}

YTensor diag(double a, double b, double c, double off = 0.0) {
  YTensor::Matrix m{};
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  m[0][2] = m[2][0] = off;
  return YTensor(m);
}

}  // namespace

TEST_CASE("gold standard rate", "[noise]") {
  CHECK_THAT(gold_standard_rate(), WithinRel(gold_rate_by_hand(), 1e-8));
  CHECK(gold_standard_rate() > 55.0);
  CHECK(gold_standard_rate() < 60.0);
}

TEST_CASE("spectral density scales as T/rho", "[noise]") {
  const YTensor y = diag(0.3, 0.2, 0.1, 0.05);
  const auto s1 = spectral_density(300.0, 2.21, y);
  const auto s2 = spectral_density(150.0, 4.42, y);
  CHECK_THAT(s2(0, 0), WithinRel(s1(0, 0) / 4.0, 1e-14));
  CHECK_THAT(s1(2, 0), WithinRel(s1(0, 0) * 0.05 / 0.3, 1e-14));
  const auto n = s1.normalized();
  CHECK_THAT(n[0][0], WithinRel(0.3, 1e-14));
  CHECK_THAT(spectral_density(77.0, 2.21, y).normalized()[1][1], WithinRel(0.2 * 77.0 / 300.0, 1e-14));
  CHECK_THROWS_AS(spectral_density(-1.0, 1.0, y), DomainError);
  CHECK_THROWS_AS(spectral_density(300.0, 0.0, y), DomainError);
}

TEST_CASE("transition rate of a unit moment", "[noise]") {
  const YTensor y = diag(1.0, 0.0, 0.0);
  const auto s = spectral_density(300.0, 2.21, y);
  const MomentVector mx{std::complex<double>(1.0), 0.0, 0.0};
  CHECK_THAT(transition_rate(mx, s), WithinRel(gold_standard_rate(), 1e-14));
  const MomentVector mz{0.0, 0.0, std::complex<double>(1.0)};
  CHECK(transition_rate(mz, s) == 0.0);
}

TEST_CASE("Larmor frequency", "[noise]") {
  CHECK_THAT(larmor_frequency(1.0), WithinRel(1.39962449, 1e-7));
  CHECK_THAT(larmor_frequency(0.57), WithinRel(0.79, 1e-2));
  TrapSpec t;
  t.field = LarmorMHz{0.79};
  CHECK(t.larmor_mhz() == 0.79);
  CHECK_THROWS_AS(larmor_frequency(0.0), DomainError);
}

TEST_CASE("spin ladder elements", "[noise]") {
  CHECK_THAT(spin_ladder_element(2.0, 2.0), WithinRel(1.0, 1e-15));
  CHECK_THAT(spin_ladder_element(2.0, 1.0), WithinRel(1.5, 1e-15));
  CHECK_THAT(spin_ladder_element(0.5, 0.5), WithinRel(0.25, 1e-15));
  CHECK_THROWS_AS(spin_ladder_element(2.0, 3.0), DomainError);
  CHECK_THROWS_AS(spin_ladder_element(2.0, 0.5), DomainError);
  CHECK_THROWS_AS(spin_ladder_element(1.3, 0.3), DomainError);
}

TEST_CASE("spin-flip rate for field along the wire", "[noise]") {
  const YTensor y = diag(0.7, 0.6, 0.4, -0.1);
  TrapSpec trap;  // |2,2>, g_F = 1/2, n = y
  const double rate = spin_flip_rate(300.0, 2.21, y, trap);
  CHECK_THAT(rate, WithinRel(gold_standard_rate() * 0.25 * (0.7 + 0.4), 1e-13));

  TrapSpec lower = trap;
  lower.m = 1.0;
  CHECK_THAT(spin_flip_rate(300.0, 2.21, y, lower), WithinRel(1.5 * rate, 1e-13));

  TrapSpec bottom = trap;
  bottom.m = -2.0;
  CHECK(spin_flip_rate(300.0, 2.21, y, bottom) == 0.0);

  TrapSpec bad = trap;
  bad.m = 3.0;
  CHECK_THROWS_AS(spin_flip_rate(300.0, 2.21, y, bad), DomainError);
  bad = trap;
  bad.field = BiasFieldGauss{-1.0};
  CHECK_THROWS_AS(spin_flip_rate(300.0, 2.21, y, bad), DomainError);
}

TEST_CASE("moment vectors reproduce the spin-flip rate for any direction", "[noise]") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int i = 0; i < 50; ++i) {
    const YTensor y = diag(u(rng), u(rng), u(rng), 0.3 * n(rng) * 0.1);
    TrapSpec trap;
    trap.direction = {n(rng), n(rng), n(rng)};
    trap.m = i % 2 == 0 ? 2.0 : 1.0;
    const auto s = spectral_density(4.2, 0.5, y);
    const double direct = spin_flip_rate(4.2, 0.5, y, trap);
    CHECK_THAT(transition_rate(spin_flip_moments(trap), s), WithinRel(direct, 1e-12));
  }
}

TEST_CASE("transverse sum for a field along x", "[noise]") {
  const YTensor y = diag(0.7, 0.6, 0.4, -0.1);
  TrapSpec trap;
  trap.direction = {1.0, 0.0, 0.0};
  CHECK_THAT(spin_flip_rate(300.0, 2.21, y, trap), WithinRel(gold_standard_rate() * 0.25 * (0.6 + 0.4), 1e-13));
}
