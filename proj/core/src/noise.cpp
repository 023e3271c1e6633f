#include "chipnoise/noise.hpp"

#include <cmath>

#include "chipnoise/error.hpp"
#include "chipnoise/units.hpp"

namespace chipnoise {

using constants::pi;

namespace {

// μ₀² k_B / (4π² ρ) · T · Y, with ρ in µΩ·cm and Y in 1/µm, gives T²/Hz.
double density_prefactor(double temperature, double rho) {
  const double rho_si = units::uohm_cm_to_ohm_m(rho);
  return constants::mu0 * constants::mu0 * constants::k_B * temperature / (4.0 * pi * pi * rho_si) / units::um_to_m(1.0);
}

std::array<double, 3> normalize(const std::array<double, 3>& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (!(n > 0.0)) throw DomainError("field direction must be a nonzero vector");
  return {v[0] / n, v[1] / n, v[2] / n};
}

bool is_integer(double v) { return std::abs(v - std::round(v)) < 1e-12; }

}  // namespace

NoiseTensor::NoiseTensor(const Matrix& s, double temperature, double rho, const YTensor& y)
    : s_(s), temperature_(temperature), rho_(rho), y_(y) {}

NoiseTensor::Matrix NoiseTensor::normalized() const {
  const double scale = (temperature_ / kRoomTemperature) * (kGoldRoomResistivity / rho_);
  Matrix out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = scale * y_(i, j);
  }
  return out;
}

NoiseTensor spectral_density(double temperature, double rho, const YTensor& y) {
  if (temperature < 0.0 || std::isnan(temperature)) throw DomainError("temperature must be >= 0 K");
  if (!(rho > 0.0)) throw DomainError("resistivity must be > 0 for the quasi-static noise formula");
  const double k = density_prefactor(temperature, rho);
  NoiseTensor::Matrix s{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) s[i][j] = k * y(i, j);
  }
  return NoiseTensor(s, temperature, rho, y);
}

double transition_rate(const MomentVector& moments, const NoiseTensor& s) {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) sum += std::conj(moments[i]) * moments[j] * s(i, j);
  }
  const double scale = constants::mu_B * constants::mu_B / (constants::hbar * constants::hbar);
  return std::max(0.0, sum.real() * scale);
}

double gold_standard_rate() {
  YTensor::Matrix m{};
  m[0][0] = 1.0;
  const NoiseTensor s = spectral_density(kRoomTemperature, kGoldRoomResistivity, YTensor(m));
  return transition_rate({1.0, 0.0, 0.0}, s);
}

double spin_ladder_element(double f, double m) {
  if (f < 0.0 || !is_integer(2.0 * f)) throw DomainError("F must be a non-negative integer or half-integer");
  if (!is_integer(f - m)) throw DomainError("F - m must be an integer");
  if (std::abs(m) > f + 1e-12) throw DomainError("|m| must not exceed F");
  if (m - 1.0 < -f - 1e-12) throw DomainError("no sublevel m-1 below m = -F");
  return (f * (f + 1.0) - m * (m - 1.0)) / 4.0;
}

void TrapSpec::validate() const {
  if (f < 0.0 || !is_integer(2.0 * f)) throw DomainError("F must be a non-negative integer or half-integer");
  if (!is_integer(f - m) || std::abs(m) > f + 1e-12) throw DomainError("require |m| <= F with F - m integer");
  (void)normalize(direction);
  std::visit([](auto v) {
    if (!(v.value > 0.0)) throw DomainError("bias field / Larmor frequency must be > 0");
  }, field);
}

double TrapSpec::larmor_mhz() const {
  if (const auto* b = std::get_if<BiasFieldGauss>(&field)) return larmor_frequency(b->value);
  const double f_mhz = std::get<LarmorMHz>(field).value;
  if (!(f_mhz > 0.0)) throw DomainError("Larmor frequency must be > 0");
  return f_mhz;
}

TrapSpec TrapSpec::at_height(double z) const {
  TrapSpec t = *this;
  t.point.z = z;
  return t;
}

double larmor_frequency(double bias_gauss) {
  if (!(bias_gauss > 0.0)) throw DomainError("bias field must be > 0");
  const double b = units::gauss_to_tesla(bias_gauss);
  return units::hz_to_mhz(constants::mu_B * b / (2.0 * pi * constants::hbar));
}

double spin_flip_rate(double temperature, double rho, const YTensor& y, const TrapSpec& trap) {
  trap.validate();
  if (std::abs(trap.m + trap.f) < 1e-12) return 0.0;
  const double ladder = spin_ladder_element(trap.f, trap.m);
  const auto n = normalize(trap.direction);
  double nyn = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) nyn += n[i] * y(i, j) * n[j];
  }
  const double transverse = y.trace() - nyn;

  if (temperature < 0.0 || std::isnan(temperature)) throw DomainError("temperature must be >= 0 K");
  if (!(rho > 0.0)) throw DomainError("resistivity must be > 0 for the quasi-static noise formula");
  const double k = density_prefactor(temperature, rho);
  const double mu = constants::mu_B * trap.g_f / constants::hbar;
  return k * mu * mu * ladder * transverse;
}

MomentVector spin_flip_moments(const TrapSpec& trap) {
  trap.validate();
  if (std::abs(trap.m + trap.f) < 1e-12) return {};
  const auto n = normalize(trap.direction);
  // Any orthonormal pair (e1, e2) transverse to n̂.
  std::array<double, 3> helper = std::abs(n[0]) < 0.9 ? std::array<double, 3>{1.0, 0.0, 0.0}
                                                      : std::array<double, 3>{0.0, 0.0, 1.0};
  auto cross = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  const auto e1 = normalize(cross(n, helper));
  const auto e2 = cross(n, e1);
  // ⟨m−1|F₁|m⟩ = c/2, ⟨m−1|F₂|m⟩ = i·c/2 with c = √(F(F+1) − m(m−1)).
  const double half_c = std::sqrt(spin_ladder_element(trap.f, trap.m));
  const std::complex<double> i1{half_c, 0.0};
  const std::complex<double> i2{0.0, half_c};
  MomentVector mu{};
  for (std::size_t k = 0; k < 3; ++k) mu[k] = trap.g_f * (i1 * e1[k] + i2 * e2[k]);
  return mu;
}

}  // namespace chipnoise
