#include "chipnoise/screening.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "chipnoise/error.hpp"
#include "chipnoise/geometry.hpp"
#include "chipnoise/units.hpp"

namespace chipnoise {

double noise_norm(double temperature, double rho) {
  if (!(rho > 0.0)) throw DomainError("resistivity must be > 0");
  return (temperature / rho) / (kRoomTemperature / kGoldRoomResistivity);
}

double rho_norm(double rho) { return rho / kGoldRoomResistivity; }

ScreenPoint screen_point(std::string label, double temperature, double rho) {
  ScreenPoint p;
  p.label = std::move(label);
  p.temperature = temperature;
  p.noise_norm = noise_norm(temperature, rho);
  p.rho_norm = rho_norm(rho);
  p.better_than_gold = p.noise_norm < 1.0 && p.rho_norm < 1.0;
  return p;
}

std::vector<ScreenPoint> screen_metals(const MaterialDatabase& db, double temperature, double rrr) {
  if (!(temperature > 0.0)) throw DomainError("screening temperature must be > 0 K");
  std::vector<ScreenPoint> out;
  for (const auto& name : db.metal_names()) {
    const MaterialRecord rec = db.metal(name).with_rrr(rrr);
    out.push_back(screen_point(name, temperature, resistivity(rec, temperature)));
  }
  std::sort(out.begin(), out.end(), [](const ScreenPoint& a, const ScreenPoint& b) { return a.label < b.label; });
  return out;
}

std::vector<CurvePoint> noise_curve(const Conductor& c, std::span<const double> temperatures) {
  std::vector<CurvePoint> out;
  out.reserve(temperatures.size());
  for (double t : temperatures) {
    const double rho = resistivity(c, t);
    out.push_back({t, noise_norm(t, rho), rho});
  }
  return out;
}

std::vector<CurvePoint> alloy_curve(const AlloySpec& family, double concentration,
                                    std::span<const double> temperatures) {
  return noise_curve(family.with_concentration(concentration), temperatures);
}

std::optional<double> peak_temperature(const Conductor& c, double lo, double hi) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("peak search needs 0 < lo < hi");
  auto ratio = [&c](double t) { return t / resistivity(c, t); };

  std::vector<double> grid;
  for (double t = lo; t < hi; t += 1.0) grid.push_back(t);
  grid.push_back(hi);

  std::size_t best = 0;
  double best_value = ratio(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = ratio(grid[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best == 0 || best + 1 == grid.size()) return std::nullopt;
  if (has_phonon_table(c)) return grid[best];

  auto negated = [&ratio](double t) { return -ratio(t); };
  const auto [t_peak, neg_peak] = boost::math::tools::brent_find_minima(negated, grid[best - 1], grid[best + 1], 40);
  const double peak = -neg_peak;
  if (!(peak > ratio(lo)) || !(peak > ratio(hi))) return std::nullopt;
  return t_peak;
}

double boundary_concentration(const AlloySpec& family, double temperature, double rho_target) {
  const double phonon = phonon_resistivity(family.solvent, temperature);
  if (rho_target < phonon) {
    std::ostringstream os;
    os << "target resistivity " << rho_target << " uOhm cm is below the " << family.solvent.name
       << " phonon resistivity at " << temperature << " K; minimum achievable is " << phonon << " uOhm cm";
    throw DomainError(os.str());
  }
  return (rho_target - phonon) / family.residual_slope;
}

double max_noise_reduction(double temperature) {
  if (!(temperature > 0.0) || temperature > kRoomTemperature) throw DomainError("require 0 < T <= 300 K");
  return kRoomTemperature / temperature;
}

double corrected_noise_norm(const WireState& w, double distance, double frequency_mhz) {
  return noise_norm(w.temperature, w.rho) * interp_factor(distance, skin_depth(w.rho, frequency_mhz));
}

std::optional<double> crossover_distance(const WireState& a, const WireState& b, double frequency_mhz,
                                         double d_min, double d_max) {
  if (!(d_min > 0.0) || !(d_max > d_min)) throw DomainError("crossover range must satisfy 0 < d_min < d_max");
  const double delta_a = skin_depth(a.rho, frequency_mhz);
  const double delta_b = skin_depth(b.rho, frequency_mhz);
  const double na = noise_norm(a.temperature, a.rho);
  const double nb = noise_norm(b.temperature, b.rho);
  auto diff = [&](double d) { return na * interp_factor(d, delta_a) - nb * interp_factor(d, delta_b); };

  constexpr int kScan = 512;
  const double ratio = std::pow(d_max / d_min, 1.0 / kScan);
  double prev_d = d_min;
  double prev = diff(prev_d);
  for (int i = 1; i <= kScan; ++i) {
    const double d = i == kScan ? d_max : d_min * std::pow(ratio, i);
    const double cur = diff(d);
    if (prev == 0.0 && cur == 0.0) {
      prev_d = d;
      continue;  // identical curves: no crossing
    }
    if (prev == 0.0) return prev_d;
    if ((prev < 0.0) != (cur < 0.0) || cur == 0.0) {
      if (cur == 0.0) return d;
      boost::math::tools::eps_tolerance<double> tol(48);
      const auto [lo, hi] = boost::math::tools::bisect(diff, prev_d, d, tol);
      return 0.5 * (lo + hi);
    }
    prev_d = d;
    prev = cur;
  }
  return std::nullopt;
}

}  // namespace chipnoise
