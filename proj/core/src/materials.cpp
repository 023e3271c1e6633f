#include "chipnoise/materials.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "chipnoise/error.hpp"
#include "chipnoise/quadrature.hpp"
#include "chipnoise/units.hpp"

namespace chipnoise {

namespace {

// Beyond this the integrand z⁵e^{-z} is below 1e-70 of its peak.
constexpr double kIntegrandCutoff = 200.0;

double bg_integrand(double z) {
  if (z <= 0.0) return 0.0;
  const double em1 = std::expm1(-z);  // e^{-z} − 1, accurate near 0
  return std::pow(z, 5) * std::exp(-z) / (em1 * em1);
}

void require_finite_positive(double v, const char* what) {
  if (!(v > 0.0) || std::isnan(v)) {
    throw DomainError(std::string(what) + " must be positive");
  }
}

}  // namespace

double bloch_gruneisen_integral(double upper) {
  if (upper < 0.0 || std::isnan(upper)) throw DomainError("Bloch-Gruneisen upper limit must be >= 0");
  const double b = std::min(upper, kIntegrandCutoff);
  if (b == 0.0) return 0.0;

  // Cell edges around the integrand's peak (z ≈ 4) and its tail.
  std::vector<double> breaks{0.0};
  for (double edge : {2.0, 6.0, 15.0, 40.0, 100.0}) {
    if (edge < b) breaks.push_back(edge);
  }
  breaks.push_back(b);

  auto f = [](double z) { return quadrature::Vec<1>{bg_integrand(z)}; };
  const auto r = quadrature::integrate<1>(f, breaks, {.rel_tol = 1e-12, .abs_tol = 0.0, .max_intervals = 2000});
  return r.value[0];
}

double bloch_gruneisen(double temperature, double theta, double amplitude) {
  if (temperature < 0.0 || std::isnan(temperature)) throw DomainError("temperature must be >= 0 K");
  require_finite_positive(theta, "Debye temperature");
  if (temperature == 0.0) return 0.0;
  const double ratio = temperature / theta;
  return amplitude * std::pow(ratio, 5) * bloch_gruneisen_integral(1.0 / ratio);
}

double calibrate_bg_amplitude(const MaterialRecord& rec) {
  const double phonon_room = rec.rho_room * (1.0 - 1.0 / rec.rrr);
  return phonon_room / bloch_gruneisen(kRoomTemperature, rec.theta, 1.0);
}

MaterialRecord MaterialRecord::make(std::string name, double theta, double rho_room, double rrr,
                                    std::vector<PhononSample> rho_ph_table) {
  if (!(theta > 0.0)) throw DomainError(name + ": Debye temperature must be > 0");
  if (!(rho_room > 0.0)) throw DomainError(name + ": room-temperature resistivity must be > 0");
  if (!(rrr > 1.0)) throw DomainError(name + ": residual-resistance ratio must be > 1");
  for (std::size_t i = 0; i < rho_ph_table.size(); ++i) {
    const auto [t, rho] = rho_ph_table[i];
    if (t < 0.0 || rho < 0.0) throw DomainError(name + ": negative entry in rho_ph_table");
    if (i > 0 && !(t > rho_ph_table[i - 1].first)) {
      throw DomainError(name + ": rho_ph_table temperatures must be strictly increasing");
    }
  }

  MaterialRecord rec;
  rec.name = std::move(name);
  rec.theta = theta;
  rec.rho_room = rho_room;
  rec.rrr = rrr;
  rec.rho_ph_table = std::move(rho_ph_table);
  rec.bg_amplitude = calibrate_bg_amplitude(rec);
  return rec;
}

MaterialRecord MaterialRecord::with_rrr(double new_rrr) const {
  return make(name, theta, rho_room, new_rrr, rho_ph_table);
}

AlloySpec AlloySpec::make(MaterialRecord solvent, std::string solute, double concentration,
                          double residual_slope) {
  if (!(concentration >= 0.0)) throw DomainError("alloy concentration must be >= 0 at.%");
  if (!(residual_slope > 0.0)) throw DomainError("alloy residual slope must be > 0");
  AlloySpec a;
  a.solvent = std::move(solvent);
  a.solute = std::move(solute);
  a.concentration = concentration;
  a.residual_slope = residual_slope;
  return a;
}

AlloySpec AlloySpec::with_concentration(double x) const {
  return make(solvent, solute, x, residual_slope);
}

std::string AlloySpec::label() const {
  std::ostringstream os;
  os << solvent.name << '+' << concentration << '%' << solute;
  return os.str();
}

std::string label(const Conductor& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, MaterialRecord>) {
          return v.name;
        } else {
          return v.label();
        }
      },
      c);
}

double phonon_resistivity(const MaterialRecord& rec, double temperature) {
  if (temperature < 0.0 || std::isnan(temperature)) throw DomainError("temperature must be >= 0 K");
  const auto& table = rec.rho_ph_table;
  if (table.size() >= 2 && temperature >= table.front().first && temperature <= table.back().first) {
    auto hi = std::lower_bound(table.begin(), table.end(), temperature,
                               [](const PhononSample& s, double t) { return s.first < t; });
    if (hi == table.begin()) return hi->second;
    auto lo = std::prev(hi);
    const double w = (temperature - lo->first) / (hi->first - lo->first);
    return lo->second + w * (hi->second - lo->second);
  }
  return bloch_gruneisen(temperature, rec.theta, rec.bg_amplitude);
}

double residual_resistivity(const MaterialRecord& rec) { return rec.rho_room / rec.rrr; }

double residual_resistivity(const AlloySpec& alloy) { return alloy.residual_slope * alloy.concentration; }

double residual_resistivity(const Conductor& c) {
  return std::visit([](const auto& v) { return residual_resistivity(v); }, c);
}

double resistivity(const MaterialRecord& rec, double temperature) {
  return residual_resistivity(rec) + phonon_resistivity(rec, temperature);
}

double resistivity(const AlloySpec& alloy, double temperature) {
  return residual_resistivity(alloy) + phonon_resistivity(alloy.solvent, temperature);
}

double resistivity(const Conductor& c, double temperature) {
  return std::visit([temperature](const auto& v) { return resistivity(v, temperature); }, c);
}

WireState wire_state(const Conductor& c, double temperature) {
  return {temperature, resistivity(c, temperature)};
}

bool has_phonon_table(const Conductor& c) {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, MaterialRecord>) {
          return v.rho_ph_table.size() >= 2;
        } else {
          return v.solvent.rho_ph_table.size() >= 2;
        }
      },
      c);
}

}  // namespace chipnoise
