#include "chipnoise/heating.hpp"

#include <cmath>

#include "chipnoise/error.hpp"
#include "chipnoise/units.hpp"

namespace chipnoise {

namespace {

// hρj² in W/m² (heat generated per unit wire footprint).
double areal_power(const HeatingConfig& cfg) {
  const double j = units::a_per_cm2_to_a_per_m2(cfg.current_density);
  return units::um_to_m(cfg.height) * units::uohm_cm_to_ohm_m(cfg.rho) * j * j;
}

}  // namespace

void HeatingConfig::validate() const {
  if (!(width > 0.0) || !(height > 0.0)) throw DomainError("wire width and height must be > 0");
  if (!(rho > 0.0)) throw DomainError("resistivity must be > 0");
  if (current_density < 0.0) throw DomainError("current density must be >= 0");
  if (!(contact_conductance > 0.0)) throw DomainError("contact conductance must be > 0");
  if (!(substrate_conductivity > 0.0) || !(substrate_heat_capacity > 0.0)) {
    throw DomainError("substrate conductivity and heat capacity must be > 0");
  }
  if (duration < 0.0) throw DomainError("duration must be >= 0");
  if (!(base_temperature >= 0.0)) throw DomainError("base temperature must be >= 0 K");
}

double fast_rise(const HeatingConfig& cfg) {
  cfg.validate();
  return areal_power(cfg) / cfg.contact_conductance;
}

SlowRise slow_rise(const HeatingConfig& cfg) {
  cfg.validate();
  const double w = units::um_to_m(cfg.width);
  const double arg = 4.0 * constants::pi * constants::pi * cfg.substrate_conductivity * cfg.duration /
                     (cfg.substrate_heat_capacity * w * w);
  if (!(arg > 1.0)) return {0.0, true};
  const double line_power = areal_power(cfg) * w;  // W/m
  return {line_power / (2.0 * constants::pi * cfg.substrate_conductivity) * std::log(arg), false};
}

double total_rise(const HeatingConfig& cfg) { return fast_rise(cfg) + slow_rise(cfg).delta_t; }

double total_rise_self_consistent(const HeatingConfig& cfg, const std::function<double(double)>& rho_of_t) {
  HeatingConfig next = cfg;
  next.rho = rho_of_t(cfg.base_temperature);
  const double first = total_rise(next);
  next.rho = rho_of_t(cfg.base_temperature + first);
  return total_rise(next);
}

double calibrate_contact_conductance(const HeatingConfig& cfg, double target_rise) {
  const double slow = slow_rise(cfg).delta_t;
  const double fast_needed = target_rise - slow;
  if (!(fast_needed > 0.0)) {
    throw DomainError("slow substrate heating alone reaches the target rise; no contact conductance fits");
  }
  return areal_power(cfg) / fast_needed;
}

}  // namespace chipnoise
