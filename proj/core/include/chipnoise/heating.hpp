#pragma once

// Ohmic temperature rise of a current-carrying wire on a substrate: a fast
// step limited by the contact layer, followed by slow lateral diffusion in
// the substrate.

#include <functional>

namespace chipnoise {

/// Defaults describe a 5 µm × 1.4 µm gold wire on a silicon-like substrate.
/// `contact_conductance` is a calibrated value (see calibrate_contact_conductance).
struct HeatingConfig {
  double width = 5.0;                    // µm
  double height = 1.4;                   // µm (wire thickness)
  double rho = 2.21;                     // µΩ·cm, held constant over ΔT
  double current_density = 1e7;          // A/cm²
  double contact_conductance = 2.2e7;    // k, W/(m²·K)
  double substrate_conductivity = 150.0; // λ, W/(m·K)
  double substrate_heat_capacity = 1.6e6;// C, J/(m³·K)
  double duration = 30.0;                // s
  double base_temperature = 300.0;       // T₀, K

  void validate() const;
};

/// Steady contact-limited rise ΔT = hρj²/k, in K.
double fast_rise(const HeatingConfig& cfg);

struct SlowRise {
  double delta_t = 0.0;       // K
  bool pre_diffusive = false; // log argument ≤ 1: diffusion has not set in, ΔT_s = 0
};

/// ΔT_s = (hwρj² / 2πλ)·ln(4π²λt / Cw²), in K.
SlowRise slow_rise(const HeatingConfig& cfg);

/// fast_rise + slow_rise.
double total_rise(const HeatingConfig& cfg);

/// One fixed-point refinement: re-evaluates ρ at T₀ + ΔT with `rho_of_t`
/// (µΩ·cm as a function of K) and returns the recomputed total rise.
double total_rise_self_consistent(const HeatingConfig& cfg, const std::function<double(double)>& rho_of_t);

/// Contact conductance k that makes total_rise(cfg) equal `target_rise`.
/// Throws DomainError if the slow part alone already exceeds the target.
double calibrate_contact_conductance(const HeatingConfig& cfg, double target_rise);

}  // namespace chipnoise
