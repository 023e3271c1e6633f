#pragma once

// Trap loss through the |2,2⟩ → |2,1⟩ → |2,0⟩ spin-flip cascade, effective
// lifetimes and lifetime-vs-height curves above a slab wire.

#include <span>
#include <vector>

#include "chipnoise/geometry.hpp"
#include "chipnoise/materials.hpp"
#include "chipnoise/noise.hpp"

namespace chipnoise {

struct CascadeRates {
  double gamma21 = 0.0;  // |2,2⟩ → |2,1⟩, 1/s
  double gamma10 = 0.0;  // |2,1⟩ → |2,0⟩, 1/s
};

/// Rates of the first two downward steps of the trap's cascade.
CascadeRates cascade_rates(double temperature, double rho, const YTensor& y, const TrapSpec& trap);

/// Trapped population P₂₂ + P₂₁ for γ₁₀ = 3/2·γ₂₁ with reversible 2↔1 steps:
/// (6e^{−γ₂₁t/2} − e^{−3γ₂₁t}) / 5.
double survival(double t, double gamma21);

struct CascadePopulations {
  double t = 0.0;
  double p22 = 0.0;
  double p21 = 0.0;
  double p20 = 0.0;
};

/// Integrates the rate equations (Dormand–Prince, tight tolerances) from
/// P₂₂ = 1 at t = 0 and samples them at `times` (sorted, ≥ 0). Throws
/// ConvergenceError if the stepper fails.
std::vector<CascadePopulations> solve_cascade_numeric(double gamma21, std::span<const double> times);

/// 1/e time of survival(), by bracketed bisection (≈ 2.364/γ₂₁).
double effective_lifetime(double gamma21);

/// τ₁ + τ₂ = 1/γ₂₁ + 1/γ₁₀.
double simple_lifetime(double gamma21, double gamma10);

/// (1/τ_mag + 1/τ_tech)⁻¹; τ_tech may be +inf.
double total_lifetime(double tau_mag, double tau_tech);

enum class LifetimeModel { simple, complete };

struct LifetimeCurveOptions {
  double tau_tech = 2.5;  // s
  LifetimeModel model = LifetimeModel::complete;
  bool skin_correction = false;  // multiply noise by interp_factor(d, δ)
};

struct LifetimePoint {
  double height = 0.0;   // µm
  double gamma21 = 0.0;  // 1/s
  double tau_mag = 0.0;  // s
  double tau_trap = 0.0; // s
};

/// One point per height, using y_slab at (trap.point.x, height). The complete
/// model requires γ₁₀ = 3/2·γ₂₁ (|2,2⟩ with field along the wire).
std::vector<LifetimePoint> lifetime_curve(const WireState& wire, const SlabGeometry& geom, const TrapSpec& trap,
                                          std::span<const double> heights, const LifetimeCurveOptions& opts = {});

}  // namespace chipnoise
