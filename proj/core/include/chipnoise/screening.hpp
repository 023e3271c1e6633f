#pragma once

// Screening of metals, alloys and temperatures against the room-temperature
// gold standard. "noise_norm" is (T/ρ) / (300 K / ρ_Au,300K) and "rho_norm"
// is ρ / ρ_Au,300K, so noise_norm · rho_norm = T / 300 K for every point.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chipnoise/material_db.hpp"
#include "chipnoise/materials.hpp"

namespace chipnoise {

double noise_norm(double temperature, double rho);
double rho_norm(double rho);

struct ScreenPoint {
  std::string label;
  double temperature = 0.0;
  double noise_norm = 0.0;
  double rho_norm = 0.0;
  bool better_than_gold = false;  // noise_norm < 1 and rho_norm < 1
};

ScreenPoint screen_point(std::string label, double temperature, double rho);

/// One point per database metal at temperature T with a uniform residual-
/// resistance ratio; sorted by label.
std::vector<ScreenPoint> screen_metals(const MaterialDatabase& db, double temperature, double rrr = 100.0);

struct CurvePoint {
  double temperature = 0.0;
  double noise_norm = 0.0;
  double rho = 0.0;  // µΩ·cm
};

std::vector<CurvePoint> noise_curve(const Conductor& c, std::span<const double> temperatures);

/// Normalized T/ρ of the family at concentration x over the grid.
std::vector<CurvePoint> alloy_curve(const AlloySpec& family, double concentration,
                                    std::span<const double> temperatures);

/// Location of the interior maximum of T/ρ(T) on [lo, hi]; nullopt when the
/// maximum sits on either end. Coarse 1 K scan, then Brent refinement on the
/// smooth model (the scan alone for tabulated phonon data).
std::optional<double> peak_temperature(const Conductor& c, double lo = 4.2, double hi = 300.0);

/// x such that ρ₀(x) + ρ_ph,solvent(T) = rho_target. Throws DomainError naming
/// the minimum achievable resistivity when the target is below ρ_ph(T).
double boundary_concentration(const AlloySpec& family, double temperature, double rho_target);

/// 300 K / T: the noise reduction of an alloy tuned to the gold-standard
/// resistivity at temperature T.
double max_noise_reduction(double temperature);

/// Normalized half-space noise with the short-skin-depth interpolation
/// factor: noise_norm(T, ρ) · interp_factor(d, δ(ρ, f)).
double corrected_noise_norm(const WireState& w, double distance, double frequency_mhz);

/// Distance in [d_min, d_max] (µm) where the corrected noise of A and B cross,
/// or nullopt when their difference keeps one sign over the range.
std::optional<double> crossover_distance(const WireState& a, const WireState& b, double frequency_mhz,
                                         double d_min = 0.1, double d_max = 1000.0);

}  // namespace chipnoise
