#pragma once

// Resistivity of pure metals (residual + Bloch–Grüneisen phonon term) and of
// dilute binary alloys under Matthiessen's rule. All resistivities are in
// µΩ·cm and temperatures in K.

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace chipnoise {

/// One tabulated phonon-resistivity sample: (T in K, ρ_ph in µΩ·cm).
using PhononSample = std::pair<double, double>;

/// A pure metal. `bg_amplitude` is derived from the other fields by
/// calibrate_bg_amplitude(); construct through make() to keep it consistent.
struct MaterialRecord {
  std::string name;
  double theta = 0.0;         // Debye temperature, K
  double rho_room = 0.0;      // ρ(300 K), µΩ·cm
  double rrr = 100.0;         // ρ(300 K) / ρ₀; may be +inf for an ideal crystal
  double bg_amplitude = 0.0;  // Bloch–Grüneisen prefactor A, µΩ·cm
  std::vector<PhononSample> rho_ph_table;  // optional override, sorted by T

  /// Validates the invariants (theta > 0, rho_room > 0, rrr > 1, table
  /// strictly increasing in T) and calibrates the amplitude.
  static MaterialRecord make(std::string name, double theta, double rho_room, double rrr = 100.0,
                             std::vector<PhononSample> rho_ph_table = {});

  /// Same metal at a different residual-resistance ratio (recalibrated).
  MaterialRecord with_rrr(double new_rrr) const;
};

/// Dilute binary alloy: solvent phonon term plus a residual that grows
/// linearly with solute concentration (atomic %).
struct AlloySpec {
  MaterialRecord solvent;
  std::string solute;
  double concentration = 0.0;   // x, at.%
  double residual_slope = 0.0;  // dρ₀/dx, µΩ·cm per at.%

  static constexpr double kLinearityLimit = 15.0;

  static AlloySpec make(MaterialRecord solvent, std::string solute, double concentration,
                        double residual_slope);

  AlloySpec with_concentration(double x) const;

  /// Above ~15 at.% ordering effects break the linear ρ₀(x) law. Callers
  /// should surface this as a warning; it is not an error.
  bool exceeds_linearity_limit() const noexcept { return concentration > kLinearityLimit; }

  /// e.g. "Ag+5%Au".
  std::string label() const;
};

using Conductor = std::variant<MaterialRecord, AlloySpec>;

std::string label(const Conductor& c);

/// ∫₀^upper z⁵eᶻ/(eᶻ−1)² dz, relative error below 1e-9.
double bloch_gruneisen_integral(double upper);

/// ρ_ph = A·(T/Θ)⁵·∫₀^{Θ/T} z⁵eᶻ/(eᶻ−1)² dz; zero at T = 0.
double bloch_gruneisen(double temperature, double theta, double amplitude);

/// A such that bloch_gruneisen(300, Θ, A) = ρ(300 K)·(1 − 1/ϱ).
double calibrate_bg_amplitude(const MaterialRecord& rec);

/// Phonon term of a metal: tabulated override inside the table's range
/// (linear interpolation), calibrated Bloch–Grüneisen elsewhere.
double phonon_resistivity(const MaterialRecord& rec, double temperature);

double residual_resistivity(const MaterialRecord& rec);
/// Alloy residual is slope·x only; the solvent's own ρ₀ is not added.
double residual_resistivity(const AlloySpec& alloy);
double residual_resistivity(const Conductor& c);

double resistivity(const MaterialRecord& rec, double temperature);
double resistivity(const AlloySpec& alloy, double temperature);
double resistivity(const Conductor& c, double temperature);

/// A conductor reduced to what the noise formulas need: its temperature (K)
/// and the resistivity at that temperature (µΩ·cm).
struct WireState {
  double temperature = 0.0;
  double rho = 0.0;
};

WireState wire_state(const Conductor& c, double temperature);

/// True when the phonon term comes (at least partly) from tabulated data.
bool has_phonon_table(const Conductor& c);

}  // namespace chipnoise
