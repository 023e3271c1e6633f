#pragma once

// Quasi-static magnetic noise spectral density near a conductor and the
// resulting magnetic-dipole transition rates between Zeeman sublevels.

#include <array>
#include <complex>
#include <variant>

#include "chipnoise/geometry.hpp"

namespace chipnoise {

/// S_B^{ij} in T²/Hz, together with the material/temperature factor that
/// produced it so a dimensionless view relative to gold at 300 K can be given.
class NoiseTensor {
 public:
  using Matrix = std::array<std::array<double, 3>, 3>;

  NoiseTensor() = default;
  NoiseTensor(const Matrix& s, double temperature, double rho, const YTensor& y);

  double operator()(std::size_t i, std::size_t j) const { return s_[i][j]; }
  const Matrix& matrix() const noexcept { return s_; }

  /// (T/300 K)·(ρ_Au,300K/ρ)·Y_ij·1 µm: equals 1·Y·1µm for gold at 300 K.
  Matrix normalized() const;

 private:
  Matrix s_{};
  double temperature_ = 0.0;
  double rho_ = 0.0;
  YTensor y_;
};

/// S_B^{ij} = μ₀² k_B T / (4π² ρ) · Y_ij. T in K, ρ in µΩ·cm, Y in 1/µm.
NoiseTensor spectral_density(double temperature, double rho, const YTensor& y);

/// Matrix elements ⟨0|μ_i|f⟩ in units of μ_B.
using MomentVector = std::array<std::complex<double>, 3>;

/// Γ = Σ_ij μ_i* μ_j S^{ij} / ħ², in 1/s.
double transition_rate(const MomentVector& moments, const NoiseTensor& s);

/// Γ for gold at 300 K, unit moments along one axis and Y = 1/µm on that axis
/// (≈ 58 s⁻¹); the prefactor of the "T/ρ relative to gold" rate formula.
double gold_standard_rate();

/// |⟨F,m−1|F_j|F,m⟩|² for an axis j transverse to the quantization axis:
/// (F(F+1) − m(m−1)) / 4. Throws DomainError unless 2F is a non-negative
/// integer, F − m is an integer and −F < m ≤ F.
double spin_ladder_element(double f, double m);

struct BiasFieldGauss {
  double value = 0.0;
};
struct LarmorMHz {
  double value = 0.0;
};

/// Trap description. The field/quantization direction defaults to the wire
/// axis ŷ; the default state is ⁸⁷Rb |F=2, m=2⟩ with g_F = 1/2.
struct TrapSpec {
  TrapPoint point;
  std::variant<BiasFieldGauss, LarmorMHz> field = BiasFieldGauss{1.0};
  double f = 2.0;
  double m = 2.0;
  double g_f = 0.5;
  std::array<double, 3> direction{0.0, 1.0, 0.0};

  /// Validates |m| ≤ F and a positive field / frequency.
  void validate() const;
  double larmor_mhz() const;
  TrapSpec at_height(double z) const;
};

/// f = μ_B B₀ / (2πħ) in MHz for B₀ in gauss (no g_F factor).
double larmor_frequency(double bias_gauss);

/// Rate of |F,m⟩ → |F,m−1⟩, in 1/s:
///   (μ₀²μ_B²g_F²k_BT / 4π²ρħ²) · |⟨F,m−1|F_⊥|F,m⟩|² · (tr Y − n̂·Y·n̂)
/// which for n̂ = ŷ is the sum of Y₁₁ and Y₃₃. Returns 0 for m = −F.
double spin_flip_rate(double temperature, double rho, const YTensor& y, const TrapSpec& trap);

/// Moment vector ⟨F,m−1|μ|F,m⟩/μ_B = g_F·⟨F,m−1|F|F,m⟩ for the trap's
/// quantization axis; feeding it to transition_rate reproduces spin_flip_rate.
MomentVector spin_flip_moments(const TrapSpec& trap);

}  // namespace chipnoise
