#pragma once

// Geometry tensor Y_ij of a conductor seen from a trap point, in 1/µm:
//
//   X_ij = ½ ∫ d³x′ (x−x′)_i (x−x′)_j / |x−x′|⁶,   Y_ij = tr{X} δ_ij − X_ij
//
// y_slab() evaluates the closed form for an infinitely long rectangular wire;
// y_numeric() integrates the definition directly over a union of boxes and is
// the independent check on it. Skin depth and the short-skin-depth
// interpolation factor live here too.

#include <array>
#include <cstddef>
#include <span>

namespace chipnoise {

/// Rectangular wire along ŷ occupying x′ ∈ [−w/2, w/2], z′ ∈ [−t, 0] (µm).
struct SlabGeometry {
  double width = 0.0;
  double thickness = 0.0;

  static SlabGeometry make(double width, double thickness);
};

/// Trap position relative to the wire: lateral offset x and height z above
/// the top surface (µm).
struct TrapPoint {
  double x = 0.0;
  double z = 0.0;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Symmetric 3×3 tensor; index 0,1,2 = x,y,z.
class YTensor {
 public:
  using Matrix = std::array<std::array<double, 3>, 3>;

  YTensor() = default;
  explicit YTensor(const Matrix& m);

  /// Builds Y = tr{X}·1 − X from the raw second-moment integral X.
  static YTensor from_moments(const Matrix& x);

  double operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const Matrix& matrix() const noexcept { return m_; }
  double trace() const noexcept { return m_[0][0] + m_[1][1] + m_[2][2]; }

  YTensor& operator+=(const YTensor& other);
  friend YTensor operator+(YTensor a, const YTensor& b) { return a += b; }
  friend YTensor operator*(double s, YTensor a);

 private:
  Matrix m_{};
};

/// Closed-form tensor of an infinite slab. Throws DomainError for z ≤ 0.
/// Only Y₁₁, Y₂₂, Y₃₃ and Y₃₁ (= Y₁₃) are nonzero; Y₂₂ = (3/8)·tr.
YTensor y_slab(const SlabGeometry& geom, const TrapPoint& p);

/// Axis-aligned box in µm. The y bounds may be ±infinity.
struct Box {
  std::array<double, 2> x{};
  std::array<double, 2> y{};
  std::array<double, 2> z{};

  bool contains_or_touches(const Point3& p) const;
};

/// The slab as a box with infinite y extent.
Box slab_box(const SlabGeometry& geom);

struct NumericOptions {
  double tolerance = 1e-3;          // target relative error
  double truncation_factor = 50.0;  // infinite y extents cut at ±factor·scale
  std::size_t max_intervals = 2000; // per nested 1-D integration
};

struct NumericYResult {
  YTensor tensor;
  double relative_error = 0.0;  // achieved estimate, includes the truncated tail bound
  std::size_t evaluations = 0;
};

/// Nested adaptive Gauss–Kronrod quadrature of X over the union of boxes.
/// Infinite y extents are truncated at L = factor·max(distance, box sizes);
/// the remainder is added from the |y|⁻⁴ asymptotic expansion. Throws
/// DomainError if the point lies inside or on a box, ConvergenceError when
/// the tolerance is not met.
NumericYResult y_numeric(std::span<const Box> boxes, const Point3& point, const NumericOptions& opts = {});

/// δ = √(2ρ / μ₀ω), ω = 2πf. ρ in µΩ·cm, f in MHz, result in µm.
double skin_depth(double rho, double frequency_mhz);

/// (1 + 2d³/3δ³)⁻¹ ∈ (0, 1].
double interp_factor(double distance, double delta);

/// Half-space noise scales in SI (K / (Ω·m²)): the quasi-static T/(ρd) and
/// the short-skin-depth asymptote (3/2)(2/μ₀ω)^{3/2} T√ρ / d⁴.
struct AsymptoticScales {
  double quasi_static = 0.0;
  double far = 0.0;
};

AsymptoticScales asymptotic_consistency(double temperature, double rho, double distance, double frequency_mhz);

}  // namespace chipnoise
