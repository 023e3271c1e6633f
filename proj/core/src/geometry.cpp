#include "chipnoise/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "chipnoise/error.hpp"
#include "chipnoise/quadrature.hpp"
#include "chipnoise/units.hpp"

namespace chipnoise {

using constants::pi;

SlabGeometry SlabGeometry::make(double width, double thickness) {
  if (!(width > 0.0)) throw DomainError("wire width must be > 0");
  if (!(thickness > 0.0)) throw DomainError("wire thickness must be > 0");
  return {width, thickness};
}

YTensor::YTensor(const Matrix& m) : m_(m) {}

YTensor YTensor::from_moments(const Matrix& x) {
  const double tr = x[0][0] + x[1][1] + x[2][2];
  Matrix y{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) y[i][j] = (i == j ? tr : 0.0) - x[i][j];
  }
  return YTensor(y);
}

YTensor& YTensor::operator+=(const YTensor& other) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m_[i][j] += other.m_[i][j];
  }
  return *this;
}

YTensor operator*(double s, YTensor a) {
  YTensor::Matrix m = a.matrix();
  for (auto& row : m) {
    for (auto& v : row) v *= s;
  }
  return YTensor(m);
}

namespace {

// Differences f(u, −p) − f(u, −q) of the four bracket functions, with the
// 1/u singularities of the Y₁₁ and Y₂₂ kernels cancelled analytically so
// that u → 0 (trap above a wire edge) stays finite. p, q > 0 are the depths
// of the bottom and top faces below the trap.
struct ColumnDiff {
  double d11;
  double d22;
  double d33;
  double d31;
};

ColumnDiff column_diff(double u, double p, double q) {
  const double sp = std::sqrt(1.0 + (u / p) * (u / p));
  const double sq = std::sqrt(1.0 + (u / q) * (u / q));
  const double inv_p2 = 1.0 / (p * p);
  const double inv_q2 = 1.0 / (q * q);
  ColumnDiff d{};
  // r/(uv):          −σ/u      with σ = √(1 + u²/s²), v = −s
  d.d22 = u * (inv_q2 - inv_p2) / (sp + sq);
  // v/(u r):         −1/(uσ)
  d.d11 = u * (inv_p2 - inv_q2) / ((sp + sq) * sp * sq);
  // u/(v r):         −u/(s²σ)
  d.d33 = -u * inv_p2 / sp + u * inv_q2 / sq;
  // 1/r:             1/(sσ)
  d.d31 = 1.0 / (p * sp) - 1.0 / (q * sq);
  return d;
}

}  // namespace

YTensor y_slab(const SlabGeometry& geom, const TrapPoint& p) {
  if (!(p.z > 0.0)) throw DomainError("trap height must be > 0 (point above the wire surface)");
  if (!(geom.width > 0.0) || !(geom.thickness > 0.0)) throw DomainError("slab dimensions must be > 0");

  const double a = -0.5 * geom.width - p.x;
  const double b = 0.5 * geom.width - p.x;
  const double depth_bottom = p.z + geom.thickness;
  const double depth_top = p.z;

  const ColumnDiff da = column_diff(a, depth_bottom, depth_top);
  const ColumnDiff db = column_diff(b, depth_bottom, depth_top);

  const double y22 = -3.0 * pi / 16.0 * (da.d22 - db.d22);
  const double y11 = y22 + pi / 16.0 * (da.d11 - db.d11);
  const double y33 = y22 + pi / 16.0 * (da.d33 - db.d33);
  // Sign follows Y_ij = tr{X}δ_ij − X_ij, i.e. Y₃₁ = −X₃₁.
  const double y31 = -pi / 16.0 * (da.d31 - db.d31);

  YTensor::Matrix m{};
  m[0][0] = y11;
  m[1][1] = y22;
  m[2][2] = y33;
  m[0][2] = m[2][0] = y31;
  return YTensor(m);
}

bool Box::contains_or_touches(const Point3& p) const {
  return p.x >= x[0] && p.x <= x[1] && p.y >= y[0] && p.y <= y[1] && p.z >= z[0] && p.z <= z[1];
}

Box slab_box(const SlabGeometry& geom) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return Box{{-0.5 * geom.width, 0.5 * geom.width}, {-inf, inf}, {-geom.thickness, 0.0}};
}

namespace {

// Component order of the moment vector.
enum : std::size_t { XX, YY, ZZ, XY, XZ, YZ };
using Moments = quadrature::Vec<6>;

double distance_to_box(const Box& b, const Point3& p) {
  auto axis = [](double v, const std::array<double, 2>& r) {
    if (v < r[0]) return r[0] - v;
    if (v > r[1]) return v - r[1];
    return 0.0;
  };
  const double dx = axis(p.x, b.x);
  const double dy = axis(p.y, b.y);
  const double dz = axis(p.z, b.z);
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Cell edges for [lo, hi] refined around `centre` at multiples of `scale`.
std::vector<double> breakpoints(double lo, double hi, double centre, double scale) {
  std::vector<double> out{lo, hi};
  auto add = [&](double v) {
    if (v > lo && v < hi) out.push_back(v);
  };
  add(centre);
  if (scale > 0.0) {
    for (double k : {1.0, 10.0, 100.0}) {
      add(centre - k * scale);
      add(centre + k * scale);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ∫_S^∞ of s^n/(ρ²+s²)³ for n = 0, 1, 2 (leading terms of the 1/s expansion
// for n = 0, 2; exact for n = 1), plus the magnitude of the first dropped term.
struct Tail {
  double i0;
  double i1;
  double i2;
  double remainder;
};

Tail tail_integrals(double rho2, double s) {
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double s5 = s3 * s2;
  const double s7 = s5 * s2;
  const double s9 = s7 * s2;
  Tail t{};
  t.i0 = 1.0 / (5.0 * s5) - 3.0 * rho2 / (7.0 * s7) + 6.0 * rho2 * rho2 / (9.0 * s9);
  t.i1 = 1.0 / (4.0 * (rho2 + s2) * (rho2 + s2));
  t.i2 = 1.0 / (3.0 * s3) - 3.0 * rho2 / (5.0 * s5) + 6.0 * rho2 * rho2 / (7.0 * s7);
  t.remainder = 10.0 * rho2 * rho2 * rho2 / (9.0 * s9);
  return t;
}

struct BoxIntegrator {
  const Box& box;
  Point3 p;
  double truncation;  // L
  double tol;
  std::size_t max_intervals;
  bool converged = true;
  double tail_remainder = 0.0;
  std::size_t evaluations = 0;

  Moments integrand(double dx, double dy, double dz) const {
    const double r2 = dx * dx + dy * dy + dz * dz;
    const double w = 0.5 / (r2 * r2 * r2);
    return {w * dx * dx, w * dy * dy, w * dz * dz, w * dx * dy, w * dx * dz, w * dy * dz};
  }

  // ∫ dy′ at fixed (x′, z′), including the analytic tails of infinite sides.
  Moments along_y(double xs, double zs) {
    const double dx = p.x - xs;
    const double dz = p.z - zs;
    const double rho2 = dx * dx + dz * dz;

    double lo = box.y[0];
    double hi = box.y[1];
    const bool open_lo = std::isinf(lo);
    const bool open_hi = std::isinf(hi);
    if (open_lo) lo = std::min(p.y, hi) - truncation;
    if (open_hi) hi = std::max(p.y, lo) + truncation;

    auto f = [&](double ys) { return integrand(dx, p.y - ys, dz); };
    const auto breaks = breakpoints(lo, hi, p.y, std::sqrt(rho2));
    const auto r = quadrature::integrate<6>(f, breaks, {.rel_tol = 0.01 * tol, .abs_tol = 0.0, .max_intervals = max_intervals});
    converged = converged && r.converged;
    evaluations += r.evaluations;
    Moments m = r.value;

    auto add_tail = [&](double s, double dy_sign) {
      const Tail t = tail_integrals(rho2, s);
      m[XX] += 0.5 * dx * dx * t.i0;
      m[ZZ] += 0.5 * dz * dz * t.i0;
      m[XZ] += 0.5 * dx * dz * t.i0;
      m[YY] += 0.5 * t.i2;
      m[XY] += 0.5 * dx * dy_sign * t.i1;
      m[YZ] += 0.5 * dz * dy_sign * t.i1;
      tail_remainder = std::max(tail_remainder, 0.5 * t.remainder);
    };
    if (open_hi) add_tail(hi - p.y, -1.0);  // dy = y − y′ < 0 beyond the top cut
    if (open_lo) add_tail(p.y - lo, +1.0);
    return m;
  }

  Moments along_z(double xs) {
    const double gap_x = std::max({0.0, box.x[0] - p.x, p.x - box.x[1]});
    const double scale = std::max(gap_x, std::abs(p.x - xs));
    auto f = [&](double zs) { return along_y(xs, zs); };
    const auto breaks = breakpoints(box.z[0], box.z[1], p.z, std::max(scale, distance_to_box(box, p)));
    const auto r = quadrature::integrate<6>(f, breaks, {.rel_tol = 0.1 * tol, .abs_tol = 0.0, .max_intervals = max_intervals});
    converged = converged && r.converged;
    return r.value;
  }

  quadrature::Result<6> over_x() {
    auto f = [&](double xs) { return along_z(xs); };
    const auto breaks = breakpoints(box.x[0], box.x[1], p.x, distance_to_box(box, p));
    return quadrature::integrate<6>(f, breaks, {.rel_tol = 0.5 * tol, .abs_tol = 0.0, .max_intervals = max_intervals});
  }
};

}  // namespace

NumericYResult y_numeric(std::span<const Box> boxes, const Point3& point, const NumericOptions& opts) {
  if (!(opts.tolerance > 0.0)) throw DomainError("quadrature tolerance must be > 0");
  if (!(opts.truncation_factor > 0.0)) throw DomainError("truncation factor must be > 0");

  double scale = 0.0;
  for (const Box& b : boxes) {
    if (!(b.x[0] < b.x[1] && b.y[0] < b.y[1] && b.z[0] < b.z[1])) throw DomainError("degenerate box");
    if (std::isinf(b.x[0]) || std::isinf(b.x[1]) || std::isinf(b.z[0]) || std::isinf(b.z[1])) {
      throw DomainError("only the y extent of a box may be infinite");
    }
    if (b.contains_or_touches(point)) throw DomainError("trap point lies inside or on the conductor volume");
    scale = std::max({scale, b.x[1] - b.x[0], b.z[1] - b.z[0], distance_to_box(b, point)});
  }
  const double truncation = opts.truncation_factor * scale;

  YTensor::Matrix x{};
  double abs_error = 0.0;
  double tail = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
  for (const Box& b : boxes) {
    BoxIntegrator integ{b, point, truncation, opts.tolerance, opts.max_intervals};
    const auto r = integ.over_x();
    converged = converged && r.converged && integ.converged;
    abs_error += r.error;
    tail += integ.tail_remainder * (b.x[1] - b.x[0]) * (b.z[1] - b.z[0]);
    evaluations += integ.evaluations;

    const Moments& m = r.value;
    x[0][0] += m[XX];
    x[1][1] += m[YY];
    x[2][2] += m[ZZ];
    x[0][1] += m[XY];
    x[0][2] += m[XZ];
    x[1][2] += m[YZ];
  }
  x[1][0] = x[0][1];
  x[2][0] = x[0][2];
  x[2][1] = x[1][2];

  NumericYResult out;
  out.tensor = YTensor::from_moments(x);
  out.evaluations = evaluations;
  const double trace_x = x[0][0] + x[1][1] + x[2][2];
  out.relative_error = trace_x > 0.0 ? (abs_error + tail) / trace_x : 0.0;
  if (!converged || out.relative_error > opts.tolerance) {
    throw ConvergenceError("volume quadrature did not reach tolerance", out.relative_error);
  }
  return out;
}

double skin_depth(double rho, double frequency_mhz) {
  if (!(rho > 0.0)) throw DomainError("resistivity must be > 0");
  if (!(frequency_mhz > 0.0)) throw DomainError("frequency must be > 0");
  const double omega = 2.0 * pi * units::mhz_to_hz(frequency_mhz);
  const double delta = std::sqrt(2.0 * units::uohm_cm_to_ohm_m(rho) / (constants::mu0 * omega));
  return units::m_to_um(delta);
}

double interp_factor(double distance, double delta) {
  if (!(distance >= 0.0)) throw DomainError("distance must be >= 0");
  if (!(delta > 0.0)) throw DomainError("skin depth must be > 0");
  const double r = distance / delta;
  return 1.0 / (1.0 + 2.0 * r * r * r / 3.0);
}

AsymptoticScales asymptotic_consistency(double temperature, double rho, double distance, double frequency_mhz) {
  if (!(temperature > 0.0) || !(rho > 0.0) || !(distance > 0.0) || !(frequency_mhz > 0.0)) {
    throw DomainError("asymptotic scales need positive T, rho, d and f");
  }
  const double rho_si = units::uohm_cm_to_ohm_m(rho);
  const double d_si = units::um_to_m(distance);
  const double omega = 2.0 * pi * units::mhz_to_hz(frequency_mhz);
  AsymptoticScales s;
  s.quasi_static = temperature / (rho_si * d_si);
  s.far = 1.5 * std::pow(2.0 / (constants::mu0 * omega), 1.5) * temperature * std::sqrt(rho_si) / std::pow(d_si, 4);
  return s;
}

}  // namespace chipnoise
