#pragma once

// Globally adaptive Gauss–Kronrod (7/15) quadrature for vector-valued
// integrands. Each interval carries one error estimate for the whole vector
// (sum of per-component estimates); the interval with the largest estimate is
// bisected until the total error falls under max(abs_tol, rel_tol·Σ|I_k|) or
// the interval budget runs out.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <vector>

namespace chipnoise::quadrature {

template <std::size_t N>
using Vec = std::array<double, N>;

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_intervals = 4000;
};

template <std::size_t N>
struct Result {
  Vec<N> value{};
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <std::size_t N>
struct Interval {
  double a;
  double b;
  Vec<N> value;
  Vec<N> error;
  double total_error;

  bool operator<(const Interval& other) const { return total_error < other.total_error; }
};

template <std::size_t N, class F>
Interval<N> gk15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  Vec<N> kronrod{};
  Vec<N> gauss{};
  const Vec<N> fc = f(centre);
  for (std::size_t k = 0; k < N; ++k) {
    kronrod[k] = kKronrodWeights[7] * fc[k];
    gauss[k] = kGaussWeights[3] * fc[k];
  }
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const Vec<N> lo = f(centre - dx);
    const Vec<N> hi = f(centre + dx);
    for (std::size_t k = 0; k < N; ++k) {
      const double s = lo[k] + hi[k];
      kronrod[k] += kKronrodWeights[i] * s;
      if (i % 2 == 1) gauss[k] += kGaussWeights[i / 2] * s;
    }
  }

  Interval<N> out{a, b, {}, {}, 0.0};
  for (std::size_t k = 0; k < N; ++k) {
    out.value[k] = kronrod[k] * half;
    out.error[k] = std::abs((kronrod[k] - gauss[k]) * half);
    out.total_error += out.error[k];
  }
  return out;
}

}  // namespace detail

/// Integrates f over [breaks.front(), breaks.back()], starting from the cells
/// delimited by `breaks` (must be sorted; duplicates are skipped).
template <std::size_t N, class F>
Result<N> integrate(F&& f, std::span<const double> breaks, const Options& opts = {}) {
  Result<N> result;
  if (breaks.size() < 2) {
    result.converged = true;
    return result;
  }

  std::priority_queue<detail::Interval<N>> heap;
  Vec<N> total{};
  Vec<N> total_err{};
  auto push = [&](detail::Interval<N> iv) {
    for (std::size_t k = 0; k < N; ++k) {
      total[k] += iv.value[k];
      total_err[k] += iv.error[k];
    }
    result.evaluations += 15;
    heap.push(std::move(iv));
  };

  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] > breaks[i]) push(detail::gk15<N>(f, breaks[i], breaks[i + 1]));
  }

  auto norm = [](const Vec<N>& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
  };
  auto satisfied = [&] {
    return norm(total_err) <= std::max(opts.abs_tol, opts.rel_tol * norm(total));
  };

  while (!heap.empty() && !satisfied() && heap.size() < opts.max_intervals) {
    detail::Interval<N> worst = heap.top();
    heap.pop();
    for (std::size_t k = 0; k < N; ++k) {
      total[k] -= worst.value[k];
      total_err[k] -= worst.error[k];
    }
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval can no longer be split in floating point; keep it as is.
      heap.push(std::move(worst));
      break;
    }
    push(detail::gk15<N>(f, worst.a, mid));
    push(detail::gk15<N>(f, mid, worst.b));
  }

  // Re-sum from the surviving cells to avoid drift from the running updates.
  total = {};
  double err = 0.0;
  while (!heap.empty()) {
    const auto& iv = heap.top();
    for (std::size_t k = 0; k < N; ++k) total[k] += iv.value[k];
    err += iv.total_error;
    heap.pop();
  }
  result.value = total;
  result.error = err;
  result.converged = err <= std::max(opts.abs_tol, opts.rel_tol * norm(total));
  return result;
}

/// Scalar convenience overload on a single interval.
template <class F>
Result<1> integrate_scalar(F&& f, double a, double b, const Options& opts = {}) {
  const std::array<double, 2> breaks{a, b};
  auto wrapped = [&f](double x) { return Vec<1>{f(x)}; };
  return integrate<1>(wrapped, breaks, opts);
}

}  // namespace chipnoise::quadrature
