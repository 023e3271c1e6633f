#include "chipnoise/lifetime.hpp"

#include <cmath>
#include <limits>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "chipnoise/error.hpp"

namespace chipnoise {

namespace {

constexpr double kCascadeRatio = 1.5;

void require_positive_rate(double g, const char* what) {
  if (!(g > 0.0) || std::isinf(g)) throw DomainError(std::string(what) + " must be a positive finite rate");
}

}  // namespace

CascadeRates cascade_rates(double temperature, double rho, const YTensor& y, const TrapSpec& trap) {
  CascadeRates r;
  r.gamma21 = spin_flip_rate(temperature, rho, y, trap);
  TrapSpec lower = trap;
  lower.m = trap.m - 1.0;
  r.gamma10 = std::abs(lower.m + lower.f) < 1e-12 ? 0.0 : spin_flip_rate(temperature, rho, y, lower);
  return r;
}

double survival(double t, double gamma21) {
  if (t < 0.0) throw DomainError("time must be >= 0");
  require_positive_rate(gamma21, "gamma21");
  const double x = gamma21 * t;
  return (6.0 * std::exp(-0.5 * x) - std::exp(-3.0 * x)) / 5.0;
}

std::vector<CascadePopulations> solve_cascade_numeric(double gamma21, std::span<const double> times) {
  require_positive_rate(gamma21, "gamma21");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0 || (i > 0 && times[i] < times[i - 1])) {
      throw DomainError("sample times must be non-negative and sorted");
    }
  }
  std::vector<CascadePopulations> out;
  if (times.empty()) return out;

  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 3>;
  const double g21 = gamma21;
  const double g10 = kCascadeRatio * gamma21;
  auto rhs = [g21, g10](const State& p, State& dp, double /*t*/) {
    dp[0] = -g21 * (p[0] - p[1]);
    dp[1] = g21 * (p[0] - p[1]) - g10 * p[1];
    dp[2] = g10 * p[1];
  };

  State p{1.0, 0.0, 0.0};
  std::vector<double> grid;
  grid.reserve(times.size() + 1);
  if (times.front() > 0.0) grid.push_back(0.0);
  grid.insert(grid.end(), times.begin(), times.end());

  auto observer = [&out, skip = times.front() > 0.0](const State& s, double t) mutable {
    if (skip) {
      skip = false;
      return;
    }
    out.push_back({t, s[0], s[1], s[2]});
  };

  const double dt0 = 1e-3 / gamma21;
  try {
    auto stepper = odeint::make_dense_output(1e-13, 1e-13, odeint::runge_kutta_dopri5<State>());
    odeint::integrate_times(stepper, rhs, p, grid.begin(), grid.end(), dt0, observer);
  } catch (const std::exception& e) {
    throw ConvergenceError(std::string("cascade integration failed: ") + e.what(),
                           std::numeric_limits<double>::quiet_NaN());
  }
  return out;
}

double effective_lifetime(double gamma21) {
  require_positive_rate(gamma21, "gamma21");
  const double target = std::exp(-1.0);
  auto f = [gamma21, target](double t) { return survival(t, gamma21) - target; };
  // survival is strictly decreasing; P(0) = 1 and P(10/γ) ≈ 0.008.
  boost::math::tools::eps_tolerance<double> tol(50);
  const auto [lo, hi] = boost::math::tools::bisect(f, 0.0, 10.0 / gamma21, tol);
  return 0.5 * (lo + hi);
}

double simple_lifetime(double gamma21, double gamma10) {
  require_positive_rate(gamma21, "gamma21");
  require_positive_rate(gamma10, "gamma10");
  return 1.0 / gamma21 + 1.0 / gamma10;
}

double total_lifetime(double tau_mag, double tau_tech) {
  if (!(tau_mag > 0.0) || !(tau_tech > 0.0)) throw DomainError("lifetimes must be > 0");
  return 1.0 / (1.0 / tau_mag + 1.0 / tau_tech);
}

std::vector<LifetimePoint> lifetime_curve(const WireState& wire, const SlabGeometry& geom, const TrapSpec& trap,
                                          std::span<const double> heights, const LifetimeCurveOptions& opts) {
  trap.validate();
  if (!(opts.tau_tech > 0.0)) throw DomainError("tau_tech must be > 0");
  const double delta = opts.skin_correction ? skin_depth(wire.rho, trap.larmor_mhz()) : 0.0;

  std::vector<LifetimePoint> out;
  out.reserve(heights.size());
  for (double h : heights) {
    if (!(h > 0.0)) throw DomainError("trap heights must be > 0");
    const YTensor y = y_slab(geom, {trap.point.x, h});
    CascadeRates rates = cascade_rates(wire.temperature, wire.rho, y, trap.at_height(h));
    if (opts.skin_correction) {
      const double g = interp_factor(h, delta);
      rates.gamma21 *= g;
      rates.gamma10 *= g;
    }

    LifetimePoint pt;
    pt.height = h;
    pt.gamma21 = rates.gamma21;
    if (opts.model == LifetimeModel::complete) {
      if (std::abs(rates.gamma10 - kCascadeRatio * rates.gamma21) > 1e-9 * rates.gamma21) {
        throw DomainError("complete cascade model needs gamma10 = 1.5 gamma21 (|2,2> state, field along the wire)");
      }
      pt.tau_mag = effective_lifetime(rates.gamma21);
    } else {
      pt.tau_mag = simple_lifetime(rates.gamma21, rates.gamma10);
    }
    pt.tau_trap = total_lifetime(pt.tau_mag, opts.tau_tech);
    out.push_back(pt);
  }
  return out;
}

}  // namespace chipnoise
