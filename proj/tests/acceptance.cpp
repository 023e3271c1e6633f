// Acceptance suite: one PASS/FAIL line per criterion.
//
//   chipnoise_acceptance                 run all criteria
//   chipnoise_acceptance --criterion N   run criterion N only

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "chipnoise/geometry.hpp"
#include "chipnoise/heating.hpp"
#include "chipnoise/lifetime.hpp"
#include "chipnoise/material_db.hpp"
#include "chipnoise/noise.hpp"
#include "chipnoise/screening.hpp"

using namespace chipnoise;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
};

void Outcome::check(bool ok, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  if (!detail.empty()) detail += "; ";
  detail += buf;
  if (!ok) {
    detail += " [x]";
    pass = false;
  }
}

bool within_rel(double value, double expected, double tol) {
  return std::abs(value - expected) <= tol * std::abs(expected);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const MaterialDatabase& db() { return MaterialDatabase::bundled(); }

TrapSpec reference_trap() {
  TrapSpec t;
  t.field = BiasFieldGauss{0.57};
  return t;
}

Outcome skin_depths() {
  Outcome o;
  const double cases[][2] = {{1.7, 74.0}, {0.2, 25.3}, {0.017, 7.4}, {2.21, 84.0}};
  for (const auto& c : cases) {
    const double d = skin_depth(c[0], 0.79);
    o.check(within_rel(d, c[1], 0.01), "rho=%g -> %.4g um (want %g)", c[0], d, c[1]);
  }
  double best = std::numeric_limits<double>::infinity();
  volatile double sink = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : cases) sink = sink + skin_depth(c[0], 0.79);
    best = std::min(best, seconds_since(start));
  }
  o.check(best < 1e-3, "runtime %.2g s", best);
  return o;
}

Outcome rate_prefactor() {
  Outcome o;
  const double g = gold_standard_rate();
  o.check(g >= 55.0 && g <= 60.0, "Gamma_Au,300K = %.5g 1/s", g);
  return o;
}

Outcome cascade() {
  Outcome o;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double g : {1e-3, 0.1, 1.0, 20.0, 1e3}) {
    const double c = effective_lifetime(g) * g;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  o.check(lo >= 2.363 && hi <= 2.365, "tau*gamma21 in [%.6f, %.6f]", lo, hi);

  std::vector<double> times;
  for (int i = 0; i <= 400; ++i) times.push_back(0.05 * i);
  double worst = 0.0;
  for (const auto& p : solve_cascade_numeric(0.8, times)) {
    worst = std::max(worst, std::abs(p.p22 + p.p21 - survival(p.t, 0.8)));
  }
  o.check(worst <= 1e-6, "ODE vs closed form max |dP| = %.2g", worst);

  std::vector<double> heights;
  for (int h = 1; h <= 100; ++h) heights.push_back(h);
  LifetimeCurveOptions simple;
  simple.model = LifetimeModel::simple;
  const auto geom = SlabGeometry::make(10.0, 2.15);
  const auto c = lifetime_curve({400.0, 2.64}, geom, reference_trap(), heights);
  const auto s = lifetime_curve({400.0, 2.64}, geom, reference_trap(), heights, simple);
  double rmin = std::numeric_limits<double>::infinity();
  double rmax = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    rmin = std::min(rmin, c[i].tau_mag / s[i].tau_mag);
    rmax = std::max(rmax, c[i].tau_mag / s[i].tau_mag);
  }
  o.check(std::abs(rmin - 1.4184) <= 1e-3 && std::abs(rmax - 1.4184) <= 1e-3,
          "complete/simple in [%.6f, %.6f]", rmin, rmax);
  return o;
}

Outcome geometry_tensor() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> w(0.5, 20.0), t(0.2, 5.0), u(-1.0, 1.0), z(0.2, 10.0);
  double worst = 0.0;
  const int configs = 10;
  for (int i = 0; i < configs; ++i) {
    const auto g = SlabGeometry::make(w(rng), t(rng));
    const TrapPoint p{u(rng) * g.width, z(rng)};
    const std::vector<Box> boxes{slab_box(g)};
    const auto num = y_numeric(boxes, {p.x, 0.0, p.z}).tensor;
    const YTensor ref = y_slab(g, p);
    for (std::size_t k = 0; k < 3; ++k) worst = std::max(worst, std::abs(num(k, k) / ref(k, k) - 1.0));
    worst = std::max(worst, std::abs(num(2, 0) - ref(2, 0)) / ref.trace());
  }
  o.check(worst <= 5e-3, "numeric vs closed form on %d slabs: max rel dev %.2g", configs, worst);

  for (double size : {100.0, 1000.0}) {
    const YTensor y = y_slab(SlabGeometry::make(size, size), {0.0, 1.0});
    const double e11 = y(0, 0) / (3.0 * kPi / 8.0) - 1.0;
    const double e33 = y(2, 2) / (kPi / 4.0) - 1.0;
    o.check(std::abs(e11) <= 0.01 && std::abs(e33) <= 0.01, "half-space w=t=%gd: Y11 %+.3f%%, Y33 %+.3f%%", size,
            100.0 * e11, 100.0 * e33);
  }

  double trace_dev = 0.0;
  double y31_at_centre = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto g = SlabGeometry::make(w(rng), t(rng));
    const YTensor y = y_slab(g, {u(rng) * g.width, z(rng)});
    trace_dev = std::max(trace_dev, std::abs(y(1, 1) / (0.375 * y.trace()) - 1.0));
    y31_at_centre = std::max(y31_at_centre, std::abs(y_slab(g, {0.0, z(rng)})(2, 0)));
  }
  o.check(trace_dev <= 1e-12, "Y22=(3/8)tr max rel dev %.2g", trace_dev);
  o.check(y31_at_centre == 0.0, "max |Y31(x=0)| = %.2g", y31_at_centre);

  const double elapsed = seconds_since(start);
  o.check(elapsed < 60.0, "runtime %.3g s", elapsed);
  return o;
}

Outcome boundary_concentrations() {
  Outcome o;
  const struct {
    const char* solvent;
    const char* solute;
    double expected;
  } cases[] = {{"Ag", "Au", 6.0}, {"Cu", "Au", 4.5}, {"Cu", "Ge", 0.52}};
  for (const auto& c : cases) {
    const auto family = db().alloy(c.solvent, c.solute, 0.0);
    const double x = boundary_concentration(family, 4.2, 2.21);
    const double back = resistivity(family.with_concentration(x), 4.2);
    o.check(within_rel(back, 2.21, 1e-9) && within_rel(x, c.expected, 1e-3), "%s-%s x*=%.6g%% (rho round trip %.2g)",
            c.solvent, c.solute, x, back / 2.21 - 1.0);
  }
  return o;
}

Outcome noise_reduction() {
  Outcome o;
  const double r77 = max_noise_reduction(77.0);
  const double r4 = max_noise_reduction(4.2);
  o.check(std::abs(r77 - 3.90) < 0.005, "300/77 = %.4f", r77);
  o.check(std::abs(r4 - 71.4) < 0.05, "300/4.2 = %.4f", r4);
  return o;
}

Outcome fig1() {
  Outcome o;
  for (const char* name : {"Cu", "Ag", "Au"}) {
    const auto tp = peak_temperature(db().metal(name).with_rrr(100.0));
    o.check(tp && *tp >= 15.0 && *tp <= 60.0, "%s peak %.4g K", name, tp ? *tp : std::nan(""));
  }
  std::vector<double> grid{4.2};
  for (int k = 5; k <= 300; ++k) grid.push_back(k);
  const auto family = db().alloy("Ag", "Au", 0.0);
  for (double x : {2.0, 5.0, 6.0, 10.0}) {
    const auto c = alloy_curve(family, x, grid);
    bool monotone = true;
    for (std::size_t i = 1; i < c.size(); ++i) monotone = monotone && c[i].noise_norm > c[i - 1].noise_norm;
    o.check(monotone, "Ag+%g%%Au %s", x, monotone ? "monotone" : "not monotone");
  }
  return o;
}

Outcome fig2() {
  Outcome o;
  auto find = [](const std::vector<ScreenPoint>& pts, const char* name) {
    for (const auto& p : pts) {
      if (p.label == name) return p;
    }
    return ScreenPoint{};
  };
  const auto at77 = screen_metals(db(), 77.0, 100.0);
  for (const char* name : {"Mo", "Zn", "Pt"}) {
    const auto p = find(at77, name);
    o.check(p.better_than_gold, "%s@77K (%.3g, %.3g)", name, p.noise_norm, p.rho_norm);
  }
  const auto at20 = screen_metals(db(), 20.0, 100.0);
  for (const char* name : {"Zr", "Ti"}) {
    const auto p = find(at20, name);
    o.check(p.better_than_gold, "%s@20K (%.3g, %.3g)", name, p.noise_norm, p.rho_norm);
  }
  const auto ti = find(at20, "Ti");
  o.check(within_rel(ti.noise_norm, 0.33, 0.3) && within_rel(ti.rho_norm, 0.25, 0.3), "Ti@20K noise %.3g rho %.3g",
          ti.noise_norm, ti.rho_norm);
  return o;
}

Outcome fig4() {
  Outcome o;
  const double alloy = noise_norm(77.0, resistivity(db().alloy("Ag", "Au", 5.0), 77.0));
  const double silver = noise_norm(300.0, resistivity(db().metal("Ag"), 300.0));
  const double vs_silver = silver / alloy;
  const double vs_gold = 1.0 / alloy;
  o.check(within_rel(vs_silver, 5.0, 0.25), "factor vs Ag@300K %.3g", vs_silver);
  o.check(vs_gold >= 2.5, "factor vs gold %.3g", vs_gold);
  return o;
}

Outcome crossover() {
  Outcome o;
  const WireState cu = wire_state(db().metal("Cu").with_rrr(100.0), 4.2);
  const WireState alloy = wire_state(db().alloy("Ag", "Au", 6.0), 4.2);
  const auto d = crossover_distance(cu, alloy, 0.79);
  o.check(d && *d >= 40.0 && *d <= 50.0, "d* = %.4g um", d ? *d : std::nan(""));
  return o;
}

Outcome heating() {
  Outcome o;
  HeatingConfig a;
  HeatingConfig b = a;
  b.current_density = 2.0 * a.current_density;
  const double q = total_rise(b) / total_rise(a);
  o.check(std::abs(q - 4.0) <= 4e-12, "dT(2j)/dT(j) = %.15g", q);
  a.current_density = 1e7;
  a.duration = 30.0;
  const double big = total_rise(a);
  o.check(big >= 40.0 && big <= 60.0, "dT(1e7 A/cm2, 30 s) = %.4g K", big);
  a.current_density = 1e6;
  const double small = total_rise(a);
  o.check(small >= 0.4 && small <= 0.6, "dT(1e6 A/cm2, 30 s) = %.4g K", small);
  return o;
}

Outcome lifetime_scaling() {
  Outcome o;
  const auto geom = SlabGeometry::make(10.0, 2.15);
  const std::vector<double> heights{1.0, 10.0, 50.0};
  LifetimeCurveOptions no_tech;
  no_tech.tau_tech = std::numeric_limits<double>::infinity();
  const auto alloy = lifetime_curve({4.2, 2.21}, geom, reference_trap(), heights, no_tech);
  const auto cu = lifetime_curve({400.0, 2.64}, geom, reference_trap(), heights, no_tech);
  double worst = 0.0;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    worst = std::max(worst, std::abs(alloy[i].tau_mag / cu[i].tau_mag / 79.7 - 1.0));
  }
  o.check(worst <= 0.01, "tau ratio %.4g", alloy[0].tau_mag / cu[0].tau_mag);

  const std::vector<double> one{1.0};
  const WireState w = wire_state(db().alloy("Ag", "Au", 6.0), 4.2);
  const auto p = lifetime_curve(w, geom, reference_trap(), one)[0];
  o.check(within_rel(p.tau_trap, 2.5, 0.2), "tau_trap(1 um) = %.4g s vs tau_tech 2.5 s (%.1f%%)", p.tau_trap,
          100.0 * (p.tau_trap / 2.5 - 1.0));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "skin depths", skin_depths},
      {2, "rate prefactor", rate_prefactor},
      {3, "cascade", cascade},
      {4, "geometry tensor", geometry_tensor},
      {5, "boundary concentrations", boundary_concentrations},
      {6, "max noise reduction", noise_reduction},
      {7, "noise peaks and alloy monotonicity", fig1},
      {8, "screening winners", fig2},
      {9, "Ag+5%Au at 77 K", fig4},
      {10, "crossover distance", crossover},
      {11, "heating", heating},
      {12, "lifetime scaling", lifetime_scaling},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }

  int failed = 0;
  int ran = 0;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    if (!o.pass) ++failed;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
