#include "chipnoise_cli/figures.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "chipnoise/error.hpp"
#include "chipnoise/geometry.hpp"
#include "chipnoise/heating.hpp"
#include "chipnoise/lifetime.hpp"
#include "chipnoise/screening.hpp"
#include "chipnoise/units.hpp"

namespace chipnoise::cli {
namespace {

constexpr double kLowT = 4.2;

std::vector<double> temperature_grid() {
  std::vector<double> t{kLowT};
  for (int k = 5; k <= 300; ++k) t.push_back(k);
  return t;
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  const int n = static_cast<int>(std::lround(std::log10(hi / lo) * per_decade));
  std::vector<double> out;
  for (int i = 0; i <= n; ++i) out.push_back(lo * std::pow(10.0, static_cast<double>(i) / per_decade));
  return out;
}

std::vector<double> height_grid() {
  std::vector<double> h;
  for (int k = 1; k <= 100; ++k) h.push_back(k);
  return h;
}

Table curve_table(const std::vector<CurvePoint>& pts) {
  Table t({"T_K", "noise_norm", "rho_uOhm_cm"});
  for (const auto& p : pts) t.add_row({p.temperature, p.noise_norm, p.rho});
  return t;
}

// The trap of the copper-wire lifetime experiment.
TrapSpec reference_trap() {
  TrapSpec trap;
  trap.field = BiasFieldGauss{0.57};
  return trap;
}

const SlabGeometry& reference_wire() {
  static const SlabGeometry wire = SlabGeometry::make(10.0, 2.15);
  return wire;
}

Table lifetime_table(const std::vector<LifetimePoint>& pts) {
  Table t({"z_um", "gamma21_per_s", "tau_mag_s", "tau_trap_s"});
  for (const auto& p : pts) t.add_row({p.height, p.gamma21, p.tau_mag, p.tau_trap});
  return t;
}

Figure fig1(const MaterialDatabase& db) {
  Figure f{"fig1", "T (K)", "noise relative to Au at 300 K", false, false, {}};
  const auto grid = temperature_grid();
  Table peaks({"label", "T_peak_K"});
  for (const char* name : {"Cu", "Ag", "Au", "Nb"}) {
    const Conductor c = db.metal(name).with_rrr(100.0);
    f.curves.push_back({std::string("fig1_") + name, name, curve_table(noise_curve(c, grid)), 1, 2});
    const auto peak = peak_temperature(c);
    peaks.add_row({std::string(name), peak ? Cell(*peak) : Cell{}});
  }
  f.curves.push_back({"fig1_peaks", "", std::move(peaks), 1, 2});
  return f;
}

Figure fig2(const MaterialDatabase& db) {
  Figure f{"fig2", "rho / rho_Au(300 K)", "noise relative to Au at 300 K", true, true, {}};
  const std::vector<double> temps{300.0, 77.0, 20.0, kLowT};
  for (double t : temps) {
    Table tab({"label", "T_K", "rho_norm", "noise_norm", "better_than_gold"});
    for (const auto& p : screen_metals(db, t, 100.0)) {
      tab.add_row({p.label, p.temperature, p.rho_norm, p.noise_norm, p.better_than_gold ? 1.0 : 0.0});
    }
    f.curves.push_back({"fig2_T" + format_number(t), "T = " + format_number(t) + " K", std::move(tab), 3, 4});
  }
  // noise_norm · rho_norm = T/300 guides
  for (double t : temps) {
    Table guide({"rho_norm", "noise_norm"});
    for (double r : log_grid(1e-4, 1e2, 4)) guide.add_row({r, t / kRoomTemperature / r});
    f.curves.push_back({"fig2_guide_T" + format_number(t), "T/300 = " + format_number(t / kRoomTemperature),
                        std::move(guide), 1, 2});
  }
  return f;
}

Figure fig3(const MaterialDatabase& db) {
  Figure f{"fig3", "T (K)", "T/rho relative to Au at 300 K", false, false, {}};
  const auto grid = temperature_grid();
  f.curves.push_back({"fig3_Ag", "Ag", curve_table(noise_curve(db.metal("Ag").with_rrr(100.0), grid)), 1, 2});
  for (double x : {0.1, 0.25, 0.5, 1.0, 2.0, 5.0}) {
    const AlloySpec a = db.alloy("Ag", "Au", x);
    f.curves.push_back({"fig3_Ag_Au" + format_number(x), a.label(), curve_table(alloy_curve(a, x, grid)), 1, 2});
  }
  return f;
}

Figure fig4(const MaterialDatabase& db) {
  Figure f{"fig4", "rho / rho_Au(300 K)", "noise relative to Au at 300 K", true, true, {}};
  const std::vector<double> temps{300.0, 77.0, 20.0, kLowT};
  struct Family {
    const char* solvent;
    const char* solute;
    std::vector<double> xs;
  };
  const std::vector<Family> families{
      {"Ag", "Au", {0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 6.0, 10.0}},
      {"Cu", "Au", {0.1, 0.25, 0.5, 1.0, 2.0, 4.5, 10.0}},
      {"Cu", "Ge", {0.02, 0.05, 0.1, 0.2, 0.52, 1.0}},
  };
  Table boundary({"family", "T_K", "x_at_pct", "max_noise_reduction"});
  for (const auto& fam : families) {
    const std::string name = std::string(fam.solvent) + "-" + fam.solute;
    for (double t : temps) {
      Table tab({"x_at_pct", "T_K", "rho_norm", "noise_norm"});
      for (double x : fam.xs) {
        const double rho = resistivity(db.alloy(fam.solvent, fam.solute, x), t);
        tab.add_row({x, t, rho_norm(rho), noise_norm(t, rho)});
      }
      f.curves.push_back({"fig4_" + name + "_T" + format_number(t), name + " at " + format_number(t) + " K",
                          std::move(tab), 3, 4});
    }
    const AlloySpec family = db.alloy(fam.solvent, fam.solute, 0.0);
    for (double t : {77.0, kLowT}) {
      boundary.add_row({name, t, boundary_concentration(family, t, kGoldRoomResistivity), max_noise_reduction(t)});
    }
  }
  f.curves.push_back({"fig4_boundary", "", std::move(boundary), 1, 2});
  return f;
}

Figure fig5(const MaterialDatabase& db) {
  Figure f{"fig5", "height above the wire (um)", "trap lifetime (s)", false, true, {}};
  const auto heights = height_grid();
  const TrapSpec trap = reference_trap();
  f.curves.push_back({"fig5_Cu_400K", "Cu at 400 K",
                      lifetime_table(lifetime_curve({400.0, 2.64}, reference_wire(), trap, heights)), 1, 4});
  const AlloySpec family = db.alloy("Ag", "Au", 0.0);
  for (double t : {77.0, kLowT}) {
    const double x = boundary_concentration(family, t, kGoldRoomResistivity);
    f.curves.push_back({"fig5_AgAu_" + format_number(t) + "K",
                        family.with_concentration(x).label() + " at " + format_number(t) + " K",
                        lifetime_table(lifetime_curve({t, kGoldRoomResistivity}, reference_wire(), trap, heights)), 1,
                        4});
  }
  return f;
}

Figure fig6(const MaterialDatabase&) {
  Figure f{"fig6", "height above the wire (um)", "trap lifetime (s)", false, true, {}};
  const auto heights = height_grid();
  const TrapSpec trap = reference_trap();
  const WireState cu{400.0, 2.64};
  LifetimeCurveOptions complete;
  LifetimeCurveOptions simple;
  simple.model = LifetimeModel::simple;
  const auto c = lifetime_curve(cu, reference_wire(), trap, heights, complete);
  const auto s = lifetime_curve(cu, reference_wire(), trap, heights, simple);
  // Interpolated geometry of a laterally infinite film of the same thickness.
  const auto film = SlabGeometry::make(1e6, reference_wire().thickness);
  const auto l = lifetime_curve(cu, film, trap, heights, simple);
  f.curves.push_back({"fig6_complete", "complete", lifetime_table(c), 1, 4});
  f.curves.push_back({"fig6_simple", "one-directional", lifetime_table(s), 1, 4});
  f.curves.push_back({"fig6_film", "infinite film", lifetime_table(l), 1, 4});
  Table ratio({"z_um", "complete_over_simple"});
  for (std::size_t i = 0; i < c.size(); ++i) ratio.add_row({c[i].height, c[i].tau_mag / s[i].tau_mag});
  f.curves.push_back({"fig6_ratio", "", std::move(ratio), 1, 2});
  return f;
}

Figure fig9(const MaterialDatabase& db) {
  Figure f{"fig9", "initial temperature T0 (K)", "temperature rise (K)", false, false, {}};
  const MaterialRecord gold = db.metal("Au").with_rrr(100.0);
  std::vector<double> t0{kLowT};
  for (int k = 10; k <= 300; k += 10) t0.push_back(k);
  for (double j : {3e6, 5e6, 1e7}) {
    Table tab({"T0_K", "rho_uOhm_cm", "fast_K", "slow_K", "total_K"});
    for (double t : t0) {
      HeatingConfig cfg;
      cfg.current_density = j;
      cfg.base_temperature = t;
      cfg.rho = resistivity(gold, t);
      tab.add_row({t, cfg.rho, fast_rise(cfg), slow_rise(cfg).delta_t, total_rise(cfg)});
    }
    f.curves.push_back({"fig9_j" + format_number(j), "j = " + format_number(j) + " A/cm2", std::move(tab), 1, 5});
  }
  return f;
}

Figure reduction(const MaterialDatabase& db) {
  Figure f{"reduction", "distance (um)", "noise relative to Au at 300 K", true, true, {}};
  constexpr double kFrequency = 0.79;  // MHz
  const WireState cu = wire_state(db.metal("Cu").with_rrr(100.0), kLowT);
  const WireState alloy{kLowT, kGoldRoomResistivity};
  const auto distances = log_grid(1.0, 1000.0, 20);
  for (const auto& [name, title, w] : {std::tuple{"reduction_Cu", "Cu at 4.2 K", cu},
                                      std::tuple{"reduction_AgAu", "Ag-Au at 4.2 K", alloy}}) {
    Table tab({"d_um", "noise_norm_per_um", "interp_factor", "skin_depth_um"});
    const double delta = skin_depth(w.rho, kFrequency);
    for (double d : distances) {
      const double g = interp_factor(d, delta);
      tab.add_row({d, noise_norm(w.temperature, w.rho) * g / d, g, delta});
    }
    f.curves.push_back({name, title, std::move(tab), 1, 2});
  }
  Table cross({"d_star_um"});
  const auto d = crossover_distance(cu, alloy, kFrequency, 1.0, 1000.0);
  cross.add_row({d ? Cell(*d) : Cell{}});
  f.curves.push_back({"reduction_crossover", "", std::move(cross), 1, 1});
  return f;
}

std::string quoted(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("''") : std::string(1, c);
  return out + "'";
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig9", "reduction"};
  return ids;
}

Figure build_figure(std::string_view id, const MaterialDatabase& db) {
  if (id == "fig1") return fig1(db);
  if (id == "fig2") return fig2(db);
  if (id == "fig3") return fig3(db);
  if (id == "fig4") return fig4(db);
  if (id == "fig5") return fig5(db);
  if (id == "fig6") return fig6(db);
  if (id == "fig9" || id == "fig7") return fig9(db);
  if (id == "reduction") return reduction(db);
  std::string known;
  for (const auto& k : figure_ids()) known += (known.empty() ? "" : ", ") + k;
  throw std::invalid_argument("unknown figure '" + std::string(id) + "'; known: " + known);
}

std::vector<std::filesystem::path> write_figure(const Figure& fig, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

  std::vector<std::filesystem::path> written;
  for (const auto& c : fig.curves) {
    const auto path = dir / (c.name + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    c.table.write_csv(out);
    if (!out) throw IoError("write failed for '" + path.string() + "'");
    written.push_back(path);
  }

  const auto script = dir / (fig.id + ".gp");
  std::ofstream gp(script, std::ios::binary);
  if (!gp) throw IoError("cannot write '" + script.string() + "'");
  gp << "set datafile separator ','\n";
  gp << "set xlabel " << quoted(fig.x_label) << "\n";
  gp << "set ylabel " << quoted(fig.y_label) << "\n";
  if (fig.log_x) gp << "set logscale x\n";
  if (fig.log_y) gp << "set logscale y\n";
  gp << "set key outside right\n";
  std::string plot;
  for (const auto& c : fig.curves) {
    if (c.title.empty()) continue;
    plot += plot.empty() ? "plot " : ", \\\n     ";
    plot += quoted(c.name + ".csv") + " skip 1 using " + std::to_string(c.x_column) + ":" +
            std::to_string(c.y_column) + " with linespoints title " + quoted(c.title);
  }
  gp << plot << "\n";
  if (!gp) throw IoError("write failed for '" + script.string() + "'");
  written.push_back(script);
  return written;
}

}  // namespace chipnoise::cli
