#include "chipnoise_cli/app.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chipnoise/error.hpp"
#include "chipnoise/geometry.hpp"
#include "chipnoise/heating.hpp"
#include "chipnoise/lifetime.hpp"
#include "chipnoise/material_db.hpp"
#include "chipnoise/noise.hpp"
#include "chipnoise/screening.hpp"
#include "chipnoise/units.hpp"
#include "chipnoise_cli/figures.hpp"
#include "chipnoise_cli/parse.hpp"
#include "chipnoise_cli/table.hpp"

namespace chipnoise::cli {
namespace {

struct Globals {
  std::string db_path;
  std::string format = "csv";
  std::string out_path;
  std::string overlay_path;
};

// --metal NAME | --alloy S:U:x, optionally with --rrr.
struct ConductorArgs {
  std::string metal;
  std::string alloy;
  std::optional<double> rrr;

  void add_to(CLI::App& cmd) {
    auto* m = cmd.add_option("--metal", metal, "pure metal from the database");
    auto* a = cmd.add_option("--alloy", alloy, "dilute alloy SOLVENT:SOLUTE:x (x in at.%)");
    m->excludes(a);
    cmd.add_option("--rrr", rrr, "residual-resistance ratio for --metal (default: database value)");
  }

  bool given() const { return !metal.empty() || !alloy.empty(); }
};

Conductor resolve(const ConductorArgs& args, const MaterialDatabase& db, std::ostream& err) {
  if (!args.metal.empty()) {
    const MaterialRecord& rec = db.metal(args.metal);
    return args.rrr ? rec.with_rrr(*args.rrr) : rec;
  }
  if (!args.alloy.empty()) {
    const AlloyArg a = parse_alloy(args.alloy);
    AlloySpec spec = db.alloy(a.solvent, a.solute, a.concentration);
    if (spec.exceeds_linearity_limit()) {
      err << "warning: " << spec.label() << " is above " << AlloySpec::kLinearityLimit
          << " at.%; the linear residual-resistivity law is unreliable there\n";
    }
    return spec;
  }
  throw CLI::ValidationError("one of --metal or --alloy is required");
}

// Resistivity at T from --rho when given, else from the conductor.
WireState resolve_wire(const ConductorArgs& args, std::optional<double> rho, double temperature,
                       const MaterialDatabase& db, std::ostream& err) {
  if (rho) {
    if (args.given()) resolve(args, db, err);  // still validate the name
    return {temperature, *rho};
  }
  if (!args.given()) throw CLI::ValidationError("give --metal, --alloy or --rho");
  return wire_state(resolve(args, db, err), temperature);
}

// "Cu@4.2" or "Ag:Au:6@4.2K"
std::pair<Conductor, double> parse_side(const std::string& text, const MaterialDatabase& db, std::ostream& err) {
  const auto at = text.rfind('@');
  if (at == std::string::npos) throw CLI::ValidationError("expected MATERIAL@T, got '" + text + "'");
  ConductorArgs args;
  const std::string name = text.substr(0, at);
  (name.find(':') == std::string::npos ? args.metal : args.alloy) = name;
  return {resolve(args, db, err), parse_temperature(text.substr(at + 1))};
}

template <typename Fn>
auto checked(Fn&& fn, std::string_view text) {
  try {
    return fn(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
}

std::vector<double> list_of(const std::string& text, double (*item)(std::string_view)) {
  return checked([item](std::string_view t) { return parse_list(t, item); }, text);
}

double one_of(const std::string& text, double (*item)(std::string_view)) {
  return checked(item, text);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal magnetic noise, trap lifetimes, wire heating and material screening for atom chips",
               "chipnoise"};
  app.set_config("--config", "", "read options from a TOML/INI file");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--db", g.db_path, "material database JSON (default: $CHIPNOISE_DB, then bundled)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out_path, "write the table to this file instead of stdout");
  app.add_option("--overlay", g.overlay_path, "CSV whose columns are passed through next to the output");

  // resistivity
  auto* res = app.add_subcommand("resistivity", "rho(T) of a metal or alloy");
  ConductorArgs res_c;
  std::string res_t;
  res_c.add_to(*res);
  res->add_option("-T,--T", res_t, "temperature(s): 77, 4.2K, 4.2:300:1 or 4.2,77,300")->required();

  // noise
  auto* noise = app.add_subcommand("noise", "geometry tensor and noise spectral density above a slab wire");
  ConductorArgs noise_c;
  std::string noise_t, noise_wire = "10x2.15", noise_x = "0", noise_h;
  std::optional<double> noise_rho;
  noise_c.add_to(*noise);
  noise->add_option("-T,--T", noise_t, "wire temperature")->required();
  noise->add_option("--rho", noise_rho, "resistivity override, uOhm cm");
  noise->add_option("--wire", noise_wire, "WIDTHxTHICKNESS in um")->capture_default_str();
  noise->add_option("--x", noise_x, "lateral offset of the trap, um")->capture_default_str();
  noise->add_option("--heights", noise_h, "heights above the wire, um (list or range)")->required();

  // lifetime
  auto* life = app.add_subcommand("lifetime", "spin-flip trap lifetime versus height");
  ConductorArgs life_c;
  std::string life_t, life_wire = "10x2.15", life_x = "0", life_h, life_field = "1G", life_tech = "2.5",
                      life_model = "complete";
  std::optional<double> life_rho;
  double life_f = 2.0, life_m = 2.0, life_gf = 0.5;
  bool life_skin = false;
  life_c.add_to(*life);
  life->add_option("-T,--T", life_t, "wire temperature")->required();
  life->add_option("--rho", life_rho, "resistivity override, uOhm cm");
  life->add_option("--wire", life_wire, "WIDTHxTHICKNESS in um")->capture_default_str();
  life->add_option("--x", life_x, "lateral offset of the trap, um")->capture_default_str();
  life->add_option("--heights", life_h, "heights above the wire, um (list or range)")->required();
  life->add_option("--field", life_field, "bias field (0.57G) or Larmor frequency (0.79MHz)")->capture_default_str();
  life->add_option("--tau-tech", life_tech, "technical lifetime limit, s (inf to disable)")->capture_default_str();
  life->add_option("--model", life_model, "cascade model")
      ->check(CLI::IsMember({"complete", "simple"}))
      ->capture_default_str();
  life->add_flag("--skin-correction", life_skin, "multiply the noise by the short-skin-depth interpolation factor");
  life->add_option("--F", life_f, "hyperfine level F")->capture_default_str();
  life->add_option("--m", life_m, "magnetic sublevel m")->capture_default_str();
  life->add_option("--gF", life_gf, "Lande factor g_F")->capture_default_str();

  // heating
  auto* heat = app.add_subcommand("heating", "ohmic temperature rise of a wire on a substrate");
  HeatingConfig hc;
  std::string heat_j = "1e7", heat_t = "30", heat_w = "5", heat_h = "1.4";
  std::optional<double> heat_target;
  heat->add_option("--j", heat_j, "current density(ies), A/cm^2")->capture_default_str();
  heat->add_option("--t", heat_t, "heating time")->capture_default_str();
  heat->add_option("--width", heat_w, "wire width, um")->capture_default_str();
  heat->add_option("--thickness", heat_h, "wire thickness, um")->capture_default_str();
  heat->add_option("--rho", hc.rho, "resistivity, uOhm cm")->capture_default_str();
  heat->add_option("--k", hc.contact_conductance, "contact conductance, W/(m^2 K)")->capture_default_str();
  heat->add_option("--lambda", hc.substrate_conductivity, "substrate conductivity, W/(m K)")->capture_default_str();
  heat->add_option("--C", hc.substrate_heat_capacity, "substrate heat capacity, J/(m^3 K)")->capture_default_str();
  heat->add_option("--T0", hc.base_temperature, "substrate temperature, K")->capture_default_str();
  heat->add_option("--calibrate-to", heat_target, "report the contact conductance giving this total rise, K");

  // screen
  auto* screen = app.add_subcommand("screen", "normalized noise and resistivity of every database metal");
  std::string screen_t;
  double screen_rrr = 100.0;
  screen->add_option("-T,--T", screen_t, "temperature(s)")->required();
  screen->add_option("--rrr", screen_rrr, "uniform residual-resistance ratio")->capture_default_str();

  // boundary
  auto* bound = app.add_subcommand("boundary", "solute concentration at which an alloy matches a target rho");
  std::string bound_t = "4.2";
  double bound_target = kGoldRoomResistivity;
  bound->add_option("-T,--T", bound_t, "temperature(s)")->capture_default_str();
  bound->add_option("--target", bound_target, "target resistivity, uOhm cm")->capture_default_str();

  // peak
  auto* peak = app.add_subcommand("peak", "temperature of the T/rho maximum on [4.2, 300] K");
  ConductorArgs peak_c;
  peak_c.add_to(*peak);

  // crossover
  auto* cross = app.add_subcommand("crossover", "distance where the half-space noise of two wires crosses");
  std::string cross_a, cross_b, cross_f = "0.79MHz", cross_range = "0.1:1000";
  std::optional<double> cross_rho_a, cross_rho_b;
  cross->add_option("--a", cross_a, "first wire, MATERIAL@T (e.g. Cu@4.2)")->required();
  cross->add_option("--b", cross_b, "second wire, e.g. Ag:Au:6@4.2")->required();
  cross->add_option("--rho-a", cross_rho_a, "resistivity override for --a, uOhm cm");
  cross->add_option("--rho-b", cross_rho_b, "resistivity override for --b, uOhm cm");
  cross->add_option("--f", cross_f, "transition frequency")->capture_default_str();
  cross->add_option("--range", cross_range, "distance range LO:HI, um")->capture_default_str();

  // figure
  auto* fig = app.add_subcommand("figure", "write the data and a gnuplot script for one figure");
  std::string fig_id, fig_dir = "figures";
  fig->add_option("id", fig_id, "fig1|fig2|fig3|fig4|fig5|fig6|fig9|reduction")
      ->required()
      ->check(CLI::IsMember(figure_ids()));
  fig->add_option("--outdir", fig_dir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    err << e.what() << "\n";
    return kIo;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    const MaterialDatabase db =
        g.db_path.empty() ? MaterialDatabase::from_environment() : MaterialDatabase::load_file(g.db_path);
    const Format format = g.format == "json" ? Format::json : Format::csv;
    std::optional<Table> table;

    if (*res) {
      const Conductor c = resolve(res_c, db, err);
      Table t({"T_K", "rho_uOhm_cm", "rho0_uOhm_cm", "rho_ph_uOhm_cm"});
      const double rho0 = residual_resistivity(c);
      for (double temp : list_of(res_t, parse_temperature)) {
        const double rho = resistivity(c, temp);
        t.add_row({temp, rho, rho0, rho - rho0});
      }
      table = std::move(t);
    } else if (*noise) {
      const double temp = one_of(noise_t, parse_temperature);
      const WireState w = resolve_wire(noise_c, noise_rho, temp, db, err);
      const SlabGeometry geom = checked(parse_wire, noise_wire);
      const double x = one_of(noise_x, parse_length_um);
      Table t({"z_um", "Y11_per_um", "Y22_per_um", "Y33_per_um", "Y31_per_um", "S11_T2_per_Hz", "S22_T2_per_Hz",
               "S33_T2_per_Hz", "S31_T2_per_Hz", "noise_norm"});
      for (double z : list_of(noise_h, parse_length_um)) {
        const YTensor y = y_slab(geom, {x, z});
        const NoiseTensor s = spectral_density(w.temperature, w.rho, y);
        t.add_row({z, y(0, 0), y(1, 1), y(2, 2), y(2, 0), s(0, 0), s(1, 1), s(2, 2), s(2, 0),
                   noise_norm(w.temperature, w.rho)});
      }
      table = std::move(t);
    } else if (*life) {
      const double temp = one_of(life_t, parse_temperature);
      const WireState w = resolve_wire(life_c, life_rho, temp, db, err);
      TrapSpec trap;
      trap.point.x = one_of(life_x, parse_length_um);
      trap.field = checked(parse_field, life_field);
      trap.f = life_f;
      trap.m = life_m;
      trap.g_f = life_gf;
      LifetimeCurveOptions opts;
      opts.tau_tech = one_of(life_tech, parse_time_s);
      opts.model = life_model == "simple" ? LifetimeModel::simple : LifetimeModel::complete;
      opts.skin_correction = life_skin;
      const auto heights = list_of(life_h, parse_length_um);
      Table t({"z_um", "gamma21_per_s", "tau_mag_s", "tau_trap_s"});
      for (const auto& p : lifetime_curve(w, checked(parse_wire, life_wire), trap, heights, opts)) {
        t.add_row({p.height, p.gamma21, p.tau_mag, p.tau_trap});
      }
      table = std::move(t);
    } else if (*heat) {
      hc.duration = one_of(heat_t, parse_time_s);
      hc.width = one_of(heat_w, parse_length_um);
      hc.height = one_of(heat_h, parse_length_um);
      if (heat_target) {
        Table t({"target_K", "k_W_per_m2K"});
        t.add_row({*heat_target, calibrate_contact_conductance(hc, *heat_target)});
        table = std::move(t);
      } else {
        Table t({"j_A_per_cm2", "fast_K", "slow_K", "total_K", "final_T_K"});
        for (double j : list_of(heat_j, parse_number)) {
          HeatingConfig c = hc;
          c.current_density = j;
          const double fast = fast_rise(c);
          const SlowRise slow = slow_rise(c);
          if (slow.pre_diffusive) err << "warning: j=" << format_number(j) << ": slow rise not yet diffusive\n";
          t.add_row({j, fast, slow.delta_t, fast + slow.delta_t, c.base_temperature + fast + slow.delta_t});
        }
        table = std::move(t);
      }
    } else if (*screen) {
      Table t({"label", "T_K", "noise_norm", "rho_norm", "better_than_gold"});
      for (double temp : list_of(screen_t, parse_temperature)) {
        for (const auto& p : screen_metals(db, temp, screen_rrr)) {
          t.add_row({p.label, p.temperature, p.noise_norm, p.rho_norm, p.better_than_gold ? 1.0 : 0.0});
        }
      }
      table = std::move(t);
    } else if (*bound) {
      Table t({"family", "T_K", "rho_target_uOhm_cm", "x_at_pct", "max_noise_reduction"});
      for (double temp : list_of(bound_t, parse_temperature)) {
        for (const auto& a : db.alloys()) {
          const AlloySpec family = db.alloy(a.solvent, a.solute, 0.0);
          t.add_row({a.solvent + "-" + a.solute, temp, bound_target,
                     boundary_concentration(family, temp, bound_target),
                     1.0 / noise_norm(temp, bound_target)});
        }
      }
      table = std::move(t);
    } else if (*peak) {
      const Conductor c = resolve(peak_c, db, err);
      const auto tp = peak_temperature(c);
      Table t({"label", "T_peak_K"});
      t.add_row({label(c), tp ? Cell(*tp) : Cell{}});
      table = std::move(t);
    } else if (*cross) {
      const auto [ca, ta] = parse_side(cross_a, db, err);
      const auto [cb, tb] = parse_side(cross_b, db, err);
      const WireState wa{ta, cross_rho_a ? *cross_rho_a : resistivity(ca, ta)};
      const WireState wb{tb, cross_rho_b ? *cross_rho_b : resistivity(cb, tb)};
      const double f = one_of(cross_f, parse_frequency_mhz);
      const auto colon = cross_range.find(':');
      if (colon == std::string::npos) throw CLI::ValidationError("--range expects LO:HI");
      const double lo = one_of(cross_range.substr(0, colon), parse_length_um);
      const double hi = one_of(cross_range.substr(colon + 1), parse_length_um);
      const auto d = crossover_distance(wa, wb, f, lo, hi);
      Table t({"label_a", "T_a_K", "rho_a_uOhm_cm", "delta_a_um", "label_b", "T_b_K", "rho_b_uOhm_cm",
               "delta_b_um", "d_star_um"});
      t.add_row({label(ca), ta, wa.rho, skin_depth(wa.rho, f), label(cb), tb, wb.rho, skin_depth(wb.rho, f),
                 d ? Cell(*d) : Cell{}});
      table = std::move(t);
    } else if (*fig) {
      const Figure figure = build_figure(fig_id, db);
      Table t({"file"});
      for (const auto& p : write_figure(figure, fig_dir)) t.add_row({p.generic_string()});
      table = std::move(t);
    }

    if (!table) return kUsage;
    if (!g.overlay_path.empty()) table->append_columns(read_csv(g.overlay_path), "overlay_");
    if (g.out_path.empty()) {
      table->write(out, format);
    } else {
      std::ofstream file(g.out_path, std::ios::binary);
      if (!file) throw IoError("cannot write '" + g.out_path + "'");
      table->write(file, format);
      if (!file) throw IoError("write failed for '" + g.out_path + "'");
    }
    return kSuccess;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownNameError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
}

}  // namespace chipnoise::cli
