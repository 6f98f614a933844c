// Command-line front end: analytic outage, solved transmit power, energy per
// bit, Monte Carlo estimates, and CSV parameter sweeps for relayed powerline
// links. Results go to stdout (or --out for sweep CSV); diagnostics go to
// stderr. Exit codes: 0 success, 2 validation error, 3 solver failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plc/config.hpp"
#include "plc/errors.hpp"
#include "plc/presets.hpp"
#include "plc/sweep.hpp"
#include "plc/version.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string preset;
  std::vector<std::string> overrides;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

plc::ScenarioConfig build_config(const CommonArgs& args) {
  plc::ScenarioConfig cfg = plc::default_config();
  if (!args.preset.empty()) plc::apply_preset(cfg, args.preset);
  if (!args.config_path.empty()) plc::load_config_file(cfg, args.config_path);
  for (const std::string& assignment : args.overrides) plc::apply_override(cfg, assignment);
  cfg.validate();
  return cfg;
}

plc::Topology scheme_topology(const plc::SchemeId& scheme, const plc::ScenarioConfig& cfg) {
  switch (scheme.kind) {
    case plc::SchemeId::Kind::kSingleHop:
      return plc::Topology::single(cfg.distance_m, cfg.fading);
    case plc::SchemeId::Kind::kMultiHop:
      return plc::Topology::equal_spacing(cfg.distance_m,
                                          static_cast<std::size_t>(scheme.hops), cfg.fading);
    case plc::SchemeId::Kind::kIdf:
      return plc::Topology::idf_midpoint(cfg.distance_m, cfg.fading);
  }
  throw plc::ValidationError("unknown scheme kind");
}

plc::OutageBreakdown scheme_outage(const plc::SchemeId& scheme, double power_w,
                                   const plc::Topology& topo, const plc::ScenarioConfig& cfg) {
  const double se = cfg.modem.spectral_efficiency;
  switch (scheme.kind) {
    case plc::SchemeId::Kind::kSingleHop:
      return plc::single_hop_outage(power_w, topo, cfg.noise, cfg.attenuation, se);
    case plc::SchemeId::Kind::kMultiHop:
      return plc::multihop_outage(power_w, topo, cfg.noise, cfg.attenuation, se);
    case plc::SchemeId::Kind::kIdf:
      return plc::idf_outage(power_w, topo, cfg.noise, cfg.attenuation, se);
  }
  throw plc::ValidationError("unknown scheme kind");
}

plc::PowerSolution scheme_solve(const plc::SchemeId& scheme, const plc::Topology& topo,
                                const plc::ScenarioConfig& cfg) {
  const double se = cfg.modem.spectral_efficiency;
  switch (scheme.kind) {
    case plc::SchemeId::Kind::kSingleHop:
      return plc::solve_single_hop(cfg.outage_target, topo.links[0], cfg.noise, cfg.attenuation,
                                   se);
    case plc::SchemeId::Kind::kMultiHop:
      return plc::solve_multihop(cfg.outage_target, topo, cfg.noise, cfg.attenuation, se,
                                 cfg.solver);
    case plc::SchemeId::Kind::kIdf:
      return plc::solve_idf(cfg.outage_target, topo, cfg.noise, cfg.attenuation, se, cfg.solver);
  }
  throw plc::ValidationError("unknown scheme kind");
}

void print_breakdown(const plc::SchemeId& scheme, const plc::OutageBreakdown& outage) {
  std::cout << scheme.label() << ": end_to_end=" << fmt(outage.end_to_end);
  std::cout << " per_link=[";
  for (std::size_t i = 0; i < outage.per_link.size(); ++i) {
    std::cout << (i ? " " : "") << fmt(outage.per_link[i]);
  }
  std::cout << "]";
  if (outage.direct_link) std::cout << " direct=" << fmt(*outage.direct_link);
  std::cout << "\n";
}

int run_outage(const plc::ScenarioConfig& cfg) {
  for (const plc::SchemeId& scheme : cfg.schemes) {
    const plc::Topology topo = scheme_topology(scheme, cfg);
    print_breakdown(scheme, scheme_outage(scheme, cfg.power_w, topo, cfg));
  }
  return 0;
}

int run_power(const plc::ScenarioConfig& cfg) {
  for (const plc::SchemeId& scheme : cfg.schemes) {
    const plc::Topology topo = scheme_topology(scheme, cfg);
    const plc::PowerSolution s = scheme_solve(scheme, topo, cfg);
    std::cout << scheme.label() << ": power_w=" << fmt(s.power_w)
              << " residual=" << fmt(s.residual) << " iterations=" << s.iterations
              << " method="
              << (s.method == plc::SolveMethod::kClosedForm ? "closed-form" : "bisection")
              << " bracket=[" << fmt(s.bracket_low_w) << ", " << fmt(s.bracket_high_w) << "]\n";
  }
  return 0;
}

int run_energy(const plc::ScenarioConfig& cfg) {
  for (const plc::SchemeId& scheme : cfg.schemes) {
    const plc::Topology topo = scheme_topology(scheme, cfg);
    const plc::PowerSolution s = scheme_solve(scheme, topo, cfg);
    const plc::OutageBreakdown outage = scheme_outage(scheme, s.power_w, topo, cfg);
    plc::EnergyReport report;
    switch (scheme.kind) {
      case plc::SchemeId::Kind::kSingleHop:
        report = plc::energy_single_hop(s.power_w, cfg.modem);
        break;
      case plc::SchemeId::Kind::kMultiHop:
        report = plc::energy_multihop(s.power_w, outage, static_cast<std::size_t>(scheme.hops),
                                      cfg.modem);
        break;
      case plc::SchemeId::Kind::kIdf:
        report = plc::energy_idf(s.power_w, outage, cfg.modem);
        break;
    }
    std::cout << scheme.label() << ": power_w=" << fmt(s.power_w)
              << " energy_j_per_bit=" << fmt(report.energy_per_bit) << " terms=[";
    for (std::size_t i = 0; i < report.terms.size(); ++i) {
      std::cout << (i ? " " : "") << fmt(report.terms[i].weight) << "*"
                << fmt(report.terms[i].energy_j_per_bit);
    }
    std::cout << "]\n";
  }
  return 0;
}

int run_simulate(const plc::ScenarioConfig& cfg) {
  const double se = cfg.modem.spectral_efficiency;
  for (const plc::SchemeId& scheme : cfg.schemes) {
    const plc::Topology topo = scheme_topology(scheme, cfg);
    plc::SimEstimate est;
    switch (scheme.kind) {
      case plc::SchemeId::Kind::kSingleHop:
        est = plc::simulate_link_outage(cfg.power_w, topo.links[0], cfg.noise, cfg.attenuation,
                                        se, cfg.sim);
        break;
      case plc::SchemeId::Kind::kMultiHop:
        est = plc::simulate_multihop_outage(cfg.power_w, topo, cfg.noise, cfg.attenuation, se,
                                            cfg.sim);
        break;
      case plc::SchemeId::Kind::kIdf:
        est = plc::simulate_idf_outage(cfg.power_w, topo, cfg.noise, cfg.attenuation, se,
                                       cfg.sim);
        break;
    }
    const double analytic = scheme_outage(scheme, cfg.power_w, topo, cfg).end_to_end;
    std::cout << scheme.label() << ": p_hat=" << fmt(est.p_hat)
              << " ci99_half_width=" << fmt(est.ci99_half_width) << " trials=" << est.trials
              << " analytic=" << fmt(analytic)
              << " agrees=" << (plc::mc_agrees(analytic, est) ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_sweep_command(const plc::ScenarioConfig& cfg, const std::string& out_path) {
  // Buffer the whole CSV so a failed sweep never leaves a partial or empty
  // output file behind.
  std::ostringstream buffer;
  const plc::SweepSummary summary = plc::run_sweep(cfg, buffer);
  if (out_path.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw plc::ValidationError("cannot open output file: " + out_path);
    out << buffer.str();
    if (!out.good()) throw plc::ValidationError("failed writing output file: " + out_path);
  }
  std::cerr << summary.to_string();
  if (!out_path.empty()) std::cerr << " -> " << out_path;
  std::cerr << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(plc::kToolName) +
               " - outage, transmit power, and energy analysis for relayed powerline links"};
  app.set_version_flag("--version", std::string(plc::kVersion));
  app.require_subcommand(1);

  CommonArgs args;
  std::string out_path;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", args.config_path, "key-value configuration file");
    sub->add_option("--set", args.overrides, "override one key, e.g. --set noise.p=0.1")
        ->take_all();
    return sub;
  };

  CLI::App* outage = add_common(app.add_subcommand(
      "outage", "analytic outage probabilities at the fixed scenario power"));
  CLI::App* power = add_common(app.add_subcommand(
      "power", "minimum transmit power meeting the target outage"));
  CLI::App* energy = add_common(app.add_subcommand(
      "energy", "energy per bit at the solved transmit power"));
  CLI::App* simulate = add_common(app.add_subcommand(
      "simulate", "Monte Carlo outage estimate at the fixed scenario power"));
  CLI::App* sweep = add_common(app.add_subcommand(
      "sweep", "run a parameter sweep and emit CSV"));
  sweep->add_option("--preset", args.preset, "bundled sweep preset (fig2..fig6)");
  sweep->add_option("--out", out_path, "CSV output path (default: stdout)");
  CLI::App* schema = app.add_subcommand(
      "schema", "list all configuration keys with defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (schema->parsed()) {
      std::cout << plc::schema_text();
      return 0;
    }
    const plc::ScenarioConfig cfg = build_config(args);
    if (outage->parsed()) return run_outage(cfg);
    if (power->parsed()) return run_power(cfg);
    if (energy->parsed()) return run_energy(cfg);
    if (simulate->parsed()) return run_simulate(cfg);
    if (sweep->parsed()) return run_sweep_command(cfg, out_path);
    return 2;
  } catch (const plc::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const plc::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
