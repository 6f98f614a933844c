#include "plc/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "plc/errors.hpp"
#include "plc/presets.hpp"
#include "plc/version.hpp"

namespace plc {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* variable_column(SweepSpec::Variable v) {
  switch (v) {
    case SweepSpec::Variable::kDistance:
      return "distance_m";
    case SweepSpec::Variable::kStaticPower:
      return "static_power_w";
    case SweepSpec::Variable::kOutageTarget:
      return "outage_target";
    case SweepSpec::Variable::kImpulseProbability:
      return "impulse_probability";
  }
  return "?";
}

std::vector<double> sweep_points(const SweepSpec& sweep) {
  std::vector<double> points(sweep.steps);
  const double n = static_cast<double>(sweep.steps - 1);
  for (int i = 0; i < sweep.steps; ++i) {
    const double f = static_cast<double>(i) / n;
    points[i] = sweep.spacing == SweepSpec::Spacing::kLinear
                    ? sweep.start + f * (sweep.stop - sweep.start)
                    : std::exp(std::log(sweep.start) + f * (std::log(sweep.stop) - std::log(sweep.start)));
  }
  points.back() = sweep.stop;  // keep the endpoint exact under either spacing
  return points;
}

ScenarioConfig at_point(const ScenarioConfig& base, double value) {
  ScenarioConfig cfg = base;
  switch (base.sweep.variable) {
    case SweepSpec::Variable::kDistance:
      cfg.distance_m = value;
      break;
    case SweepSpec::Variable::kStaticPower:
      cfg.modem.tx_static_w = value;
      cfg.modem.rx_static_w = value;
      break;
    case SweepSpec::Variable::kOutageTarget:
      cfg.outage_target = value;
      break;
    case SweepSpec::Variable::kImpulseProbability:
      cfg.noise.impulse_prob = value;
      break;
  }
  return cfg;
}

Topology scheme_topology(const SchemeId& scheme, const ScenarioConfig& cfg) {
  switch (scheme.kind) {
    case SchemeId::Kind::kSingleHop:
      return Topology::single(cfg.distance_m, cfg.fading);
    case SchemeId::Kind::kMultiHop:
      return Topology::equal_spacing(cfg.distance_m, static_cast<std::size_t>(scheme.hops),
                                     cfg.fading);
    case SchemeId::Kind::kIdf:
      return Topology::idf_midpoint(cfg.distance_m, cfg.fading);
  }
  throw ValidationError("unknown scheme kind");
}

OutageBreakdown scheme_outage(const SchemeId& scheme, double power_w, const Topology& topo,
                              const ScenarioConfig& cfg) {
  switch (scheme.kind) {
    case SchemeId::Kind::kSingleHop:
      return single_hop_outage(power_w, topo, cfg.noise, cfg.attenuation,
                               cfg.modem.spectral_efficiency);
    case SchemeId::Kind::kMultiHop:
      return multihop_outage(power_w, topo, cfg.noise, cfg.attenuation,
                             cfg.modem.spectral_efficiency);
    case SchemeId::Kind::kIdf:
      return idf_outage(power_w, topo, cfg.noise, cfg.attenuation,
                        cfg.modem.spectral_efficiency);
  }
  throw ValidationError("unknown scheme kind");
}

PowerSolution scheme_solve(const SchemeId& scheme, const Topology& topo,
                           const ScenarioConfig& cfg) {
  switch (scheme.kind) {
    case SchemeId::Kind::kSingleHop:
      return solve_single_hop(cfg.outage_target, topo.links[0], cfg.noise, cfg.attenuation,
                              cfg.modem.spectral_efficiency);
    case SchemeId::Kind::kMultiHop:
      return solve_multihop(cfg.outage_target, topo, cfg.noise, cfg.attenuation,
                            cfg.modem.spectral_efficiency, cfg.solver);
    case SchemeId::Kind::kIdf:
      return solve_idf(cfg.outage_target, topo, cfg.noise, cfg.attenuation,
                       cfg.modem.spectral_efficiency, cfg.solver);
  }
  throw ValidationError("unknown scheme kind");
}

EnergyReport scheme_energy(const SchemeId& scheme, double power_w, const OutageBreakdown& outage,
                           const ScenarioConfig& cfg) {
  switch (scheme.kind) {
    case SchemeId::Kind::kSingleHop:
      return energy_single_hop(power_w, cfg.modem);
    case SchemeId::Kind::kMultiHop:
      return energy_multihop(power_w, outage, static_cast<std::size_t>(scheme.hops), cfg.modem);
    case SchemeId::Kind::kIdf:
      return energy_idf(power_w, outage, cfg.modem);
  }
  throw ValidationError("unknown scheme kind");
}

SimEstimate scheme_simulate(const SchemeId& scheme, double power_w, const Topology& topo,
                            const ScenarioConfig& cfg) {
  switch (scheme.kind) {
    case SchemeId::Kind::kSingleHop:
      return simulate_link_outage(power_w, topo.links[0], cfg.noise, cfg.attenuation,
                                  cfg.modem.spectral_efficiency, cfg.sim);
    case SchemeId::Kind::kMultiHop:
      return simulate_multihop_outage(power_w, topo, cfg.noise, cfg.attenuation,
                                      cfg.modem.spectral_efficiency, cfg.sim);
    case SchemeId::Kind::kIdf:
      return simulate_idf_outage(power_w, topo, cfg.noise, cfg.attenuation,
                                 cfg.modem.spectral_efficiency, cfg.sim);
  }
  throw ValidationError("unknown scheme kind");
}

void write_header(const ScenarioConfig& cfg, std::ostream& out) {
  const SweepSpec& sweep = cfg.sweep;
  out << "# " << kToolName << " " << kVersion << "\n";
  out << "# sweep: variable=" << variable_column(sweep.variable)
      << " mode=" << (sweep.mode == SweepSpec::Mode::kOutage ? "outage" : "energy")
      << " spacing=" << (sweep.spacing == SweepSpec::Spacing::kLinear ? "linear" : "log")
      << " start=" << fmt(sweep.start) << " stop=" << fmt(sweep.stop)
      << " steps=" << sweep.steps << "\n";
  out << "# schemes:";
  for (const SchemeId& s : cfg.schemes) out << " " << s.label();
  out << "\n";
  out << "# modem: xi=" << fmt(cfg.modem.spectral_efficiency)
      << " bandwidth_hz=" << fmt(cfg.modem.bandwidth_hz)
      << " tx_static_w=" << fmt(cfg.modem.tx_static_w)
      << " rx_static_w=" << fmt(cfg.modem.rx_static_w) << "\n";
  out << "# noise: p=" << fmt(cfg.noise.impulse_prob) << " sbnr_db=" << fmt(cfg.noise.sbnr_db)
      << " sinr_db=" << fmt(cfg.noise.sinr_db) << "\n";
  out << "# fading: mean_db=" << fmt(cfg.fading.mean_db)
      << " sigma_db=" << fmt(cfg.fading.sigma_db) << "\n";
  out << "# attenuation: a0=" << fmt(cfg.attenuation.a0) << " a1=" << fmt(cfg.attenuation.a1)
      << " k=" << fmt(cfg.attenuation.k) << " f_mhz=" << fmt(cfg.attenuation.f_mhz)
      << " freq_unit="
      << (cfg.attenuation.freq_unit == FrequencyUnit::kMegahertz ? "mhz" : "hz") << "\n";
  if (sweep.mode == SweepSpec::Mode::kOutage) {
    out << "# scenario: power_w=" << fmt(cfg.power_w);
  } else {
    out << "# scenario: outage_target=" << fmt(cfg.outage_target)
        << " solver_tolerance=" << fmt(cfg.solver.tolerance);
  }
  if (sweep.variable != SweepSpec::Variable::kDistance) {
    out << " distance_m=" << fmt(cfg.distance_m);
  }
  out << "\n";
  if (sweep.validate_mc) {
    out << "# mc: trials=" << cfg.sim.trials << " seed=" << cfg.sim.seed
        << " workers=" << cfg.sim.workers << "\n";
  }
}

}  // namespace

std::string SweepSummary::to_string() const {
  std::ostringstream out;
  out << "sweep: " << points << " points, " << rows << " rows";
  if (mc_flagged > 0) {
    out << ", " << mc_flagged << " row(s) flagged for analytic/Monte-Carlo disagreement";
  }
  return out.str();
}

SweepSummary run_sweep(const ScenarioConfig& cfg, std::ostream& out) {
  cfg.validate();
  const SweepSpec& sweep = cfg.sweep;

  write_header(cfg, out);
  out << variable_column(sweep.variable) << ",scheme";
  if (sweep.mode == SweepSpec::Mode::kOutage) {
    out << ",outage";
  } else {
    out << ",power_w,energy_j_per_bit";
  }
  if (sweep.validate_mc) out << ",mc_estimate,mc_ci99_half_width,mc_agrees";
  out << "\n";

  SweepSummary summary;
  const std::vector<double> points = sweep_points(sweep);
  summary.points = points.size();
  for (const double value : points) {
    const ScenarioConfig local = at_point(cfg, value);
    for (const SchemeId& scheme : cfg.schemes) {
      const Topology topo = scheme_topology(scheme, local);
      double power = local.power_w;
      OutageBreakdown outage;
      try {
        if (sweep.mode == SweepSpec::Mode::kEnergy) {
          power = scheme_solve(scheme, topo, local).power_w;
        }
        outage = scheme_outage(scheme, power, topo, local);
      } catch (const SolverError& e) {
        throw SolverError(std::string(e.what()) + " [scheme " + scheme.label() + " at " +
                          variable_column(sweep.variable) + "=" + fmt(value) + "]");
      }

      out << fmt(value) << "," << scheme.label();
      if (sweep.mode == SweepSpec::Mode::kOutage) {
        out << "," << fmt(outage.end_to_end);
      } else {
        const EnergyReport report = scheme_energy(scheme, power, outage, local);
        out << "," << fmt(power) << "," << fmt(report.energy_per_bit);
      }
      if (sweep.validate_mc) {
        const SimEstimate est = scheme_simulate(scheme, power, topo, local);
        const bool ok = mc_agrees(outage.end_to_end, est);
        if (!ok) ++summary.mc_flagged;
        out << "," << fmt(est.p_hat) << "," << fmt(est.ci99_half_width) << ","
            << (ok ? 1 : 0);
      }
      out << "\n";
      ++summary.rows;
    }
  }
  return summary;
}

}  // namespace plc
