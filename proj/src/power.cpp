#include "plc/power.hpp"

#include <algorithm>
#include <cmath>

#include "plc/errors.hpp"
#include "plc/special.hpp"
#include "plc/units.hpp"

namespace plc {

namespace {

constexpr double kSqrt8 = 2.8284271247461903;

void require_target(double target_outage) {
  if (!(target_outage > 0.0 && target_outage < 1.0)) {
    throw ValidationError("target outage must lie strictly inside (0, 1)");
  }
}

const LinkSpec& longest_link(const Topology& topology) {
  const auto it = std::max_element(
      topology.links.begin(), topology.links.end(),
      [](const LinkSpec& a, const LinkSpec& b) { return a.distance_m < b.distance_m; });
  return *it;
}

// Bracketed bisection on a strictly decreasing power -> outage map.
// Expansion: the lower edge starts six decades below the seed and halves
// until its outage exceeds the target; the upper edge doubles from the seed
// until its outage falls below the target.
template <typename OutageFn>
PowerSolution bisect_power(OutageFn&& outage_at, double target_outage, double seed_power_w,
                           const SolverOptions& opt) {
  require_target(target_outage);
  if (!(opt.tolerance > 0.0)) throw ValidationError("solver tolerance must be > 0");
  if (opt.max_iterations < 1 || opt.max_expansions < 1) {
    throw ValidationError("solver iteration/expansion limits must be >= 1");
  }
  if (!std::isfinite(seed_power_w) || !(seed_power_w > 0.0)) {
    throw SolverError("power solve: non-finite bracket seed");
  }

  const auto eval = [&](double p) {
    const double o = outage_at(p);
    if (!std::isfinite(o)) throw SolverError("power solve: non-finite outage value");
    return o;
  };
  const auto exact_hit = [&](double p) {
    PowerSolution s;
    s.power_w = p;
    s.residual = 0.0;
    s.bracket_low_w = p;
    s.bracket_high_w = p;
    s.method = SolveMethod::kBisection;
    return s;
  };

  double low = seed_power_w / 1e6;
  double at_low = eval(low);
  for (int n = 0; at_low <= target_outage; ++n) {
    if (at_low == target_outage) return exact_hit(low);
    if (n >= opt.max_expansions) {
      throw SolverError("power solve: could not bracket the target from below; "
                        "the outage never rises above the target at vanishing power");
    }
    low /= 2.0;
    at_low = eval(low);
  }

  double high = std::max(seed_power_w, low * 2.0);
  double at_high = eval(high);
  for (int n = 0; at_high >= target_outage; ++n) {
    if (at_high == target_outage) return exact_hit(high);
    if (n >= opt.max_expansions) {
      throw SolverError("power solve: could not bracket the target from above; "
                        "the target outage may be unreachable for these parameters");
    }
    high *= 2.0;
    at_high = eval(high);
  }

  PowerSolution s;
  s.method = SolveMethod::kBisection;
  while (true) {
    const double mid = 0.5 * (low + high);
    const double at_mid = eval(mid);
    ++s.iterations;
    s.power_w = mid;
    s.residual = std::fabs(at_mid - target_outage);
    if (s.residual <= opt.tolerance) break;
    if (high - low < 1e-12 * mid) break;
    if (mid == low || mid == high) break;  // floating-point resolution exhausted
    if (at_mid > target_outage) {
      low = mid;
    } else {
      high = mid;
    }
    if (s.iterations >= opt.max_iterations) {
      throw SolverError("power solve: bisection exceeded the iteration limit");
    }
  }
  s.bracket_low_w = low;
  s.bracket_high_w = high;
  return s;
}

}  // namespace

PowerSolution solve_single_hop(double target_outage, const LinkSpec& link,
                               const NoiseParams& noise, const AttenuationParams& att,
                               double spectral_efficiency) {
  require_target(target_outage);
  link.validate();
  const double threshold = noise_threshold(noise, spectral_efficiency);
  const double gain_quantile_db =
      kSqrt8 * link.fading.sigma_db * erf_inv(2.0 * target_outage - 1.0) +
      2.0 * link.fading.mean_db;
  const double power = threshold * noise.background_var() /
                       attenuation(att, link.distance_m) *
                       std::exp(-gain_quantile_db / kDbPerNeper);

  PowerSolution s;
  s.power_w = power;
  s.residual =
      std::fabs(link_outage(power, link, noise, att, spectral_efficiency) - target_outage);
  s.bracket_low_w = power;
  s.bracket_high_w = power;
  s.method = SolveMethod::kClosedForm;
  return s;
}

PowerSolution solve_multihop(double target_outage, const Topology& topology,
                             const NoiseParams& noise, const AttenuationParams& att,
                             double spectral_efficiency, const SolverOptions& opt) {
  topology.validate();
  const double seed =
      solve_single_hop(target_outage, longest_link(topology), noise, att, spectral_efficiency)
          .power_w;
  std::vector<double> per_link(topology.links.size());
  const auto chain_outage_at = [&](double p) {
    for (std::size_t i = 0; i < topology.links.size(); ++i) {
      per_link[i] = link_outage(p, topology.links[i], noise, att, spectral_efficiency);
    }
    return compose_chain_outage(per_link);
  };
  return bisect_power(chain_outage_at, target_outage, seed, opt);
}

PowerSolution solve_idf(double target_outage, const Topology& topology,
                        const NoiseParams& noise, const AttenuationParams& att,
                        double spectral_efficiency, const SolverOptions& opt) {
  topology.validate();
  if (!topology.direct) {
    throw ValidationError("solve_idf: topology must carry a direct link");
  }
  const double seed =
      solve_single_hop(target_outage, *topology.direct, noise, att, spectral_efficiency).power_w;
  const auto idf_outage_at = [&](double p) {
    return idf_outage(p, topology, noise, att, spectral_efficiency).end_to_end;
  };
  PowerSolution s = bisect_power(idf_outage_at, target_outage, seed, opt);

  // The expanded erf identity must agree with the composed root; the band
  // scales with the achieved residual so loose tolerances stay usable.
  const double identity_residual =
      8.0 * std::fabs(idf_outage_expanded(s.power_w, topology, noise, att, spectral_efficiency) -
                      target_outage);
  if (identity_residual > 1e-9 + 8.0 * s.residual) {
    throw SolverError("solve_idf: expanded-identity cross-check failed at the solved power");
  }
  return s;
}

}  // namespace plc
