#include "plc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "plc/errors.hpp"
#include "plc/rng.hpp"

namespace plc {

namespace {

constexpr double kInvLn2 = 1.4426950408889634;
constexpr double kZ99 = 2.5758293035489004;  // 99.5% normal quantile

// Noise-state-averaged capacity for an instantaneous SNR.
double mixture_capacity(double snr, double impulse_prob, double penalty) {
  const double clear = std::log1p(snr) * kInvLn2;
  const double impaired = std::log1p(snr / penalty) * kInvLn2;
  return (1.0 - impulse_prob) * clear + impulse_prob * impaired;
}

// Runs `fails(rng)` once per trial, each trial on its own (seed, trial)
// stream. Workers split the trial range contiguously; the outage counter is
// an integer sum, so the result is identical for any worker count.
template <typename TrialFn>
std::uint64_t count_failures(const SimConfig& cfg, const TrialFn& fails) {
  const auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      RngStream rng(cfg.seed, t);
      count += fails(rng) ? 1 : 0;
    }
    return count;
  };

  if (cfg.workers <= 1) return run_range(0, cfg.trials);

  const std::uint64_t n = std::min<std::uint64_t>(cfg.workers, cfg.trials);
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<std::thread> threads;
  threads.reserve(n);
  const std::uint64_t chunk = cfg.trials / n;
  const std::uint64_t remainder = cfg.trials % n;
  std::uint64_t begin = 0;
  for (std::uint64_t w = 0; w < n; ++w) {
    const std::uint64_t end = begin + chunk + (w < remainder ? 1 : 0);
    threads.emplace_back([&, w, begin, end] { counts[w] = run_range(begin, end); });
    begin = end;
  }
  for (std::thread& th : threads) th.join();
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return total;
}

SimEstimate make_estimate(std::uint64_t failures, std::uint64_t trials) {
  SimEstimate est;
  est.trials = trials;
  est.p_hat = static_cast<double>(failures) / static_cast<double>(trials);
  est.ci99_half_width = kZ99 * std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
  return est;
}

struct LinkDraw {
  FadingParams fading;
  double snr_scale;  // received SNR per unit squared gain
};

LinkDraw make_draw(double power_w, const LinkSpec& link, const NoiseParams& noise,
                   const AttenuationParams& att) {
  return {link.fading, power_w * attenuation(att, link.distance_m) / noise.background_var()};
}

}  // namespace

void SimConfig::validate() const {
  if (trials < 1) throw ValidationError("sim.trials must be >= 1");
  if (workers < 1) throw ValidationError("sim.workers must be >= 1");
}

SimEstimate simulate_link_outage(double power_w, const LinkSpec& link, const NoiseParams& noise,
                                 const AttenuationParams& att, double spectral_efficiency,
                                 const SimConfig& cfg) {
  cfg.validate();
  link.validate();
  if (!(power_w > 0.0)) throw ValidationError("simulate_link_outage: power must be > 0");
  const double penalty = noise.impulsive_penalty();
  const double p = noise.impulse_prob;
  noise.validate();
  if (!(spectral_efficiency > 0.0)) {
    throw ValidationError("simulate_link_outage: spectral efficiency must be > 0");
  }
  const LinkDraw draw = make_draw(power_w, link, noise, att);

  const std::uint64_t failures = count_failures(cfg, [&](RngStream& rng) {
    const double gain_sq = sample_channel_gain_sq(draw.fading, rng);
    return mixture_capacity(draw.snr_scale * gain_sq, p, penalty) < spectral_efficiency;
  });
  return make_estimate(failures, cfg.trials);
}

SimEstimate simulate_multihop_outage(double power_w, const Topology& topology,
                                     const NoiseParams& noise, const AttenuationParams& att,
                                     double spectral_efficiency, const SimConfig& cfg) {
  cfg.validate();
  topology.validate();
  if (!(power_w > 0.0)) throw ValidationError("simulate_multihop_outage: power must be > 0");
  const double penalty = noise.impulsive_penalty();
  const double p = noise.impulse_prob;
  std::vector<LinkDraw> draws;
  draws.reserve(topology.links.size());
  noise.validate();
  if (!(spectral_efficiency > 0.0)) {
    throw ValidationError("simulate_multihop_outage: spectral efficiency must be > 0");
  }
  for (const LinkSpec& link : topology.links) {
    draws.push_back(make_draw(power_w, link, noise, att));
  }

  const std::uint64_t failures = count_failures(cfg, [&](RngStream& rng) {
    for (const LinkDraw& d : draws) {
      const double gain_sq = sample_channel_gain_sq(d.fading, rng);
      if (mixture_capacity(d.snr_scale * gain_sq, p, penalty) < spectral_efficiency) return true;
    }
    return false;
  });
  return make_estimate(failures, cfg.trials);
}

SimEstimate simulate_idf_outage(double power_w, const Topology& topology,
                                const NoiseParams& noise, const AttenuationParams& att,
                                double spectral_efficiency, const SimConfig& cfg) {
  cfg.validate();
  topology.validate();
  if (!topology.direct) {
    throw ValidationError("simulate_idf_outage: topology must carry a direct link");
  }
  if (topology.links.size() != 2) {
    throw ValidationError("simulate_idf_outage: topology must have exactly two hops");
  }
  if (!(power_w > 0.0)) throw ValidationError("simulate_idf_outage: power must be > 0");
  const double penalty = noise.impulsive_penalty();
  const double p = noise.impulse_prob;
  noise.validate();
  if (!(spectral_efficiency > 0.0)) {
    throw ValidationError("simulate_idf_outage: spectral efficiency must be > 0");
  }
  const LinkDraw direct = make_draw(power_w, *topology.direct, noise, att);
  const LinkDraw hop1 = make_draw(power_w, topology.links[0], noise, att);
  const LinkDraw hop2 = make_draw(power_w, topology.links[1], noise, att);

  const auto below = [&](const LinkDraw& d, RngStream& rng) {
    const double gain_sq = sample_channel_gain_sq(d.fading, rng);
    return mixture_capacity(d.snr_scale * gain_sq, p, penalty) < spectral_efficiency;
  };
  const std::uint64_t failures = count_failures(cfg, [&](RngStream& rng) {
    if (!below(direct, rng)) return false;  // direct path decoded
    if (below(hop1, rng)) return true;      // relay never decoded
    return below(hop2, rng);
  });
  return make_estimate(failures, cfg.trials);
}

double mc_agreement_tolerance(double analytic, const SimEstimate& estimate) {
  const double n = static_cast<double>(estimate.trials);
  const double ci_at_analytic = kZ99 * std::sqrt(analytic * (1.0 - analytic) / n);
  double tol = 3.0 * std::max(estimate.ci99_half_width, ci_at_analytic);
  if (analytic >= 1e-4) tol = std::max(tol, 0.1 * analytic);
  return tol;
}

bool mc_agrees(double analytic, const SimEstimate& estimate) {
  return std::fabs(estimate.p_hat - analytic) <= mc_agreement_tolerance(analytic, estimate);
}

}  // namespace plc
