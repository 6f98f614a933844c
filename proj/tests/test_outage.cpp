#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "plc/errors.hpp"
#include "plc/outage.hpp"
#include "plc/special.hpp"
#include "plc/units.hpp"

using namespace plc;

namespace {
const AttenuationParams kCable{};
const NoiseParams kNoise{};
const FadingParams kFading{};
constexpr double kXi = 1.0;

double median_crossing_power(const LinkSpec& link) {
  // Power that puts the threshold exactly at the median of the squared gain:
  // threshold / snr_scale = 10^(2*mean/10).
  return noise_threshold(kNoise, kXi) * db_to_linear(-2.0 * link.fading.mean_db) *
         kNoise.background_var() / attenuation(kCable, link.distance_m);
}
}  // namespace

TEST_CASE("link outage is 1/2 at the median crossing") {
  for (double d : {50.0, 300.0, 900.0}) {
    const LinkSpec link{d, kFading};
    CHECK(link_outage(median_crossing_power(link), link, kNoise, kCable, kXi) ==
          doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("doubling the power shifts the outage by a fixed normal-argument step") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> dist_d(100.0, 900.0);
  // Stay within a few sigma of the median: the quantile recovery used below
  // loses precision once the outage saturates toward 0 or 1.
  std::uniform_real_distribution<double> dist_p(-0.6, 0.6);
  for (int i = 0; i < 3; ++i) {
    const LinkSpec link{dist_d(gen), kFading};
    const double power = std::pow(10.0, dist_p(gen)) * median_crossing_power(link);
    const double o1 = link_outage(power, link, kNoise, kCable, kXi);
    const double o2 = link_outage(2.0 * power, link, kNoise, kCable, kXi);
    const double shift = normal_quantile(o1) - normal_quantile(o2);
    // 10*log10(2) dB over a 2*sigma_db scale.
    CHECK(shift == doctest::Approx(linear_to_db(2.0) / (2.0 * kFading.sigma_db)).epsilon(1e-9));
  }
}

TEST_CASE("link outage is strictly decreasing in power with limits 1 and 0") {
  const LinkSpec link{400.0, kFading};
  // Below about -28 dBW the outage saturates to 1.0 in double precision.
  double prev = 1.0 + 1e-16;
  for (double p_db = -28.0; p_db <= 60.0; p_db += 4.0) {
    const double o = link_outage(db_to_linear(p_db), link, kNoise, kCable, kXi);
    CHECK(o < prev);
    prev = o;
  }
  CHECK(link_outage(1e-30, link, kNoise, kCable, kXi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(link_outage(1e30, link, kNoise, kCable, kXi) <= 1e-200);
  CHECK_THROWS_AS(link_outage(0.0, link, kNoise, kCable, kXi), ValidationError);
  CHECK_THROWS_AS(link_outage(-1.0, link, kNoise, kCable, kXi), ValidationError);
}

TEST_CASE("single-hop outage equals the bare link outage") {
  const Topology topo = Topology::single(400.0, kFading);
  for (double p : {0.01, 1.0, 50.0}) {
    const OutageBreakdown b = single_hop_outage(p, topo, kNoise, kCable, kXi);
    const double direct = link_outage(p, topo.links[0], kNoise, kCable, kXi);
    CHECK(std::fabs(b.end_to_end - direct) <= 1e-14);
    CHECK(b.per_link.size() == 1);
  }
  CHECK_THROWS_AS(
      single_hop_outage(1.0, Topology::equal_spacing(400.0, 2, kFading), kNoise, kCable, kXi),
      ValidationError);
}

TEST_CASE("single-hop outage equals threshold-then-CDF composition") {
  const Topology topo = Topology::single(600.0, kFading);
  for (double p : {0.05, 1.0, 20.0}) {
    const double snr_scale =
        p * attenuation(kCable, 600.0) / kNoise.background_var();
    const double composed =
        lognormal_sq_cdf(noise_threshold(kNoise, kXi) / snr_scale, kFading);
    CHECK(std::fabs(single_hop_outage(p, topo, kNoise, kCable, kXi).end_to_end - composed) <=
          1e-14);
  }
}

TEST_CASE("chain composition handles perfect and broken links") {
  CHECK(compose_chain_outage({0.0, 0.0, 0.0}) == 0.0);
  CHECK(compose_chain_outage({0.3, 1.0}) == 1.0);
  CHECK(compose_chain_outage({1.0, 0.0, 0.5}) == 1.0);
  CHECK(compose_chain_outage({0.25}) == 0.25);
  CHECK_THROWS_AS(compose_chain_outage({}), ValidationError);
  CHECK_THROWS_AS(compose_chain_outage({0.5, 1.5}), ValidationError);
}

TEST_CASE("first-failure expansion equals the serial product form") {
  std::mt19937 gen(23);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 400; ++rep) {
      std::vector<double> links(n);
      for (auto& o : links) o = dist(gen);
      const double expanded = compose_chain_outage(links);
      const double product = oracles::chain_outage_product(links);
      CHECK(std::fabs(expanded - product) <= 1e-12);
    }
  }
}

TEST_CASE("expansion keeps tiny outage chains strictly positive") {
  const std::vector<double> tiny(4, 2.5e-21);
  const double composed = compose_chain_outage(tiny);
  CHECK(composed == doctest::Approx(1e-20).epsilon(1e-3));
  CHECK(composed > 0.0);  // the product form would collapse to 0 here
}

TEST_CASE("multihop outage matches per-link terms and rejects short chains") {
  const Topology topo = Topology::equal_spacing(900.0, 3, kFading);
  const OutageBreakdown b = multihop_outage(1.0, topo, kNoise, kCable, kXi);
  CHECK(b.per_link.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(b.per_link[i] ==
          doctest::Approx(link_outage(1.0, topo.links[i], kNoise, kCable, kXi)).epsilon(1e-15));
  }
  CHECK(std::fabs(b.end_to_end - oracles::chain_outage_product(b.per_link)) <= 1e-12);
  CHECK_THROWS_AS(multihop_outage(1.0, Topology::single(400.0, kFading), kNoise, kCable, kXi),
                  ValidationError);
}

TEST_CASE("incremental relaying trivial cases") {
  // Perfect direct path: never an outage.
  Topology perfect_direct = Topology::idf_midpoint(400.0, kFading);
  perfect_direct.direct->fading.mean_db = 100.0;
  const OutageBreakdown none = idf_outage(1.0, perfect_direct, kNoise, kCable, kXi);
  CHECK(none.end_to_end <= 1e-200);

  // Relay that never decodes: the direct path alone decides.
  Topology deaf_relay = Topology::idf_midpoint(400.0, kFading);
  deaf_relay.links[0].fading.mean_db = -100.0;
  deaf_relay.links[1].fading.mean_db = -100.0;
  const OutageBreakdown dl = idf_outage(1.0, deaf_relay, kNoise, kCable, kXi);
  CHECK(dl.end_to_end == doctest::Approx(*dl.direct_link).epsilon(1e-12));
}

TEST_CASE("topology invariants") {
  CHECK_THROWS_AS(Topology::equal_spacing(400.0, 0, kFading), ValidationError);
  CHECK_THROWS_AS(Topology::single(-5.0, kFading), ValidationError);

  Topology mismatched = Topology::idf_midpoint(400.0, kFading);
  mismatched.direct->distance_m = 410.0;  // no longer the hop sum
  CHECK_THROWS_AS(mismatched.validate(), ValidationError);

  const Topology ok = Topology::idf_midpoint(400.0, kFading);
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.total_distance() == 400.0);
  CHECK(ok.hops() == 2);
}

TEST_CASE("incremental relaying validates its topology") {
  Topology no_direct = Topology::equal_spacing(400.0, 2, kFading);
  CHECK_THROWS_AS(idf_outage(1.0, no_direct, kNoise, kCable, kXi), ValidationError);

  Topology uneven = Topology::idf_midpoint(400.0, kFading);
  uneven.links[0].distance_m = 150.0;
  uneven.links[1].distance_m = 250.0;
  CHECK_THROWS_AS(idf_outage(1.0, uneven, kNoise, kCable, kXi), ValidationError);
}

TEST_CASE("composed and expanded incremental outage agree at random points") {
  std::mt19937 gen(31);
  std::uniform_real_distribution<double> dist_d(50.0, 1500.0);
  std::uniform_real_distribution<double> dist_mu(0.0, 6.0);
  std::uniform_real_distribution<double> dist_sigma(1.0, 4.0);
  std::uniform_real_distribution<double> dist_p(0.0, 0.2);
  std::uniform_real_distribution<double> dist_logP(-3.0, 3.0);
  for (int i = 0; i < 300; ++i) {
    const FadingParams fading{dist_mu(gen), dist_sigma(gen)};
    const Topology topo = Topology::idf_midpoint(dist_d(gen), fading);
    const NoiseParams noise{dist_p(gen), 25.0, -15.0};
    const double power = std::pow(10.0, dist_logP(gen));
    const double composed = idf_outage(power, topo, noise, kCable, kXi).end_to_end;
    const double expanded = idf_outage_expanded(power, topo, noise, kCable, kXi);
    CHECK(std::fabs(composed - expanded) <= 1e-12);
  }
}

TEST_CASE("outage never improves with impulse probability or impulse power") {
  const Topology topo = Topology::equal_spacing(600.0, 2, kFading);
  double prev = 0.0;
  for (double p : {0.0, 0.01, 0.05, 0.1, 0.2}) {
    const double o = multihop_outage(1.0, topo, NoiseParams{p, 25.0, -15.0}, kCable, kXi).end_to_end;
    CHECK(o >= prev);
    prev = o;
  }
  prev = 0.0;
  for (double sinr : {10.0, -5.0, -15.0, -25.0}) {
    const double o =
        multihop_outage(1.0, topo, NoiseParams{0.01, 25.0, sinr}, kCable, kXi).end_to_end;
    CHECK(o >= prev);
    prev = o;
  }
}

TEST_CASE("outage decreases with power and increases with distance for all schemes") {
  for (double d : {300.0, 600.0, 1000.0}) {
    const double o_short = multihop_outage(1.0, Topology::equal_spacing(d, 3, kFading), kNoise,
                                           kCable, kXi)
                               .end_to_end;
    const double o_long = multihop_outage(1.0, Topology::equal_spacing(d + 100.0, 3, kFading),
                                          kNoise, kCable, kXi)
                              .end_to_end;
    CHECK(o_long > o_short);
    const double o_more_power = multihop_outage(2.0, Topology::equal_spacing(d, 3, kFading),
                                                kNoise, kCable, kXi)
                                    .end_to_end;
    CHECK(o_more_power < o_short);

    const double i_short = idf_outage(1.0, Topology::idf_midpoint(d, kFading), kNoise, kCable,
                                      kXi)
                               .end_to_end;
    const double i_long = idf_outage(1.0, Topology::idf_midpoint(d + 100.0, kFading), kNoise,
                                     kCable, kXi)
                              .end_to_end;
    CHECK(i_long > i_short);
  }
}

TEST_CASE("at 1000 m adding hops improves the outage") {
  const double d = 1000.0;
  double prev = single_hop_outage(1.0, Topology::single(d, kFading), kNoise, kCable, kXi).end_to_end;
  for (std::size_t hops : {2u, 3u, 4u}) {
    const double o =
        multihop_outage(1.0, Topology::equal_spacing(d, hops, kFading), kNoise, kCable, kXi)
            .end_to_end;
    CHECK(o < prev);
    prev = o;
  }
}

TEST_CASE("incremental relaying never loses to the dual-hop chain") {
  for (double d : {200.0, 400.0, 800.0, 1200.0}) {
    for (double p : {0.01, 0.1}) {
      const NoiseParams noise{p, 25.0, -15.0};
      const double mh2 =
          multihop_outage(1.0, Topology::equal_spacing(d, 2, kFading), noise, kCable, kXi)
              .end_to_end;
      const OutageBreakdown idf =
          idf_outage(1.0, Topology::idf_midpoint(d, kFading), noise, kCable, kXi);
      CHECK(idf.end_to_end <= mh2);
      CHECK(idf.end_to_end <= *idf.direct_link);
    }
  }
}
