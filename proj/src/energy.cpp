#include "plc/energy.hpp"

#include <cmath>
#include <string>

#include "plc/errors.hpp"

namespace plc {

namespace {

void require_power(double power_w) {
  // The zero-power limit is meaningful (pure static floor), negatives are not.
  if (!(power_w >= 0.0)) throw ValidationError("energy: transmit power must be >= 0");
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string("energy: ") + what + " must lie in [0, 1]");
  }
}

double total_of(const std::vector<EnergyTerm>& terms) {
  double sum = 0.0;
  for (const EnergyTerm& t : terms) sum += t.weight * t.energy_j_per_bit;
  return sum;
}

}  // namespace

void ModemPowerProfile::validate() const {
  if (!(tx_static_w > 0.0)) throw ValidationError("modem.tx_static_w must be > 0");
  if (!(rx_static_w > 0.0)) throw ValidationError("modem.rx_static_w must be > 0");
  if (!(bandwidth_hz > 0.0)) throw ValidationError("modem.bandwidth_hz must be > 0");
  if (!(spectral_efficiency > 0.0)) throw ValidationError("modem.xi must be > 0");
}

EnergyReport energy_single_hop(double power_w, const ModemPowerProfile& profile) {
  profile.validate();
  require_power(power_w);
  EnergyReport report;
  report.scheme = SchemeId::single_hop();
  report.terms.push_back(
      {1.0, (power_w + profile.tx_static_w + profile.rx_static_w) / profile.bit_rate()});
  report.energy_per_bit = total_of(report.terms);
  return report;
}

EnergyReport energy_multihop(double power_w, const OutageBreakdown& outage, std::size_t hops,
                             const ModemPowerProfile& profile) {
  profile.validate();
  require_power(power_w);
  if (hops < 2) throw ValidationError("energy_multihop: at least two hops are required");
  if (outage.per_link.size() != hops) {
    throw ValidationError("energy_multihop: per-link outage count must match the hop count");
  }
  const double per_tx =
      (power_w + profile.tx_static_w + profile.rx_static_w) / profile.bit_rate();

  EnergyReport report;
  report.scheme = SchemeId::multi_hop(static_cast<int>(hops));
  // A failure at hop k+1 wastes the k+1 transmissions made so far. The last
  // hop never truncates the chain: once the final relay decodes, all `hops`
  // transmissions are charged regardless of the destination outcome.
  double decoded_so_far = 1.0;
  for (std::size_t k = 0; k + 1 < hops; ++k) {
    require_probability(outage.per_link[k], "per-link outage");
    report.terms.push_back(
        {decoded_so_far * outage.per_link[k], static_cast<double>(k + 1) * per_tx});
    decoded_so_far *= 1.0 - outage.per_link[k];
  }
  report.terms.push_back({decoded_so_far, static_cast<double>(hops) * per_tx});
  report.energy_per_bit = total_of(report.terms);
  return report;
}

EnergyReport energy_idf(double power_w, const OutageBreakdown& outage,
                        const ModemPowerProfile& profile) {
  profile.validate();
  require_power(power_w);
  if (!outage.direct_link) {
    throw ValidationError("energy_idf: outage breakdown must carry the direct-link term");
  }
  if (outage.per_link.size() != 2) {
    throw ValidationError("energy_idf: outage breakdown must carry two hop terms");
  }
  const double direct_fail = *outage.direct_link;
  const double relay_fail = outage.per_link[0];
  require_probability(direct_fail, "direct-link outage");
  require_probability(relay_fail, "source-to-relay outage");

  const double rate = profile.bit_rate();
  // Direct success or total failure: one transmission, destination and relay
  // both listening. Relay retransmission: two transmissions, three receptions.
  const double single_tx =
      (power_w + profile.tx_static_w + 2.0 * profile.rx_static_w) / rate;
  const double relayed_tx =
      (2.0 * power_w + 2.0 * profile.tx_static_w + 3.0 * profile.rx_static_w) / rate;

  EnergyReport report;
  report.scheme = SchemeId::idf();
  report.terms.push_back({1.0 - direct_fail, single_tx});
  report.terms.push_back({direct_fail * (1.0 - relay_fail), relayed_tx});
  report.terms.push_back({direct_fail * relay_fail, single_tx});
  report.energy_per_bit = total_of(report.terms);
  return report;
}

}  // namespace plc
