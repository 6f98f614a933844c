#pragma once

#include <vector>

#include "plc/outage.hpp"
#include "plc/scheme.hpp"

namespace plc {

// Modem power profile: transmit power is the solved variable; the static
// terms are circuitry costs charged per engaged modem.
struct ModemPowerProfile {
  double tx_static_w = 0.5;
  double rx_static_w = 0.5;
  double bandwidth_hz = 30e6;
  double spectral_efficiency = 1.0;  // bits/s/Hz

  double bit_rate() const { return spectral_efficiency * bandwidth_hz; }
  void validate() const;
};

struct EnergyTerm {
  double weight;            // branch probability
  double energy_j_per_bit;  // cost charged when the branch occurs
};

// energy_per_bit is exactly the weight-energy dot product of `terms`; each
// weight lies in [0, 1] and the weights of one report sum to at most 1.
struct EnergyReport {
  double energy_per_bit = 0.0;  // J/bit
  std::vector<EnergyTerm> terms;
  SchemeId scheme;
};

/// One transmission, one reception.
EnergyReport energy_single_hop(double power_w, const ModemPowerProfile& profile);

/// Decode-and-forward chain: a failure at hop k wastes the k transmissions
/// made so far; once the last relay decodes, all `hops` transmissions are
/// charged whether or not the destination succeeds.
EnergyReport energy_multihop(double power_w, const OutageBreakdown& outage,
                             std::size_t hops, const ModemPowerProfile& profile);

/// Incremental DF branches: direct success (relay listened), relay
/// retransmission, and the doubly-failed case.
EnergyReport energy_idf(double power_w, const OutageBreakdown& outage,
                        const ModemPowerProfile& profile);

}  // namespace plc
