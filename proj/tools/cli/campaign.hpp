// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "cli/scheme.hpp"
#include "rankcrypt/netsim/topology.hpp"

namespace rankcrypt::cli {

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t rho = 0;
  std::string decode;         // pass | fail | skipped
  std::string decode_status;  // decoder outcome, "wrong" when a wrong message came back
  std::string leakage;        // pass | fail | skipped
  long double leakage_bound = 0;  // max I(S;W) over the wiretap sets, in packets
};

struct CampaignResult {
  std::vector<TrialRecord> records;

  std::size_t count(const std::string TrialRecord::*field, const std::string& value) const;
};

/// Per trial: realize the network, draw a message, encode, inject wt <= t
/// errors, reduce and decode at every receiver, and measure the exact leakage
/// of every wiretap set of at most mu edges. Realizations with rank
/// deficiency above the scheme's rho budget are skipped.
CampaignResult run_campaign(const Scheme& scheme, const netsim::Topology& topology,
                            const io::CampaignConfig& config);

std::string to_csv(const CampaignResult& result);

}  // namespace rankcrypt::cli
