// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>
#include <string>

#include "rankcrypt/linalg/matrix.hpp"
#include "rankcrypt/netsim/topology.hpp"

namespace rankcrypt::io {

inline constexpr int kFormatVersion = 1;

/// Scheme file. kind "layered" carries (n, k, mu, t, rho, points); kind
/// "coset" carries a k x n parity check h and the claimed mu.
struct SchemeDescriptor {
  std::string kind = "layered";
  gf::TowerPtr tower;
  std::size_t n = 0, k = 0, mu = 0, t = 0, rho = 0;
  std::vector<Elem> points;
  linalg::ExtMatrix h;
};

nlohmann::json to_json(const SchemeDescriptor& d);
SchemeDescriptor scheme_from_json(const nlohmann::json& j);

/// Code file: tower, n, k and evaluation points.
struct CodeDescriptor {
  gf::TowerPtr tower;
  std::size_t n = 0, k = 0;
  std::vector<Elem> points;
};

nlohmann::json to_json(const CodeDescriptor& d);
CodeDescriptor code_from_json(const nlohmann::json& j);

nlohmann::json to_json(const netsim::Topology& t);
netsim::Topology topology_from_json(const nlohmann::json& j);

struct CampaignConfig {
  std::size_t mu = 0;
  std::size_t t = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
};

nlohmann::json to_json(const CampaignConfig& c);
CampaignConfig campaign_from_json(const nlohmann::json& j);

/// Parses text as JSON, mapping syntax errors to ErrorCode::Parse.
nlohmann::json parse_json(const std::string& text);

}  // namespace rankcrypt::io
