// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/io/descriptors.hpp"

#include "rankcrypt/io/text_format.hpp"

namespace rankcrypt::io {

using nlohmann::json;

namespace {

void check_version(const json& j) {
  require(j.is_object(), ErrorCode::Parse, "descriptor must be a JSON object");
  require(j.value("format_version", -1) == kFormatVersion, ErrorCode::Parse,
          "unsupported or missing format_version");
}

template <typename T>
T field(const json& j, const char* key) {
  require(j.contains(key), ErrorCode::Parse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(ErrorCode::Parse, std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<std::string> format_elems(const gf::FieldTower& f, std::span<const Elem> v) {
  std::vector<std::string> out;
  for (Elem e : v) out.push_back(f.format(e));
  return out;
}

std::vector<Elem> parse_elems(const gf::FieldTower& f, const std::vector<std::string>& v) {
  std::vector<Elem> out;
  for (const auto& s : v) out.push_back(f.parse_elem(s));
  return out;
}

const char* coding_name(netsim::CodingMode m) {
  switch (m) {
    case netsim::CodingMode::Routing:
      return "routing";
    case netsim::CodingMode::Nonzero:
      return "nonzero";
    case netsim::CodingMode::Random:
      break;
  }
  return "random";
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const SchemeDescriptor& d) {
  json j = {{"format_version", kFormatVersion},
            {"kind", d.kind},
            {"tower", d.tower->spec()},
            {"n", d.n},
            {"k", d.k},
            {"mu", d.mu}};
  if (d.kind == "layered") {
    j["t"] = d.t;
    j["rho"] = d.rho;
    j["points"] = format_elems(*d.tower, d.points);
  } else {
    json rows = json::array();
    for (std::size_t r = 0; r < d.h.rows(); ++r) rows.push_back(format_elems(*d.tower, d.h.row(r)));
    j["h"] = rows;
  }
  return j;
}

SchemeDescriptor scheme_from_json(const json& j) {
  check_version(j);
  SchemeDescriptor d;
  d.kind = field<std::string>(j, "kind");
  require(d.kind == "layered" || d.kind == "coset", ErrorCode::Parse,
          "scheme kind must be 'layered' or 'coset'");
  d.tower = gf::FieldTower::parse(field<std::string>(j, "tower"));
  d.n = field<std::size_t>(j, "n");
  d.k = field<std::size_t>(j, "k");
  d.mu = field<std::size_t>(j, "mu");
  if (d.kind == "layered") {
    d.t = j.value("t", std::size_t{0});
    d.rho = j.value("rho", std::size_t{0});
    if (j.contains("points")) {
      d.points = parse_elems(*d.tower, field<std::vector<std::string>>(j, "points"));
    }
  } else {
    const auto rows = field<std::vector<std::vector<std::string>>>(j, "h");
    std::vector<std::vector<Elem>> parsed;
    for (const auto& r : rows) parsed.push_back(parse_elems(*d.tower, r));
    d.h = linalg::ExtMatrix::from_rows(d.tower, parsed, d.n);
    require(d.h.rows() == d.k, ErrorCode::ShapeMismatch, "coset parity check must have k rows");
  }
  return d;
}

json to_json(const CodeDescriptor& d) {
  return {{"format_version", kFormatVersion},
          {"tower", d.tower->spec()},
          {"n", d.n},
          {"k", d.k},
          {"points", format_elems(*d.tower, d.points)}};
}

CodeDescriptor code_from_json(const json& j) {
  check_version(j);
  CodeDescriptor d;
  d.tower = gf::FieldTower::parse(field<std::string>(j, "tower"));
  d.n = field<std::size_t>(j, "n");
  d.k = field<std::size_t>(j, "k");
  if (j.contains("points")) d.points = parse_elems(*d.tower, field<std::vector<std::string>>(j, "points"));
  return d;
}

json to_json(const netsim::Topology& t) {
  json edges = json::array();
  for (const auto& e : t.edges()) edges.push_back({e.tail, e.head});
  return {{"format_version", kFormatVersion},
          {"nodes", t.nodes()},
          {"edges", edges},
          {"source", t.source()},
          {"destinations", t.destinations()},
          {"coding", coding_name(t.mode())}};
}

netsim::Topology topology_from_json(const json& j) {
  check_version(j);
  std::vector<netsim::Edge> edges;
  for (const auto& pair : field<std::vector<std::vector<std::size_t>>>(j, "edges")) {
    require(pair.size() == 2, ErrorCode::Parse, "edges are [tail, head] pairs");
    edges.push_back({pair[0], pair[1]});
  }
  const std::string coding = j.value("coding", std::string("random"));
  require(coding == "random" || coding == "routing" || coding == "nonzero", ErrorCode::Parse,
          "coding must be 'random', 'nonzero' or 'routing'");
  return netsim::Topology(field<std::size_t>(j, "nodes"), std::move(edges),
                          field<std::size_t>(j, "source"),
                          field<std::vector<std::size_t>>(j, "destinations"),
                          coding == "routing"   ? netsim::CodingMode::Routing
                          : coding == "nonzero" ? netsim::CodingMode::Nonzero
                                                : netsim::CodingMode::Random);
}

json to_json(const CampaignConfig& c) {
  return {{"format_version", kFormatVersion},
          {"mu", c.mu},
          {"t", c.t},
          {"trials", c.trials},
          {"seed", c.seed}};
}

CampaignConfig campaign_from_json(const json& j) {
  check_version(j);
  CampaignConfig c;
  c.mu = field<std::size_t>(j, "mu");
  c.t = field<std::size_t>(j, "t");
  c.trials = field<std::size_t>(j, "trials");
  c.seed = field<std::uint64_t>(j, "seed");
  return c;
}

}  // namespace rankcrypt::io
