// SPDX-License-Identifier: Apache-2.0

#include "cli/report.hpp"

#include "rankcrypt/io/text_format.hpp"

namespace rankcrypt::cli {

using nlohmann::json;

namespace {

const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

std::string vector_text(const gf::TowerPtr& tower, std::span<const Elem> v) {
  return io::format_vector(*tower, v);
}

}  // namespace

json to_json(const verify::Rational& r) { return {{"num", r.num}, {"den", r.den}}; }

json to_json(const verify::LeakageReport& r) {
  json j = {{"zero", r.zero},
            {"exact", r.exact},
            {"packets_approx", static_cast<double>(r.approx)},
            {"rounding_bound", static_cast<double>(r.error_bound)},
            {"table", {{"messages", r.messages}, {"observations", r.observations}}}};
  if (r.exact) j["packets"] = to_json(r.packets);
  return j;
}

json to_json(const verify::SecrecyVerdict& v) {
  json j = {{"verdict", verdict(v.pass)}, {"observations_checked", v.checked}};
  if (v.witness) j["witness_b"] = io::format_matrix(*v.witness);
  if (v.witness_leakage) j["witness_leakage"] = to_json(*v.witness_leakage);
  return j;
}

json to_json(const verify::AdditivityVerdict& v) {
  json j = {{"verdict", verdict(v.pass)}, {"observations_checked", v.checked}};
  if (v.witness) j["witness_b"] = io::format_matrix(*v.witness);
  return j;
}

json to_json(const verify::ZeroErrorReport& r) {
  json j = {{"t", r.t},
            {"rho", r.rho},
            {"verdict", verdict(r.pass)},
            {"transfer_matrices", r.transfer_matrices},
            {"error_patterns", r.error_patterns}};
  if (r.witness) {
    const auto& w = *r.witness;
    const auto& tower = w.a.tower();
    j["witness"] = {{"s1", vector_text(tower, w.s1)}, {"s2", vector_text(tower, w.s2)},
                    {"x1", vector_text(tower, w.x1)}, {"x2", vector_text(tower, w.x2)},
                    {"a", io::format_matrix(w.a)},    {"y", vector_text(tower, w.y)},
                    {"z1", vector_text(tower, w.z1)}, {"z2", vector_text(tower, w.z2)}};
  }
  return j;
}

json to_json(const verify::TradeoffReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return {{"t", r.t}, {"rho", r.rho}, {"verdict", verdict(r.pass)}, {"region", entries}};
}

json to_json(const verify::ConverseReport& r) {
  json cands = json::array();
  for (const auto& c : r.candidates) {
    json e = {{"h", io::format_matrix(c.h)}, {"secure", c.secure}};
    if (c.witness) e["witness_b"] = io::format_matrix(*c.witness);
    if (c.leakage) e["leakage"] = to_json(*c.leakage);
    cands.push_back(e);
  }
  return {{"label", r.label}, {"q", r.q},   {"m", r.m},
          {"n", r.n},         {"mu", r.mu}, {"k", r.k},
          {"candidates", cands}, {"secure_count", r.secure_count}, {"all_leak", r.all_leak()}};
}

json to_json(const verify::RateGateReport& r) {
  json mism = json::array();
  for (const auto& m : r.mismatches) mism.push_back(m);
  return {{"label", r.label},
          {"verdict", verdict(r.pass())},
          {"tuples_checked", r.checked},
          {"accepted", r.accepted},
          {"mismatches", mism}};
}

}  // namespace rankcrypt::cli
