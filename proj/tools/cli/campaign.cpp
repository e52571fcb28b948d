// SPDX-License-Identifier: Apache-2.0

#include "cli/campaign.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "rankcrypt/gf/phi.hpp"
#include "rankcrypt/linalg/algorithms.hpp"
#include "rankcrypt/netsim/network.hpp"
#include "rankcrypt/rng.hpp"
#include "rankcrypt/verify/leakage.hpp"

namespace rankcrypt::cli {

std::size_t CampaignResult::count(const std::string TrialRecord::*field,
                                  const std::string& value) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [&](const TrialRecord& r) { return r.*field == value; }));
}

namespace {

void subsets(std::size_t n, std::size_t max_size, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  out.push_back(cur);
  if (cur.size() == max_size) return;
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, max_size, i + 1, cur, out);
    cur.pop_back();
  }
}

TrialRecord run_trial(const Scheme& scheme, const netsim::Topology& topology,
                      const io::CampaignConfig& config, std::size_t trial) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = mix_seed(config.seed, trial);
  const gf::TowerPtr& tower = scheme.tower();
  const gf::FieldTower& f = *tower;

  const netsim::NetworkInstance net = netsim::realize(topology, tower, scheme.n(), rec.seed);
  rec.rho = netsim::rank_deficiency(net);
  if (rec.rho > scheme.rho()) {
    rec.decode = rec.decode_status = rec.leakage = "skipped";
    return rec;
  }

  Rng rng(mix_seed(rec.seed, 1));
  std::vector<Elem> s(scheme.k());
  for (Elem& e : s) e = static_cast<Elem>(rng.below(f.size()));
  const linalg::ExtVector x = scheme.encode(s, mix_seed(rec.seed, 2));
  const linalg::BaseMatrix packets = gf::phi_expand(tower, x);

  netsim::AdversaryAction action;
  if (config.t > 0) {
    action.injection = linalg::BaseMatrix(tower, net.edge_count(), f.m());
    std::vector<std::size_t> edges(net.edge_count());
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i] = i;
    for (std::size_t i = 0; i < std::min(config.t, edges.size()); ++i) {
      std::swap(edges[i], edges[i + rng.below(edges.size() - i)]);
      const Elem row = static_cast<Elem>(1 + rng.below(f.size() - 1));
      const auto digits = f.digits(row);
      for (std::uint32_t c = 0; c < f.m(); ++c) action.injection(edges[i], c) = digits[c];
    }
  }

  rec.decode = "pass";
  rec.decode_status = "ok";
  for (std::size_t r = 0; r < net.receivers().size(); ++r) {
    const linalg::BaseMatrix y = netsim::transmit(net, packets, action, r);
    const auto reduced = netsim::receiver_reduce(net.coding_rows(net.receivers()[r]), y);
    const auto out = scheme.decode(reduced.a, gf::phi_contract(reduced.y));
    if (!out.ok()) {
      rec.decode = "fail";
      rec.decode_status = gabidulin::to_string(out.status);
      break;
    }
    if (out.message != s) {
      rec.decode = "fail";
      rec.decode_status = "wrong";
      break;
    }
  }

  // Exact leakage of every wiretap set, one computation per row space.
  const verify::EnumerableEncoder enc = scheme.encoder();
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> cur;
  subsets(net.edge_count(), config.mu, 0, cur, sets);
  std::map<std::vector<Elem>, long double> seen;
  bool zero = true;
  for (const auto& set : sets) {
    const linalg::BaseMatrix basis = linalg::row_space(net.coding_rows(set)).basis();
    auto key = basis.data();
    key.push_back(static_cast<Elem>(basis.rows()));
    if (seen.contains(key)) continue;
    const verify::LeakageReport rep = verify::mutual_information(enc, basis);
    seen.emplace(std::move(key), rep.approx);
    zero = zero && rep.zero;
    rec.leakage_bound = std::max(rec.leakage_bound, rep.approx);
  }
  rec.leakage = zero ? "pass" : "fail";
  return rec;
}

}  // namespace

CampaignResult run_campaign(const Scheme& scheme, const netsim::Topology& topology,
                            const io::CampaignConfig& config) {
  CampaignResult result;
  result.records.resize(config.trials);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), config.trials));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < config.trials; i += workers) {
          result.records[i] = run_trial(scheme, topology, config, i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

std::string to_csv(const CampaignResult& result) {
  std::ostringstream out;
  out << "format_version,trial,seed,rho,decode,decode_status,leakage,leakage_bound\n";
  for (const auto& r : result.records) {
    out << io::kFormatVersion << ',' << r.trial << ',' << r.seed << ',' << r.rho << ',' << r.decode << ','
        << r.decode_status << ',' << r.leakage << ',' << std::setprecision(12)
        << static_cast<double>(r.leakage_bound) << '\n';
  }
  return out.str();
}

}  // namespace rankcrypt::cli
