// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes inside its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cli/campaign.hpp"
#include "cli/scheme.hpp"
#include "oracles.hpp"
#include "rankcrypt/gabidulin/code.hpp"
#include "rankcrypt/linalg/algorithms.hpp"
#include "rankcrypt/linalg/enumerate.hpp"
#include "rankcrypt/netsim/topology.hpp"
#include "rankcrypt/secrecy/coset.hpp"
#include "rankcrypt/secrecy/layered.hpp"
#include "rankcrypt/verify/converse.hpp"
#include "rankcrypt/verify/encoder.hpp"
#include "rankcrypt/verify/leakage.hpp"
#include "rankcrypt/verify/zero_error.hpp"

using namespace rankcrypt;
using linalg::BaseMatrix;
using linalg::ExtMatrix;
using linalg::ExtVector;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

oracle::Field oracle_field(const gf::FieldTower& f) { return {f.q(), f.m(), f.modulus()}; }

template <typename M>
std::vector<std::vector<oracle::Word>> rows_of(const M& a) {
  std::vector<std::vector<oracle::Word>> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) out[r].assign(a.row(r).begin(), a.row(r).end());
  return out;
}

gf::TowerPtr gf8() { return gf::FieldTower::create(2, 3); }
gf::TowerPtr gf16() { return gf::FieldTower::create(2, 4); }

ExtMatrix example_h() { return ExtMatrix(gf8(), {{1, 2, 4}}); }

std::vector<ExtVector> all_vectors(const gf::FieldTower& f, std::size_t len) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= f.size();
  std::vector<ExtVector> out(total, ExtVector(len));
  for (std::uint64_t i = 0; i < total; ++i) linalg::unpack_index(i, f.size(), out[i]);
  return out;
}

// Independent factorization test on (S, B X) counts collected with std::map.
bool counts_factorize(const verify::EnumerableEncoder& enc, const BaseMatrix& b) {
  const auto& f = *enc.tower();
  const ExtMatrix be = linalg::embed(b);
  std::map<std::pair<ExtVector, ExtVector>, std::uint64_t> joint;
  std::map<ExtVector, std::uint64_t> ps, pw;
  std::uint64_t total = 0;
  for (const auto& s : all_vectors(f, enc.message_length())) {
    for (const auto& v : all_vectors(f, enc.randomness_length())) {
      const auto w = linalg::apply(be, enc.encode(s, v));
      ++joint[{s, w}];
      ++ps[s];
      ++pw[w];
      ++total;
    }
  }
  for (const auto& [sv, w] : ps) {
    (void)w;
    for (const auto& [wv, c] : pw) {
      const auto it = joint.find({sv, wv});
      const std::uint64_t sw = it == joint.end() ? 0 : it->second;
      if (sw * total != ps[sv] * c) return false;
    }
  }
  return true;
}

Outcome criterion_gf8_example() {
  Outcome o;
  const auto t = gf8();
  const auto enc = verify::coset_encoder(secrecy::CosetScheme(example_h()));
  const auto reps = verify::observation_representatives(t, 3, 2);
  o.expect(reps.size() == 15, "expected 1 + 7 + 7 row spaces");
  const auto of = oracle_field(*t);
  for (const auto& b : reps) {
    const auto rep = verify::mutual_information(enc, b);
    o.expect(rep.zero && rep.exact && rep.packets == verify::Rational{0, 1},
             "nonzero leakage for some B with at most 2 rows");
    o.expect(std::fabs(oracle::coset_mutual_information(of, rows_of(example_h()), rows_of(b), 3)) < 1e-9,
             "floating oracle disagrees");
  }
  const BaseMatrix b(t, {{1, 0, 1}, {0, 1, 1}});
  const auto table = verify::joint_table(enc, b);
  o.expect(table.observations.size() == 64, "expected 64 observations");
  for (std::uint64_t s = 0; s < table.messages; ++s)
    for (std::size_t w = 0; w < table.observations.size(); ++w)
      o.expect(table.conditional(s, w) == verify::Rational{1, 64}, "Pr(W|S) != 1/64");
  o.detail = o.pass ? "15 row spaces, I(S;W) = 0; Pr(W|S) = 1/64 on all 8 x 64 cells" : o.detail;
  return o;
}

Outcome criterion_mrd() {
  Outcome o;
  std::ostringstream d;
  for (auto [m, n, k] : std::vector<std::array<std::size_t, 3>>{{3, 3, 1}, {3, 3, 2}, {4, 4, 1}, {4, 4, 2}, {4, 4, 3}}) {
    const auto t = gf::FieldTower::create(2, static_cast<std::uint32_t>(m));
    const auto c = gabidulin::GabidulinCode::build(t, n, k);
    const std::size_t dist = gabidulin::min_rank_distance_bruteforce(c);
    const std::size_t indep = oracle::min_distance_from_parity(oracle_field(*t), rows_of(c.parity_check()), n);
    o.expect(dist == n - k + 1 && indep == dist,
             "distance mismatch for [" + std::to_string(n) + "," + std::to_string(k) + "]");
    d << "[" << n << "," << k << "]:" << dist << " ";
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome criterion_unique_decoding() {
  Outcome o;
  const auto t = gf16();
  const std::size_t n = 4;
  const auto c41 = gabidulin::GabidulinCode::build(t, n, 1);
  const auto codewords = all_vectors(*t, 1);
  std::vector<std::vector<ExtVector>> errors(2);
  errors[0] = {ExtVector(n, 0)};
  errors[1] = linalg::rank_bounded_vectors(t, n, 1);
  o.expect(errors[1].size() == 226, "expected 226 rank <= 1 errors");

  // Group A by rank so each budget reuses the same matrices.
  std::vector<std::vector<BaseMatrix>> by_rank(n + 1);
  for (std::uint64_t idx = 0; idx < (1ull << 16); ++idx) {
    auto a = linalg::base_matrix_from_index(t, n, n, idx);
    const std::size_t r = linalg::rank(a);
    by_rank[r].push_back(std::move(a));
  }
  std::uint64_t decodes = 0, rotate = 0;
  for (std::size_t tt = 0; tt <= 1; ++tt) {
    for (std::size_t rho = 0; 2 * tt + rho <= 3; ++rho) {
      for (std::size_t r = n - rho; r <= n; ++r) {
        for (const auto& a : by_rank[r]) {
          const gabidulin::OracleDecoder dec(c41.generator(), a, tt, rho);
          const ExtMatrix ae = linalg::embed(a);
          for (const auto& z : errors[tt]) {
            // The message rotates through all 16 values; the outcome is
            // translation invariant, so every (A, Z) pair is certified.
            const ExtVector& u = codewords[rotate++ % codewords.size()];
            const auto y = linalg::add(*t, linalg::apply(ae, c41.encode(u)), z);
            const auto res = dec.decode(y);
            ++decodes;
            if (!res.ok() || res.message != u) {
              o.expect(false, "d=4 decode failed at t=" + std::to_string(tt) + " rho=" + std::to_string(rho));
              return o;
            }
          }
        }
      }
    }
  }
  const auto c43 = gabidulin::GabidulinCode::build(t, n, 3);
  const auto w = verify::ambiguity_witness(c43.generator(), 1, 0);
  o.expect(w.has_value(), "no witness for d=2");
  if (w) {
    o.expect(verify::witness_holds(*w, 1, 0), "witness violates the channel model");
    o.expect(c43.contains(w->x1) && c43.contains(w->x2), "witness words are not codewords");
    const auto r = gabidulin::decode_oracle(c43, w->a, w->y, 1, 0);
    o.expect(r.status == gabidulin::DecodeStatus::Ambiguous, "oracle did not report Ambiguous");
  }
  if (o.pass) o.detail = std::to_string(decodes) + " oracle decodes for d=4; d=2 witness is ambiguous";
  return o;
}

Outcome criterion_tradeoff() {
  Outcome o;
  const auto sch = secrecy::LayeredScheme::build(gf16(), 4, 1, 1, 1, 0);
  const auto enc = verify::layered_encoder(sch);
  const auto rep = verify::check_tradeoff(enc, 1, 0);
  std::set<std::pair<std::size_t, std::size_t>> covered;
  for (const auto& e : rep.entries) {
    covered.insert({e.t, e.rho});
    o.expect(e.pass, "fan-out sets meet at t'=" + std::to_string(e.t) + " rho'=" + std::to_string(e.rho));
  }
  const std::set<std::pair<std::size_t, std::size_t>> region{{0, 0}, {0, 1}, {0, 2}, {1, 0}};
  o.expect(covered == region, "trade region not fully covered");
  o.expect(rep.pass, "tradeoff report failed");
  // Every transfer matrix, not only one per row space, for the erasure-only points.
  for (std::size_t rho = 1; rho <= 2; ++rho)
    o.expect(verify::check_zero_error(enc, 0, rho, verify::TransferSweep::All).pass,
             "full transfer sweep failed at rho'=" + std::to_string(rho));
  if (o.pass) o.detail = "(0,0) (0,1) (0,2) (1,0) disjoint";
  return o;
}

Outcome criterion_combined() {
  Outcome o;
  const auto t = gf16();
  const auto sch = secrecy::LayeredScheme::build(t, 4, 1, 1, 1, 0);
  const auto errors = linalg::rank_bounded_vectors(t, 4, 1);
  o.expect(errors.size() == 226, "expected 226 errors");
  const BaseMatrix id = BaseMatrix::identity(t, 4);
  std::size_t decodes = 0;
  for (Elem s = 0; s < 16; ++s) {
    for (Elem v = 0; v < 16; ++v) {
      const std::vector<Elem> msg{s}, rnd{v};
      const auto x = sch.encode_with(msg, rnd);
      for (const auto& e : errors) {
        const auto r = sch.decode(id, linalg::add(*t, x, e));
        ++decodes;
        if (!r.ok() || r.message != msg) {
          o.expect(false, "decode failed for s=" + std::to_string(s));
          return o;
        }
      }
    }
  }
  const auto enc = verify::layered_encoder(sch);
  const auto reps = verify::observation_representatives(t, 4, 1, 1);
  o.expect(reps.size() == 15, "expected 15 one-row observations");
  for (const auto& b : reps) {
    const auto rep = verify::mutual_information(enc, b);
    o.expect(rep.zero && rep.exact, "leakage for a one-row B");
    o.expect(counts_factorize(enc, b), "independent count table does not factorize");
  }
  if (o.pass) o.detail = std::to_string(decodes) + " decodes exact; 15 one-row B leak 0";
  return o;
}

Outcome criterion_bridge() {
  Outcome o;
  struct Fixture {
    std::string name;
    ExtMatrix h;
    std::size_t mu;
  };
  const auto t8 = gf8();
  const auto t16 = gf16();
  std::vector<Fixture> fixtures{
      {"[1 a a^2] mu=2", example_h(), 2},
      {"[1 a a^2] mu=1", example_h(), 1},
      {"[1 a a^2] mu=3", example_h(), 3},
      {"non-MRD [1 1 a] mu=2", ExtMatrix(t8, {{1, 1, 2}}), 2},
      {"non-MRD [1 1 0] mu=1", ExtMatrix(t8, {{1, 1, 0}}), 1},
      {"non-MRD 2x4 with a binary row", ExtMatrix(t16, {{1, 1, 0, 0}, {0, 0, 1, 2}}), 2},
      {"layered n=4 k=1 mu=3", secrecy::LayeredScheme::build(t16, 4, 1, 3, 0, 0).secrecy_parity(), 3},
      {"layered n=4 k=2 mu=2", secrecy::LayeredScheme::build(t16, 4, 2, 2, 0, 0).secrecy_parity(), 2},
  };
  std::size_t passes = 0, fails = 0;
  for (const auto& fx : fixtures) {
    const bool additive = verify::check_rank_additivity(fx.h, fx.mu).pass;
    const bool secure =
        verify::check_universal_secrecy(verify::coset_encoder(secrecy::CosetScheme(fx.h)), fx.mu).pass;
    o.expect(additive == secure, "verdicts disagree on " + fx.name);
    (secure ? passes : fails) += 1;
  }
  o.expect(passes > 0 && fails >= 2, "fixture suite lacks both verdicts");
  if (o.pass) o.detail = std::to_string(fixtures.size()) + " fixtures agree (" + std::to_string(passes) +
                         " pass, " + std::to_string(fails) + " fail)";
  return o;
}

Outcome criterion_rank_expression() {
  Outcome o;
  const auto t = gf8();
  const auto of = oracle_field(*t);
  std::mt19937_64 rng(20261017);
  auto draw = [&](std::uint32_t bound) { return static_cast<Elem>(rng() % bound); };
  std::size_t pairs = 0, nonzero = 0;
  while (pairs < 24) {
    const std::size_t k = 1 + draw(2);
    ExtMatrix h(t, k, 3);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < 3; ++j) h(i, j) = draw(8);
    if (linalg::rank(h) != k) continue;
    const std::size_t rows = 1 + draw(3);
    BaseMatrix b(t, rows, 3);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < 3; ++j) b(i, j) = draw(2);
    const auto rep = verify::mutual_information(verify::coset_encoder(secrecy::CosetScheme(h)), b);
    const auto bounds = verify::coset_leakage_bounds(h, linalg::embed(b), verify::CosetHypothesis::UniformMessage);
    const std::size_t expect = linalg::rank(h) + linalg::rank(b) - linalg::rank(linalg::vstack(h, linalg::embed(b)));
    o.expect(bounds.lower && *bounds.lower == expect, "bound value mismatch");
    o.expect(rep.exact && rep.packets == verify::Rational{expect, 1}, "exact MI differs from the rank expression");
    o.expect(std::fabs(oracle::coset_mutual_information(of, rows_of(h), rows_of(b), 3) - double(expect)) < 1e-9,
             "floating oracle disagrees");
    nonzero += expect > 0;
    ++pairs;
  }
  o.expect(nonzero > 0, "sample never exercised a nonzero bound");
  if (o.pass) o.detail = std::to_string(pairs) + " pairs equal (" + std::to_string(nonzero) + " with leakage)";
  return o;
}

Outcome criterion_converse() {
  Outcome o;
  const auto low = verify::converse_search_packet_length(2, 2, 1, 1, 1);
  o.expect(low.candidates.size() == 3, "expected 3 parity checks at m=1");
  o.expect(low.all_leak(), "some m=1 encoder is secure");
  for (const auto& c : low.candidates) o.expect(c.witness.has_value(), "leaking encoder without witness");
  const auto high = verify::converse_search_packet_length(2, 2, 1, 1, 2);
  o.expect(high.secure_count > 0, "no secure encoder at m=2");
  bool mrd_secure = false;
  for (const auto& c : high.candidates) {
    if (c.secure) {
      o.expect(gabidulin::min_rank_distance_bruteforce(linalg::right_null_space(c.h).basis()) == 2,
               "a secure m=2 encoder whose code is not MRD");
      mrd_secure = true;
    }
  }
  o.expect(mrd_secure, "no MRD secure encoder");
  o.expect(low.label == std::string(verify::kFiniteSearchLabel), "report label");
  if (o.pass) o.detail = "m=1: 3/3 leak; m=2: " + std::to_string(high.secure_count) + "/" +
                         std::to_string(high.candidates.size()) + " secure (" + low.label + ")";
  return o;
}

Outcome criterion_syndrome_vs_oracle() {
  Outcome o;
  const auto t = gf16();
  const auto c = gabidulin::GabidulinCode::build(t, 4, 2);
  const auto errors = linalg::rank_bounded_vectors(t, 4, 1);
  const gabidulin::OracleDecoder oracle_dec(c.generator(), BaseMatrix::identity(t, 4), 1, 0);
  std::size_t pairs = 0;
  for (const auto& u : all_vectors(*t, 2)) {
    const auto x = c.encode(u);
    for (const auto& e : errors) {
      const auto y = linalg::add(*t, x, e);
      const auto a = gabidulin::decode_syndrome(c, y, 1);
      const auto b = oracle_dec.decode(y);
      ++pairs;
      if (a.status != b.status || a.message != b.message || !a.ok() || a.message != u) {
        o.expect(false, "decoders disagree");
        return o;
      }
    }
  }
  o.detail = std::to_string(pairs) + " (codeword, error) pairs agree";
  return o;
}

Outcome criterion_campaign() {
  Outcome o;
  io::SchemeDescriptor d;
  d.kind = "coset";
  d.tower = gf8();
  d.n = 3;
  d.k = 1;
  d.mu = 2;
  d.h = example_h();
  const cli::Scheme scheme(d);
  const auto result = cli::run_campaign(scheme, netsim::Topology::butterfly(true, netsim::CodingMode::Nonzero), io::CampaignConfig{2, 0, 100, 2026});
  std::size_t feasible = 0, skipped = 0;
  for (const auto& r : result.records) {
    if (r.decode == "skipped") {
      ++skipped;
      o.expect(r.leakage == "skipped" && r.rho > 0, "skipped trial with rho within budget");
      continue;
    }
    ++feasible;
    o.expect(r.decode == "pass", "decode " + r.decode_status + " in trial " + std::to_string(r.trial));
    o.expect(r.leakage == "pass", "leakage in trial " + std::to_string(r.trial));
  }
  o.expect(result.records.size() == 100, "expected 100 trials");
  o.expect(feasible > 0, "no feasible realization");
  if (o.pass) o.detail = std::to_string(feasible) + " feasible all pass, " + std::to_string(skipped) + " skipped";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"gf8-worked-example-secrecy", 1, criterion_gf8_example},
      {"gabidulin-mrd-distance", 10, criterion_mrd},
      {"unique-decoding-iff-distance", 60, criterion_unique_decoding},
      {"error-erasure-tradeoff", 300, criterion_tradeoff},
      {"combined-scheme-n4", 120, criterion_combined},
      {"rank-additivity-secrecy-bridge", 300, criterion_bridge},
      {"rank-expression-leakage", 60, criterion_rank_expression},
      {"packet-length-converse-search", 1, criterion_converse},
      {"syndrome-decoder-equals-oracle", 300, criterion_syndrome_vs_oracle},
      {"butterfly-campaign", 300, criterion_campaign},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && secs > c.budget_s) {
      out = {false, "over time budget of " + std::to_string(c.budget_s) + " s"};
    }
    failed += out.pass ? 0 : 1;
    std::printf("%s %2zu %-32s %8.3fs  %s\n", out.pass ? "PASS" : "FAIL", i + 1, c.name, secs, out.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
