// SPDX-License-Identifier: Apache-2.0

#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "cli/campaign.hpp"
#include "cli/report.hpp"
#include "cli/scheme.hpp"
#include "rankcrypt/io/packets.hpp"
#include "rankcrypt/io/text_format.hpp"
#include "rankcrypt/rng.hpp"
#include "rankcrypt/verify/converse.hpp"
#include "rankcrypt/verify/zero_error.hpp"

namespace rankcrypt::cli {

namespace {

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Scheme load_scheme(const std::string& path) {
  return Scheme(io::scheme_from_json(io::parse_json(io::read_text(path))));
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

struct BuildArgs {
  std::uint32_t q = 2, m = 0;
  std::size_t n = 0, k = 0, mu = 0, t = 0, rho = 0;
  std::string modulus;
  std::string out;
};

void cmd_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::uint32_t> modulus;
  for (const auto& c : split(a.modulus, ',')) modulus.push_back(static_cast<std::uint32_t>(std::stoul(c)));
  const gf::TowerPtr tower = gf::FieldTower::create(a.q, a.m, modulus);
  io::SchemeDescriptor d;
  d.kind = "layered";
  d.tower = tower;
  d.n = a.n;
  d.k = a.k;
  d.mu = a.mu;
  d.t = a.t;
  d.rho = a.rho;
  const Scheme scheme(d);
  emit(a.out, io::to_json(scheme.descriptor()).dump(2) + "\n", out);
  // Keep stdout pure JSON when the descriptor goes there.
  std::ostream& note = (a.out.empty() || a.out == "-") ? err : out;
  note << "rate k=" << a.k << " packets, minimum rank distance d=" << scheme.layered()->d() << "\n";
}

struct CodingArgs {
  std::string scheme, in, out, transfer;
  std::uint64_t seed = 0;
};

void cmd_encode(const CodingArgs& a, std::ostream&) {
  const Scheme scheme = load_scheme(a.scheme);
  const gf::FieldTower& f = *scheme.tower();
  const auto bytes = io::read_bytes(a.in);
  const std::size_t k = scheme.k();
  require(k > 0, ErrorCode::ShapeMismatch, "scheme carries no message (k = 0)");
  const auto msg = io::unpack_symbols(f, bytes, k);
  std::vector<Elem> packets;
  for (std::size_t b = 0; b * k < msg.size(); ++b) {
    const auto x = scheme.encode(std::span(msg).subspan(b * k, k), mix_seed(a.seed, b));
    packets.insert(packets.end(), x.begin(), x.end());
  }
  io::write_bytes(a.out, io::pack_symbols(f, packets));
}

void cmd_decode(const CodingArgs& a, std::ostream&) {
  const Scheme scheme = load_scheme(a.scheme);
  const gf::FieldTower& f = *scheme.tower();
  const std::size_t n = scheme.n();
  const auto y = io::unpack_symbols(f, io::read_bytes(a.in), n);
  linalg::BaseMatrix transfer = linalg::BaseMatrix::identity(scheme.tower(), n);
  if (!a.transfer.empty()) {
    transfer = io::parse_base_matrix(scheme.tower(), io::read_text(a.transfer));
    require(transfer.rows() == n && transfer.cols() == n, ErrorCode::ShapeMismatch,
            "transfer matrix must be n x n");
  }
  std::vector<Elem> message;
  for (std::size_t b = 0; b * n < y.size(); ++b) {
    const auto r = scheme.decode(transfer, std::span(y).subspan(b * n, n));
    if (!r.ok()) {
      throw DecodeError("block " + std::to_string(b) + ": " + gabidulin::to_string(r.status) +
                        (r.detail.empty() ? "" : " (" + r.detail + ")"));
    }
    message.insert(message.end(), r.message.begin(), r.message.end());
  }
  io::write_bytes(a.out, io::pack_symbols(f, message));
}

struct SimulateArgs {
  std::string scheme, topology, config, out;
};

void cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const Scheme scheme = load_scheme(a.scheme);
  const auto topology = io::topology_from_json(io::parse_json(io::read_text(a.topology)));
  const auto config = io::campaign_from_json(io::parse_json(io::read_text(a.config)));
  const CampaignResult result = run_campaign(scheme, topology, config);
  emit(a.out, to_csv(result), out);
  if (!a.out.empty() && a.out != "-") {
    out << "decode pass " << result.count(&TrialRecord::decode, "pass") << ", fail "
        << result.count(&TrialRecord::decode, "fail") << ", skipped "
        << result.count(&TrialRecord::decode, "skipped") << "; leakage pass "
        << result.count(&TrialRecord::leakage, "pass") << ", fail "
        << result.count(&TrialRecord::leakage, "fail") << "\n";
  }
}

struct VerifyArgs {
  std::string scheme, checks = "secrecy,rank-additivity", out, converse;
  std::size_t rate_gate_n = 6;
};

bool cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Scheme scheme = load_scheme(a.scheme);
  nlohmann::json report = {{"format_version", io::kFormatVersion},
                           {"scheme", io::to_json(scheme.descriptor())},
                           {"checks", nlohmann::json::object()}};
  bool all_pass = true;
  const auto enc = scheme.encoder();
  for (const auto& check : split(a.checks, ',')) {
    nlohmann::json j;
    bool pass = false;
    try {
      if (check == "secrecy") {
        const auto v = verify::check_universal_secrecy(enc, scheme.mu());
        j = to_json(v);
        pass = v.pass;
      } else if (check == "rank-additivity") {
        const auto v = verify::check_rank_additivity(scheme.secrecy_parity(), scheme.mu());
        j = to_json(v);
        pass = v.pass;
      } else if (check == "zero-error") {
        const auto v = verify::check_zero_error(enc, scheme.t(), scheme.rho());
        j = to_json(v);
        pass = v.pass;
      } else if (check == "tradeoff") {
        const auto v = verify::check_tradeoff(enc, scheme.t(), scheme.rho());
        j = to_json(v);
        pass = v.pass;
      } else if (check == "converse") {
        std::uint32_t q = scheme.tower()->q(), m = scheme.tower()->m();
        std::size_t n = scheme.n(), mu = scheme.mu(), k = scheme.k();
        if (!a.converse.empty()) {
          const auto p = split(a.converse, ',');
          require(p.size() == 5, ErrorCode::InvalidArgument, "--converse takes q,n,mu,k,m");
          q = static_cast<std::uint32_t>(std::stoul(p[0]));
          n = std::stoul(p[1]);
          mu = std::stoul(p[2]);
          k = std::stoul(p[3]);
          m = static_cast<std::uint32_t>(std::stoul(p[4]));
        }
        const auto v = verify::converse_search_packet_length(q, n, mu, k, m);
        j = to_json(v);
        // Secure encoders must exist exactly when m >= n (or nothing is sent).
        pass = (k == 0 || m >= n) ? v.secure_count > 0 : v.all_leak();
        j["verdict"] = pass ? "pass" : "fail";
      } else if (check == "rate-gate") {
        const auto v = verify::sweep_rate_gate(a.rate_gate_n);
        j = to_json(v);
        pass = v.pass();
      } else {
        throw CLI::ValidationError("--checks", "unknown check '" + check + "'");
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      j = {{"verdict", "cap-exceeded"}, {"message", e.what()}};
      pass = false;
    }
    report["checks"][check] = j;
    all_pass = all_pass && pass;
  }
  report["verdict"] = all_pass ? "pass" : "fail";
  emit(a.out, report.dump(2) + "\n", out);
  return all_pass;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::CapExceeded ? kExitVerify : kExitUsage;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal secure network coding with rank-metric codes"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Write a layered scheme descriptor");
  b->add_option("--q", build.q, "Base field prime")->default_val(2);
  b->add_option("--m", build.m, "Extension degree")->required();
  b->add_option("--n", build.n, "Packets per block")->required();
  b->add_option("--k", build.k, "Message packets")->required();
  b->add_option("--mu", build.mu, "Eavesdropper budget")->default_val(0);
  b->add_option("--t", build.t, "Error budget")->default_val(0);
  b->add_option("--rho", build.rho, "Rank deficiency budget")->default_val(0);
  b->add_option("--modulus", build.modulus, "Ascending coefficients c0,...,cm");
  b->add_option("--out", build.out, "Descriptor path (stdout if omitted)");

  CodingArgs enc_args, dec_args;
  auto* e = app.add_subcommand("encode", "Encode a message file into packets");
  e->add_option("--scheme", enc_args.scheme)->required();
  e->add_option("--in", enc_args.in, "Message file")->required();
  e->add_option("--out", enc_args.out, "Packet file")->required();
  e->add_option("--seed", enc_args.seed, "Randomness seed")->default_val(0);

  auto* d = app.add_subcommand("decode", "Decode received packets into a message file");
  d->add_option("--scheme", dec_args.scheme)->required();
  d->add_option("--in", dec_args.in, "Received packet file")->required();
  d->add_option("--out", dec_args.out, "Message file")->required();
  d->add_option("--transfer", dec_args.transfer, "Transfer matrix A as matrix text");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Run a network campaign and write CSV results");
  s->add_option("--scheme", sim.scheme)->required();
  s->add_option("--topology", sim.topology)->required();
  s->add_option("--config", sim.config, "Campaign config JSON")->required();
  s->add_option("--out", sim.out, "CSV path (stdout if omitted)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run exhaustive checks and write a JSON report");
  v->add_option("--scheme", ver.scheme)->required();
  v->add_option("--checks", ver.checks,
                "Comma list: secrecy,rank-additivity,zero-error,tradeoff,converse,rate-gate");
  v->add_option("--converse", ver.converse, "Override converse parameters q,n,mu,k,m");
  v->add_option("--rate-gate-n", ver.rate_gate_n, "Largest n in the rate-gate sweep")
      ->default_val(6);
  v->add_option("--out", ver.out, "Report path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (b->parsed()) cmd_build(build, out, err);
    if (e->parsed()) cmd_encode(enc_args, out);
    if (d->parsed()) cmd_decode(dec_args, out);
    if (s->parsed()) cmd_simulate(sim, out);
    if (v->parsed() && !cmd_verify(ver, out)) return kExitVerify;
  } catch (const DecodeError& ex) {
    err << "decode failed: " << ex.what() << "\n";
    return kExitDecode;
  } catch (const Error& ex) {
    err << "error (" << to_string(ex.code()) << "): " << ex.what() << "\n";
    return exit_code_for(ex.code());
  } catch (const CLI::Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: bad number: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace rankcrypt::cli
