// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/verify/leakage.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>

#include "rankcrypt/linalg/enumerate.hpp"

namespace rankcrypt::verify {

std::uint64_t JointTable::observation_total(std::size_t w) const {
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < messages; ++s) total += count(s, w);
  return total;
}

Rational JointTable::conditional(std::uint64_t s, std::size_t w) const {
  const std::uint64_t num = count(s, w);
  const std::uint64_t g = std::gcd(num, randomness);
  return {num / g, randomness / g};
}

JointTable joint_table(const EnumerableEncoder& enc, const ExtMatrix& b) {
  linalg::require_same_tower(enc.tower(), b.tower());
  require(b.cols() == enc.n(), ErrorCode::ShapeMismatch, "observation matrix must have n columns");
  const gf::FieldTower& f = *enc.tower();
  JointTable t;
  t.messages = enc.message_count();
  t.randomness = enc.randomness_count();
  require(t.messages <= linalg::enumeration_cap() / t.randomness, ErrorCode::CapExceeded,
          "joint state enumeration exceeds the enumeration cap");
  const std::size_t w_len = b.rows();
  // W = (B M_s) s + (B M_v) v; tabulate both halves once.
  const std::vector<Elem> ws = image_table(b * enc.message_map);
  const std::vector<Elem> wv = image_table(b * enc.randomness_map);

  const double bits = std::log2(static_cast<double>(f.size())) * static_cast<double>(w_len);
  require(bits < 63, ErrorCode::CapExceeded, "observation space too large to index");

  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::vector<std::uint64_t>> rows(t.messages);
  std::vector<Elem> w(w_len);
  for (std::uint64_t s = 0; s < t.messages; ++s) {
    for (std::uint64_t v = 0; v < t.randomness; ++v) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < w_len; ++i) {
        w[i] = f.add(ws[s * w_len + i], wv[v * w_len + i]);
        key = key * f.size() + w[i];
      }
      auto [it, inserted] = index.try_emplace(key, t.observations.size());
      if (inserted) t.observations.push_back(w);
      auto& row = rows[s];
      if (row.size() <= it->second) row.resize(it->second + 1, 0);
      ++row[it->second];
    }
  }
  const std::size_t cols = t.observations.size();
  t.counts.assign(t.messages * cols, 0);
  for (std::uint64_t s = 0; s < t.messages; ++s) {
    std::copy(rows[s].begin(), rows[s].end(), t.counts.begin() + s * cols);
  }
  return t;
}

JointTable joint_table(const EnumerableEncoder& enc, const BaseMatrix& b) {
  return joint_table(enc, linalg::embed(b));
}

LeakageReport leakage_from_table(const JointTable& table, const gf::FieldTower& f) {
  LeakageReport r;
  r.messages = table.messages;
  r.observations = table.observations.size();
  r.observation_rows = table.observations.empty() ? 0 : table.observations.front().size();
  const std::uint64_t total = table.messages * table.randomness;

  std::vector<std::uint64_t> w_totals(r.observations);
  for (std::size_t w = 0; w < r.observations; ++w) w_totals[w] = table.observation_total(w);

  // Ratio count(s,w) * N / (count(s) * count(w)) for every nonzero cell.
  bool factorizes = true;
  bool constant_ratio = true;
  unsigned __int128 ratio_num = 0, ratio_den = 0;
  long double sum = 0;
  const long double log_field = std::log(static_cast<long double>(f.size()));
  for (std::uint64_t s = 0; s < table.messages; ++s) {
    for (std::size_t w = 0; w < r.observations; ++w) {
      const std::uint64_t c = table.count(s, w);
      const unsigned __int128 lhs = static_cast<unsigned __int128>(c) * total;
      const unsigned __int128 rhs = static_cast<unsigned __int128>(table.randomness) * w_totals[w];
      if (lhs != rhs) factorizes = false;
      if (c == 0) continue;
      if (ratio_den == 0) {
        ratio_num = lhs;
        ratio_den = rhs;
      } else if (lhs * ratio_den != rhs * ratio_num) {
        constant_ratio = false;
      }
      sum += static_cast<long double>(c) / total *
             std::log(static_cast<long double>(lhs) / static_cast<long double>(rhs));
    }
  }
  r.zero = factorizes;
  r.approx = factorizes ? 0 : sum / log_field;
  r.error_bound = 1e-12L;
  if (factorizes) {
    r.exact = true;
    r.packets = {0, 1};
  } else if (constant_ratio && ratio_den != 0 && ratio_num % ratio_den == 0) {
    // Ratio R = q^e gives exactly e/m packets.
    unsigned __int128 ratio = ratio_num / ratio_den;
    std::uint64_t e = 0;
    while (ratio % f.q() == 0) {
      ratio /= f.q();
      ++e;
    }
    if (ratio == 1) {
      const std::uint64_t g = std::gcd(e, static_cast<std::uint64_t>(f.m()));
      r.exact = true;
      r.packets = {e / g, f.m() / g};
      r.approx = static_cast<long double>(e) / f.m();
    }
  }
  return r;
}

LeakageReport mutual_information(const EnumerableEncoder& enc, const ExtMatrix& b) {
  LeakageReport r = leakage_from_table(joint_table(enc, b), *enc.tower());
  r.observation_rows = b.rows();
  return r;
}

LeakageReport mutual_information(const EnumerableEncoder& enc, const BaseMatrix& b) {
  return mutual_information(enc, linalg::embed(b));
}

std::vector<BaseMatrix> observation_representatives(const gf::TowerPtr& tower, std::size_t n,
                                                     std::size_t max_dim, std::size_t min_dim) {
  std::vector<BaseMatrix> out;
  for (std::size_t d = min_dim; d <= std::min(max_dim, n); ++d) {
    auto reps = linalg::subspace_representatives(tower, n, d);
    for (auto& b : reps) out.push_back(std::move(b));
  }
  return out;
}

SecrecyVerdict check_universal_secrecy(const EnumerableEncoder& enc, std::size_t mu) {
  SecrecyVerdict v;
  for (const BaseMatrix& b : observation_representatives(enc.tower(), enc.n(), mu)) {
    ++v.checked;
    LeakageReport r = mutual_information(enc, b);
    if (!r.zero) {
      v.pass = false;
      v.witness = b;
      v.witness_leakage = r;
      return v;
    }
  }
  return v;
}

AdditivityVerdict check_rank_additivity(const ExtMatrix& h, std::size_t mu) {
  AdditivityVerdict v;
  const std::size_t rank_h = linalg::rank(h);
  for (const BaseMatrix& b : observation_representatives(h.tower(), h.cols(), mu)) {
    ++v.checked;
    if (linalg::rank(linalg::vstack(h, linalg::embed(b))) != rank_h + b.rows()) {
      v.pass = false;
      v.witness = b;
      return v;
    }
  }
  return v;
}

CosetLeakageBounds coset_leakage_bounds(const ExtMatrix& h, const ExtMatrix& b,
                                        CosetHypothesis mode) {
  const std::size_t value = linalg::rank(h) + linalg::rank(b) - linalg::rank(linalg::vstack(h, b));
  CosetLeakageBounds out;
  if (mode != CosetHypothesis::UniformCoset) out.lower = value;
  if (mode != CosetHypothesis::UniformMessage) out.upper = value;
  return out;
}

}  // namespace rankcrypt::verify
