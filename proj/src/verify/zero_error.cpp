// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/verify/zero_error.hpp"

#include "rankcrypt/gf/phi.hpp"
#include "rankcrypt/linalg/enumerate.hpp"

namespace rankcrypt::verify {

bool witness_holds(const CollisionWitness& w, std::size_t t, std::size_t rho) {
  const gf::FieldTower& f = w.a.field();
  const std::size_t n = w.a.cols();
  if (w.s1 == w.s2 || w.a.rows() != n || linalg::rank(w.a) + rho < n) return false;
  if (linalg::rank_weight(w.z1, f) > t || linalg::rank_weight(w.z2, f) > t) return false;
  const linalg::ExtMatrix a = linalg::embed(w.a);
  const ExtVector y1 = linalg::add(f, linalg::apply(a, w.x1), w.z1);
  const ExtVector y2 = linalg::add(f, linalg::apply(a, w.x2), w.z2);
  return y1 == w.y && y2 == w.y;
}

namespace {

std::vector<BaseMatrix> transfer_matrices(const gf::TowerPtr& tower, std::size_t n,
                                          std::size_t rho, TransferSweep sweep) {
  std::vector<BaseMatrix> out;
  const std::size_t min_rank = rho >= n ? 0 : n - rho;
  if (sweep == TransferSweep::All) {
    const std::uint64_t total =
        linalg::checked_power(tower->q(), n * n, linalg::enumeration_cap(), "transfer enumeration");
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      BaseMatrix a = linalg::base_matrix_from_index(tower, n, n, idx);
      if (linalg::rank(a) >= min_rank) out.push_back(std::move(a));
    }
    return out;
  }
  for (std::size_t d = min_rank; d <= n; ++d) {
    for (const BaseMatrix& basis : linalg::subspace_representatives(tower, n, d)) {
      out.push_back(linalg::vstack(basis, BaseMatrix(tower, n - d, n)));
    }
  }
  return out;
}

std::uint64_t pack(const gf::FieldTower& f, std::span<const Elem> v) {
  std::uint64_t key = 0;
  for (Elem e : v) key = key * f.size() + e;
  return key;
}

}  // namespace

ZeroErrorReport check_zero_error(const EnumerableEncoder& enc, std::size_t t, std::size_t rho,
                                 TransferSweep sweep) {
  const gf::TowerPtr& tower = enc.tower();
  const gf::FieldTower& f = *tower;
  const std::size_t n = enc.n();
  ZeroErrorReport rep;
  rep.t = t;
  rep.rho = rho;

  const std::uint64_t outputs =
      linalg::checked_power(f.size(), n, linalg::enumeration_cap(), "output space");
  const std::uint64_t messages = enc.message_count();
  const std::uint64_t randomness = enc.randomness_count();
  const std::vector<Elem> xs = image_table(enc.message_map);
  const std::vector<Elem> xv = image_table(enc.randomness_map);
  const std::vector<ExtVector> errors = linalg::rank_bounded_vectors(tower, n, t);
  const std::vector<BaseMatrix> transfers = transfer_matrices(tower, n, rho, sweep);
  rep.transfer_matrices = transfers.size();
  rep.error_patterns = errors.size();

  std::vector<std::uint32_t> label(outputs);
  ExtVector x(n);
  ExtVector y(n);
  for (const BaseMatrix& a_base : transfers) {
    const linalg::ExtMatrix a = linalg::embed(a_base);
    std::fill(label.begin(), label.end(), 0);
    for (std::uint64_t s = 0; s < messages; ++s) {
      for (std::uint64_t v = 0; v < randomness; ++v) {
        for (std::size_t j = 0; j < n; ++j) x[j] = f.add(xs[s * n + j], xv[v * n + j]);
        const ExtVector ax = linalg::apply(a, x);
        for (const ExtVector& z : errors) {
          for (std::size_t j = 0; j < n; ++j) y[j] = f.add(ax[j], z[j]);
          std::uint32_t& cell = label[pack(f, y)];
          if (cell == 0) {
            cell = static_cast<std::uint32_t>(s + 1);
            continue;
          }
          if (cell == s + 1) continue;
          // Recover the earlier message's (x, z) for the witness.
          const std::uint64_t s1 = cell - 1;
          CollisionWitness w;
          w.s1.resize(enc.message_length());
          w.s2.resize(enc.message_length());
          linalg::unpack_index(s1, f.size(), w.s1);
          linalg::unpack_index(s, f.size(), w.s2);
          w.a = a_base;
          w.y = y;
          w.x2 = x;
          w.z2 = z;
          for (std::uint64_t v1 = 0; v1 < randomness && w.x1.empty(); ++v1) {
            ExtVector x1(n);
            for (std::size_t j = 0; j < n; ++j) x1[j] = f.add(xs[s1 * n + j], xv[v1 * n + j]);
            const ExtVector z1 = linalg::sub(f, y, linalg::apply(a, x1));
            if (linalg::rank_weight(z1, f) <= t) {
              w.x1 = x1;
              w.z1 = z1;
            }
          }
          rep.pass = false;
          rep.witness = std::move(w);
          return rep;
        }
      }
    }
  }
  return rep;
}

TradeoffReport check_tradeoff(const EnumerableEncoder& enc, std::size_t t, std::size_t rho) {
  TradeoffReport rep;
  rep.t = t;
  rep.rho = rho;
  const std::size_t budget = 2 * t + rho;
  for (std::size_t tp = 0; 2 * tp <= budget; ++tp) {
    for (std::size_t rp = 0; 2 * tp + rp <= budget && rp <= enc.n(); ++rp) {
      rep.entries.push_back(check_zero_error(enc, tp, rp));
      rep.pass = rep.pass && rep.entries.back().pass;
    }
  }
  return rep;
}

std::optional<CollisionWitness> ambiguity_witness(const ExtMatrix& generator, std::size_t t,
                                                  std::size_t rho) {
  const gf::TowerPtr& tower = generator.tower();
  const gf::FieldTower& f = *tower;
  const std::size_t n = generator.cols();
  const std::size_t k = generator.rows();

  // Minimum-weight nonzero codeword.
  const std::uint64_t total =
      linalg::checked_power(f.size(), k, linalg::enumeration_cap(), "codeword enumeration");
  const linalg::ExtMatrix gt = linalg::transpose(generator);
  ExtVector best_u, best_x;
  std::size_t d = n + 1;
  ExtVector u(k);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    linalg::unpack_index(idx, f.size(), u);
    const ExtVector x = linalg::apply(gt, u);
    const std::size_t w = linalg::rank_weight(x, f);
    if (w != 0 && w < d) {
      d = w;
      best_u = u;
      best_x = x;
    }
  }
  if (d > 2 * t + rho || best_x.empty()) return std::nullopt;

  // A kills min(rho, d) directions of the column space of phi(delta).
  const BaseMatrix delta = gf::phi_expand(tower, best_x);
  const BaseMatrix columns = linalg::row_space(linalg::transpose(delta)).basis();
  const std::size_t killed = std::min(rho, d);
  const BaseMatrix kernel = linalg::row_range(columns, 0, killed);
  BaseMatrix a_rows = killed == 0 ? BaseMatrix::identity(tower, n)
                                  : linalg::right_null_space(kernel).basis();
  BaseMatrix a = linalg::vstack(a_rows, BaseMatrix(tower, n - a_rows.rows(), n));

  // A delta = U V; z1 takes the first t rank-one pieces, z2 the rest.
  const BaseMatrix ad = a * delta;
  const auto ech = linalg::rref(ad);
  const std::size_t r = ech.rank();
  const std::size_t split = std::min(t, r);
  BaseMatrix u_head(tower, n, split), v_head(tower, split, f.m());
  BaseMatrix u_tail(tower, n, r - split), v_tail(tower, r - split, f.m());
  for (std::size_t p = 0; p < r; ++p) {
    const std::size_t col = ech.pivots[p];
    for (std::size_t i = 0; i < n; ++i) {
      if (p < split) {
        u_head(i, p) = ad(i, col);
      } else {
        u_tail(i, p - split) = ad(i, col);
      }
    }
    for (std::size_t c = 0; c < f.m(); ++c) {
      if (p < split) {
        v_head(p, c) = ech.reduced(p, c);
      } else {
        v_tail(p - split, c) = ech.reduced(p, c);
      }
    }
  }
  const BaseMatrix e1 = u_head * v_head;
  const BaseMatrix e2 = BaseMatrix(tower, n, f.m()) - u_tail * v_tail;

  CollisionWitness w;
  w.s1.assign(k, 0);
  w.s2 = best_u;
  w.x1.assign(n, 0);
  w.x2 = best_x;
  w.a = a;
  w.z1 = gf::phi_contract(e1);
  w.z2 = gf::phi_contract(e2);
  w.y = w.z1;  // A x1 = 0
  return w;
}

}  // namespace rankcrypt::verify
