// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/linalg/algorithms.hpp"

#include <array>
#include <utility>

#include "rankcrypt/gf/phi.hpp"

namespace rankcrypt::linalg {

template <Layer L>
Echelon<L> rref(const Matrix<L>& a) {
  Echelon<L> out{a, {}};
  Matrix<L>& m = out.reduced;
  const auto o = ops(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(r).begin());
    o.scale(m.row(r).subspan(c), o.inv(m(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      o.axpy(m.row(i).subspan(c), m.row(r).subspan(c), o.neg(m(i, c)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <Layer L>
std::size_t rank(const Matrix<L>& a) {
  return rref(a).rank();
}

template <Layer L>
Subspace<L>::Subspace(gf::TowerPtr tower, std::size_t ambient)
    : basis_(std::move(tower), 0, ambient), ambient_(ambient) {}

template <Layer L>
Subspace<L>::Subspace(const Matrix<L>& spanning) : ambient_(spanning.cols()) {
  Echelon<L> e = rref(spanning);
  basis_ = row_range(e.reduced, 0, e.rank());
}

template <Layer L>
bool Subspace<L>::contains(std::span<const Elem> v) const {
  require(v.size() == ambient_, ErrorCode::ShapeMismatch, "vector outside the ambient space");
  return rank(vstack(basis_, Matrix<L>::row_vector(basis_.tower(), v))) == dim();
}

template <Layer L>
Subspace<L> row_space(const Matrix<L>& a) {
  return Subspace<L>(a);
}

template <Layer L>
Subspace<L> right_null_space(const Matrix<L>& a) {
  const Echelon<L> e = rref(a);
  const auto o = ops(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> vectors;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Elem> v(a.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = o.neg(e.reduced(i, f));
    vectors.push_back(std::move(v));
  }
  if (vectors.empty()) return Subspace<L>(a.tower(), a.cols());
  return Subspace<L>(Matrix<L>::from_rows(a.tower(), vectors, a.cols()));
}

template <Layer L>
std::size_t intersect_dim(const Subspace<L>& u, const Subspace<L>& v) {
  require(u.ambient() == v.ambient(), ErrorCode::ShapeMismatch, "ambient dimensions differ");
  return u.dim() + v.dim() - rank(vstack(u.basis(), v.basis()));
}

template <Layer L>
Matrix<L> invert(const Matrix<L>& a) {
  require(a.rows() == a.cols(), ErrorCode::SingularMatrix, "only square matrices are invertible");
  const std::size_t n = a.rows();
  const Echelon<L> e = rref(hstack(a, Matrix<L>::identity(a.tower(), n)));
  require(e.rank() >= n && (n == 0 || e.pivots[n - 1] == n - 1), ErrorCode::SingularMatrix,
          "matrix is singular");
  return col_range(e.reduced, n, 2 * n);
}

template <Layer L>
AffineSolution<L> solve(const Matrix<L>& a, std::span<const Elem> b) {
  require(b.size() == a.rows(), ErrorCode::ShapeMismatch, "right-hand side length mismatch");
  AffineSolution<L> out;
  out.kernel = right_null_space(a).basis();
  const Echelon<L> e = rref(hstack(a, Matrix<L>::column(a.tower(), b)));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return out;
  out.consistent = true;
  out.particular.assign(a.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.particular[e.pivots[i]] = e.reduced(i, a.cols());
  return out;
}

template <Layer L>
std::size_t rank_distance(const Matrix<L>& x, const Matrix<L>& y) {
  return rank(y - x);
}

std::size_t rank_weight(std::span<const Elem> v, const gf::FieldTower& f) {
  if (f.q() == 2) {
    // XOR basis keyed by leading bit.
    std::array<Elem, 32> basis{};
    std::size_t r = 0;
    for (Elem x : v) {
      for (int bit = static_cast<int>(f.m()) - 1; bit >= 0 && x != 0; --bit) {
        if (((x >> bit) & 1u) == 0) continue;
        if (basis[bit] == 0) {
          basis[bit] = x;
          ++r;
          x = 0;
        } else {
          x ^= basis[bit];
        }
      }
    }
    return r;
  }
  std::vector<Elem> data;
  data.reserve(v.size() * f.m());
  for (Elem x : v) {
    for (std::uint32_t i = 0; i < f.m(); ++i) {
      data.push_back(x % f.q());
      x /= f.q();
    }
  }
  // Borrowing a tower pointer is unnecessary here; build the matrix on a
  // non-owning alias of f.
  gf::TowerPtr alias(std::shared_ptr<const gf::FieldTower>{}, &f);
  return rank(BaseMatrix(alias, v.size(), f.m(), std::move(data)));
}

#define RANKCRYPT_INSTANTIATE(L)                                                      \
  template Echelon<L> rref(const Matrix<L>&);                                         \
  template std::size_t rank(const Matrix<L>&);                                        \
  template class Subspace<L>;                                                         \
  template Subspace<L> row_space(const Matrix<L>&);                                   \
  template Subspace<L> right_null_space(const Matrix<L>&);                            \
  template std::size_t intersect_dim(const Subspace<L>&, const Subspace<L>&);         \
  template Matrix<L> invert(const Matrix<L>&);                                        \
  template AffineSolution<L> solve(const Matrix<L>&, std::span<const Elem>);          \
  template std::size_t rank_distance(const Matrix<L>&, const Matrix<L>&);

RANKCRYPT_INSTANTIATE(Layer::Base)
RANKCRYPT_INSTANTIATE(Layer::Ext)

#undef RANKCRYPT_INSTANTIATE

}  // namespace rankcrypt::linalg
