// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "rankcrypt/linalg/matrix.hpp"

namespace rankcrypt::linalg {

template <Layer L>
struct Echelon {
  Matrix<L> reduced;                // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

template <Layer L>
Echelon<L> rref(const Matrix<L>& a);

template <Layer L>
std::size_t rank(const Matrix<L>& a);

/// Row space, stored as its reduced echelon basis.
template <Layer L>
class Subspace {
 public:
  Subspace(gf::TowerPtr tower, std::size_t ambient);
  /// Takes the nonzero rows of rref(spanning).
  explicit Subspace(const Matrix<L>& spanning);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return ambient_; }
  const Matrix<L>& basis() const { return basis_; }
  bool contains(std::span<const Elem> v) const;
  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  Matrix<L> basis_;
  std::size_t ambient_;
};

template <Layer L>
Subspace<L> row_space(const Matrix<L>& a);

/// {x : a x = 0}, basis vectors as rows.
template <Layer L>
Subspace<L> right_null_space(const Matrix<L>& a);

/// dim U + dim V - dim(U + V).
template <Layer L>
std::size_t intersect_dim(const Subspace<L>& u, const Subspace<L>& v);

/// Throws SingularMatrix unless a is square and full rank.
template <Layer L>
Matrix<L> invert(const Matrix<L>& a);

/// Full affine solution set of a x = b.
template <Layer L>
struct AffineSolution {
  bool consistent = false;
  std::vector<Elem> particular;  // valid only when consistent
  Matrix<L> kernel;              // rows span {x : a x = 0}

  bool unique() const { return consistent && kernel.rows() == 0; }
};

template <Layer L>
AffineSolution<L> solve(const Matrix<L>& a, std::span<const Elem> b);

/// rank(y - x).
template <Layer L>
std::size_t rank_distance(const Matrix<L>& x, const Matrix<L>& y);

/// rank of phi_expand(v) over GF(q).
std::size_t rank_weight(std::span<const Elem> v, const gf::FieldTower& f);

}  // namespace rankcrypt::linalg
