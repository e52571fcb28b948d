// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "rankcrypt/error.hpp"
#include "rankcrypt/gf/field_tower.hpp"

namespace rankcrypt::linalg {

/// Which layer of the tower a matrix lives over. The layer is part of the
/// type: a GF(q) matrix only meets GF(q^m) data after an explicit embed().
enum class Layer { Base, Ext };

template <Layer L>
class Matrix {
 public:
  Matrix() = default;
  Matrix(gf::TowerPtr tower, std::size_t rows, std::size_t cols)
      : tower_(std::move(tower)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(gf::TowerPtr tower, std::size_t rows, std::size_t cols, std::vector<Elem> data);
  Matrix(gf::TowerPtr tower, std::initializer_list<std::initializer_list<Elem>> rows);

  static Matrix identity(gf::TowerPtr tower, std::size_t n);
  static Matrix from_rows(gf::TowerPtr tower, const std::vector<std::vector<Elem>>& rows,
                          std::size_t cols);
  static Matrix column(gf::TowerPtr tower, std::span<const Elem> v);
  static Matrix row_vector(gf::TowerPtr tower, std::span<const Elem> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Elem> col(std::size_t c) const;

  const std::vector<Elem>& data() const { return data_; }
  const gf::TowerPtr& tower() const { return tower_; }
  const gf::FieldTower& field() const { return *tower_; }

  bool is_zero() const;
  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  void validate() const;

  gf::TowerPtr tower_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

using BaseMatrix = Matrix<Layer::Base>;
using ExtMatrix = Matrix<Layer::Ext>;
using ExtVector = std::vector<Elem>;

/// Field operations for one layer; used by the layer-generic algorithms.
template <Layer L>
struct LayerOps;

template <>
struct LayerOps<Layer::Base> {
  const gf::FieldTower& f;
  Elem add(Elem a, Elem b) const { return f.base_add(a, b); }
  Elem sub(Elem a, Elem b) const { return f.base_sub(a, b); }
  Elem neg(Elem a) const { return f.base_neg(a); }
  Elem mul(Elem a, Elem b) const { return f.base_mul(a, b); }
  Elem inv(Elem a) const { return f.base_inv(a); }
  std::uint32_t cardinality() const { return f.q(); }
  void axpy(std::span<Elem> dst, std::span<const Elem> src, Elem c) const {
    simd::base_axpy(dst, src, c, f.q());
  }
  void scale(std::span<Elem> dst, Elem c) const { simd::base_scale(dst, c, f.q()); }
};

template <>
struct LayerOps<Layer::Ext> {
  const gf::FieldTower& f;
  Elem add(Elem a, Elem b) const { return f.add(a, b); }
  Elem sub(Elem a, Elem b) const { return f.sub(a, b); }
  Elem neg(Elem a) const { return f.neg(a); }
  Elem mul(Elem a, Elem b) const { return f.mul(a, b); }
  Elem inv(Elem a) const { return f.inv(a); }
  std::uint32_t cardinality() const { return f.size(); }
  void axpy(std::span<Elem> dst, std::span<const Elem> src, Elem c) const {
    simd::ext_axpy(dst, src, c, f.tables());
  }
  void scale(std::span<Elem> dst, Elem c) const { simd::ext_scale(dst, c, f.tables()); }
};

template <Layer L>
LayerOps<L> ops(const Matrix<L>& m) {
  return LayerOps<L>{m.field()};
}

void require_same_tower(const gf::TowerPtr& a, const gf::TowerPtr& b);

template <Layer L>
Matrix<L> operator+(const Matrix<L>& a, const Matrix<L>& b);
template <Layer L>
Matrix<L> operator-(const Matrix<L>& a, const Matrix<L>& b);
template <Layer L>
Matrix<L> operator*(const Matrix<L>& a, const Matrix<L>& b);

template <Layer L>
Matrix<L> scale(const Matrix<L>& a, Elem c);
template <Layer L>
Matrix<L> transpose(const Matrix<L>& a);
template <Layer L>
Matrix<L> vstack(const Matrix<L>& top, const Matrix<L>& bottom);
template <Layer L>
Matrix<L> hstack(const Matrix<L>& left, const Matrix<L>& right);
template <Layer L>
Matrix<L> select_rows(const Matrix<L>& a, std::span<const std::size_t> rows);
template <Layer L>
Matrix<L> row_range(const Matrix<L>& a, std::size_t begin, std::size_t end);
template <Layer L>
Matrix<L> col_range(const Matrix<L>& a, std::size_t begin, std::size_t end);

/// M * v for a column vector v over the same layer.
template <Layer L>
std::vector<Elem> apply(const Matrix<L>& a, std::span<const Elem> v);

/// Vector helpers over GF(q^m).
ExtVector add(const gf::FieldTower& f, std::span<const Elem> a, std::span<const Elem> b);
ExtVector sub(const gf::FieldTower& f, std::span<const Elem> a, std::span<const Elem> b);

/// Subfield embedding GF(q) -> GF(q^m), entry-wise. Lossless.
ExtMatrix embed(const BaseMatrix& a);
/// Inverse of embed; throws LayerMismatch if an entry lies outside GF(q).
BaseMatrix restrict_to_base(const ExtMatrix& a);

}  // namespace rankcrypt::linalg
