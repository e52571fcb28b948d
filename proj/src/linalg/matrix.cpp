// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/linalg/matrix.hpp"

#include <string>

namespace rankcrypt::linalg {

void require_same_tower(const gf::TowerPtr& a, const gf::TowerPtr& b) {
  require(a && b && a->same_as(*b), ErrorCode::TowerMismatch,
          "operands come from different field towers");
}

template <Layer L>
Matrix<L>::Matrix(gf::TowerPtr tower, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : tower_(std::move(tower)), rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows * cols, ErrorCode::ShapeMismatch,
          "matrix data length does not match rows*cols");
  validate();
}

template <Layer L>
Matrix<L>::Matrix(gf::TowerPtr tower, std::initializer_list<std::initializer_list<Elem>> rows)
    : tower_(std::move(tower)), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, ErrorCode::ShapeMismatch, "ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  validate();
}

template <Layer L>
void Matrix<L>::validate() const {
  require(tower_ != nullptr, ErrorCode::InvalidArgument, "matrix without a field tower");
  const std::uint32_t bound = L == Layer::Base ? tower_->q() : tower_->size();
  for (Elem e : data_) {
    require(e < bound, ErrorCode::InvalidArgument,
            "matrix entry " + std::to_string(e) + " outside the field");
  }
}

template <Layer L>
Matrix<L> Matrix<L>::identity(gf::TowerPtr tower, std::size_t n) {
  Matrix out(std::move(tower), n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

template <Layer L>
Matrix<L> Matrix<L>::from_rows(gf::TowerPtr tower, const std::vector<std::vector<Elem>>& rows,
                               std::size_t cols) {
  std::vector<Elem> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    require(r.size() == cols, ErrorCode::ShapeMismatch, "ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(tower), rows.size(), cols, std::move(data));
}

template <Layer L>
Matrix<L> Matrix<L>::column(gf::TowerPtr tower, std::span<const Elem> v) {
  return Matrix(std::move(tower), v.size(), 1, std::vector<Elem>(v.begin(), v.end()));
}

template <Layer L>
Matrix<L> Matrix<L>::row_vector(gf::TowerPtr tower, std::span<const Elem> v) {
  return Matrix(std::move(tower), 1, v.size(), std::vector<Elem>(v.begin(), v.end()));
}

template <Layer L>
std::vector<Elem> Matrix<L>::col(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

template <Layer L>
bool Matrix<L>::is_zero() const {
  for (Elem e : data_) {
    if (e != 0) return false;
  }
  return true;
}

namespace {

template <Layer L>
void require_same_shape(const Matrix<L>& a, const Matrix<L>& b) {
  require_same_tower(a.tower(), b.tower());
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::ShapeMismatch,
          "matrix shapes differ");
}

}  // namespace

template <Layer L>
Matrix<L> operator+(const Matrix<L>& a, const Matrix<L>& b) {
  require_same_shape(a, b);
  Matrix<L> out = a;
  const auto o = ops(a);
  for (std::size_t r = 0; r < a.rows(); ++r) o.axpy(out.row(r), b.row(r), 1);
  return out;
}

template <Layer L>
Matrix<L> operator-(const Matrix<L>& a, const Matrix<L>& b) {
  require_same_shape(a, b);
  Matrix<L> out = a;
  const auto o = ops(a);
  const Elem minus_one = o.neg(1);
  for (std::size_t r = 0; r < a.rows(); ++r) o.axpy(out.row(r), b.row(r), minus_one);
  return out;
}

template <Layer L>
Matrix<L> operator*(const Matrix<L>& a, const Matrix<L>& b) {
  require_same_tower(a.tower(), b.tower());
  require(a.cols() == b.rows(), ErrorCode::ShapeMismatch, "inner dimensions differ");
  Matrix<L> out(a.tower(), a.rows(), b.cols());
  const auto o = ops(a);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem c = a(i, k);
      if (c != 0) o.axpy(out.row(i), b.row(k), c);
    }
  }
  return out;
}

template <Layer L>
Matrix<L> scale(const Matrix<L>& a, Elem c) {
  Matrix<L> out = a;
  const auto o = ops(a);
  for (std::size_t r = 0; r < a.rows(); ++r) o.scale(out.row(r), c);
  return out;
}

template <Layer L>
Matrix<L> transpose(const Matrix<L>& a) {
  Matrix<L> out(a.tower(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

template <Layer L>
Matrix<L> vstack(const Matrix<L>& top, const Matrix<L>& bottom) {
  require_same_tower(top.tower(), bottom.tower());
  require(top.cols() == bottom.cols(), ErrorCode::ShapeMismatch, "vstack column counts differ");
  std::vector<Elem> data = top.data();
  data.insert(data.end(), bottom.data().begin(), bottom.data().end());
  return Matrix<L>(top.tower(), top.rows() + bottom.rows(), top.cols(), std::move(data));
}

template <Layer L>
Matrix<L> hstack(const Matrix<L>& left, const Matrix<L>& right) {
  require_same_tower(left.tower(), right.tower());
  require(left.rows() == right.rows(), ErrorCode::ShapeMismatch, "hstack row counts differ");
  Matrix<L> out(left.tower(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
  }
  return out;
}

template <Layer L>
Matrix<L> select_rows(const Matrix<L>& a, std::span<const std::size_t> rows) {
  Matrix<L> out(a.tower(), rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i] < a.rows(), ErrorCode::ShapeMismatch, "row index out of range");
    std::copy(a.row(rows[i]).begin(), a.row(rows[i]).end(), out.row(i).begin());
  }
  return out;
}

template <Layer L>
Matrix<L> row_range(const Matrix<L>& a, std::size_t begin, std::size_t end) {
  require(begin <= end && end <= a.rows(), ErrorCode::ShapeMismatch, "row range out of bounds");
  std::vector<Elem> data(a.data().begin() + begin * a.cols(), a.data().begin() + end * a.cols());
  return Matrix<L>(a.tower(), end - begin, a.cols(), std::move(data));
}

template <Layer L>
Matrix<L> col_range(const Matrix<L>& a, std::size_t begin, std::size_t end) {
  require(begin <= end && end <= a.cols(), ErrorCode::ShapeMismatch, "column range out of bounds");
  Matrix<L> out(a.tower(), a.rows(), end - begin);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = begin; c < end; ++c) out(r, c - begin) = a(r, c);
  }
  return out;
}

template <Layer L>
std::vector<Elem> apply(const Matrix<L>& a, std::span<const Elem> v) {
  require(v.size() == a.cols(), ErrorCode::ShapeMismatch, "vector length does not match columns");
  const auto o = ops(a);
  std::vector<Elem> out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc = o.add(acc, o.mul(a(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

ExtVector add(const gf::FieldTower& f, std::span<const Elem> a, std::span<const Elem> b) {
  require(a.size() == b.size(), ErrorCode::ShapeMismatch, "vector lengths differ");
  ExtVector out(a.begin(), a.end());
  simd::ext_add(out, b, f.tables());
  return out;
}

ExtVector sub(const gf::FieldTower& f, std::span<const Elem> a, std::span<const Elem> b) {
  require(a.size() == b.size(), ErrorCode::ShapeMismatch, "vector lengths differ");
  ExtVector out(a.begin(), a.end());
  simd::ext_axpy(out, b, f.neg(1), f.tables());
  return out;
}

ExtMatrix embed(const BaseMatrix& a) {
  // Subfield elements keep their packed value.
  return ExtMatrix(a.tower(), a.rows(), a.cols(), a.data());
}

BaseMatrix restrict_to_base(const ExtMatrix& a) {
  for (Elem e : a.data()) {
    require(a.field().in_subfield(e), ErrorCode::LayerMismatch,
            "matrix has entries outside the base field");
  }
  return BaseMatrix(a.tower(), a.rows(), a.cols(), a.data());
}

#define RANKCRYPT_INSTANTIATE(L)                                                          \
  template class Matrix<L>;                                                               \
  template Matrix<L> operator+(const Matrix<L>&, const Matrix<L>&);                       \
  template Matrix<L> operator-(const Matrix<L>&, const Matrix<L>&);                       \
  template Matrix<L> operator*(const Matrix<L>&, const Matrix<L>&);                       \
  template Matrix<L> scale(const Matrix<L>&, Elem);                                       \
  template Matrix<L> transpose(const Matrix<L>&);                                         \
  template Matrix<L> vstack(const Matrix<L>&, const Matrix<L>&);                          \
  template Matrix<L> hstack(const Matrix<L>&, const Matrix<L>&);                          \
  template Matrix<L> select_rows(const Matrix<L>&, std::span<const std::size_t>);         \
  template Matrix<L> row_range(const Matrix<L>&, std::size_t, std::size_t);               \
  template Matrix<L> col_range(const Matrix<L>&, std::size_t, std::size_t);               \
  template std::vector<Elem> apply(const Matrix<L>&, std::span<const Elem>);

RANKCRYPT_INSTANTIATE(Layer::Base)
RANKCRYPT_INSTANTIATE(Layer::Ext)

#undef RANKCRYPT_INSTANTIATE

}  // namespace rankcrypt::linalg
