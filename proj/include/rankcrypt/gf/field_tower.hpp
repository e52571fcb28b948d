// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankcrypt/simd/kernels.hpp"

namespace rankcrypt {

/// A field element in packed form: sum(d_i * q^i) over the power basis
/// 1, a, ..., a^(m-1) of the modulus root a. Base-field digits use the same
/// type; the subfield GF(q) is exactly the packed values below q.
using Elem = std::uint32_t;

namespace gf {

inline constexpr std::uint32_t kMaxFieldSize = 1u << 20;

/// GF(q) for prime q together with GF(q^m) = GF(q)[x] / p(x).
///
/// Immutable after construction and shared by pointer between matrices, codes
/// and schemes. Multiplication goes through log/exp tables built from a
/// primitive element found at construction, so towers are capped at
/// q^m <= 2^20.
class FieldTower {
 public:
  /// An empty modulus selects the default: the first monic irreducible
  /// polynomial of degree m in ascending-coefficient order (x^3+x+1 for 2^3).
  static std::shared_ptr<const FieldTower> create(std::uint32_t q, std::uint32_t m,
                                                  std::vector<std::uint32_t> modulus = {});

  /// Parses "q^m/c0,c1,...,cm" (ascending coefficients) or just "q^m".
  static std::shared_ptr<const FieldTower> parse(std::string_view spec);
  std::string spec() const;

  static std::vector<std::uint32_t> default_modulus(std::uint32_t q, std::uint32_t m);
  static bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t q);

  std::uint32_t q() const { return q_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t size() const { return size_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool same_as(const FieldTower& other) const;
  bool contains(Elem a) const { return a < size_; }
  bool in_subfield(Elem a) const { return a < q_; }

  // GF(q^m)
  Elem add(Elem a, Elem b) const {
    return q_ == 2 ? (a ^ b) : simd::ext_add_digits(a, b, q_, m_);
  }
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return simd::ext_mul_tables(a, b, tables_); }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(q^i); negative i is taken modulo m.
  Elem frobenius(Elem a, std::int64_t i) const;
  /// Root of the modulus.
  Elem alpha() const { return alpha_; }
  Elem primitive() const { return primitive_; }

  // GF(q)
  std::uint32_t base_add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t base_neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint32_t base_sub(std::uint32_t a, std::uint32_t b) const {
    return base_add(a, base_neg(b));
  }
  std::uint32_t base_mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
  }
  std::uint32_t base_inv(std::uint32_t a) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  /// Ascending digit string: "010" is a in GF(2^3). Digits are ':'-separated
  /// when q > 10.
  std::string format(Elem a) const;
  Elem parse_elem(std::string_view text) const;

  const simd::ExtTables& tables() const { return tables_; }

  /// Schoolbook product reduced by the modulus; independent of the tables.
  Elem mul_reference(Elem a, Elem b) const;

  FieldTower(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus);

 private:
  void build_tables();

  std::uint32_t q_;
  std::uint32_t m_;
  std::uint32_t size_;
  std::vector<std::uint32_t> modulus_;  // monic, length m + 1
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> base_inv_;
  Elem alpha_ = 0;
  Elem primitive_ = 1;
  simd::ExtTables tables_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

}  // namespace gf
}  // namespace rankcrypt
