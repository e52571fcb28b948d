// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "rankcrypt/gf/field_tower.hpp"

namespace rankcrypt::gabidulin {

/// L(x) = sum_i coeffs[i] * x^(q^i), a GF(q)-linear map on GF(q^m).
struct LinearizedPoly {
  std::vector<Elem> coeffs;

  std::size_t q_degree() const;  // index of the last nonzero coefficient
};

Elem evaluate(const gf::FieldTower& f, const LinearizedPoly& p, Elem x);

/// (a o b)(x) = a(b(x)).
LinearizedPoly compose(const gf::FieldTower& f, const LinearizedPoly& a, const LinearizedPoly& b);

/// GF(q)-basis of {x : p(x) = 0}.
std::vector<Elem> root_space(const gf::FieldTower& f, const LinearizedPoly& p);

struct ShiftRegister {
  LinearizedPoly connection;  // connection.coeffs[0] == 1
  std::size_t length = 0;
};

/// Shortest Gamma with sum_{i=0..L} Gamma_i * s_{j-i}^(q^i) = 0 for L <= j < N.
ShiftRegister berlekamp_massey(const gf::FieldTower& f, std::span<const Elem> s);

}  // namespace rankcrypt::gabidulin
