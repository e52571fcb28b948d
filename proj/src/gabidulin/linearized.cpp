// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/gabidulin/linearized.hpp"

#include <algorithm>

#include "rankcrypt/gf/phi.hpp"
#include "rankcrypt/linalg/algorithms.hpp"

namespace rankcrypt::gabidulin {

std::size_t LinearizedPoly::q_degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] != 0) return i;
  }
  return 0;
}

Elem evaluate(const gf::FieldTower& f, const LinearizedPoly& p, Elem x) {
  Elem acc = 0;
  Elem power = x;  // x^(q^i)
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs[i] != 0) acc = f.add(acc, f.mul(p.coeffs[i], power));
    power = f.frobenius(power, 1);
  }
  return acc;
}

LinearizedPoly compose(const gf::FieldTower& f, const LinearizedPoly& a, const LinearizedPoly& b) {
  LinearizedPoly out;
  if (a.coeffs.empty() || b.coeffs.empty()) return out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  // a_i * (b_j x^[j])^[i] = a_i b_j^[i] x^[i+j]
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      const Elem term = f.mul(a.coeffs[i], f.frobenius(b.coeffs[j], static_cast<std::int64_t>(i)));
      out.coeffs[i + j] = f.add(out.coeffs[i + j], term);
    }
  }
  return out;
}

std::vector<Elem> root_space(const gf::FieldTower& f, const LinearizedPoly& p) {
  // Row c is the digit expansion of p(a^c); the kernel of x -> x * M is the
  // root space in coordinates.
  const std::uint32_t m = f.m();
  std::vector<Elem> images(m);
  Elem basis = 1;
  for (std::uint32_t c = 0; c < m; ++c) {
    images[c] = evaluate(f, p, basis);
    basis *= f.q();
  }
  gf::TowerPtr alias(std::shared_ptr<const gf::FieldTower>{}, &f);
  const linalg::BaseMatrix map = gf::phi_expand(alias, images);
  const auto kernel = linalg::right_null_space(linalg::transpose(map));
  std::vector<Elem> roots;
  for (std::size_t r = 0; r < kernel.dim(); ++r) roots.push_back(f.from_digits(kernel.basis().row(r)));
  return roots;
}

ShiftRegister berlekamp_massey(const gf::FieldTower& f, std::span<const Elem> s) {
  LinearizedPoly gamma{{1}};
  LinearizedPoly prev{{1}};
  std::size_t length = 0;
  std::size_t shift = 1;
  Elem prev_discrepancy = 1;

  for (std::size_t j = 0; j < s.size(); ++j) {
    Elem delta = 0;
    for (std::size_t i = 0; i <= length && i <= j && i < gamma.coeffs.size(); ++i) {
      if (gamma.coeffs[i] == 0) continue;
      delta = f.add(delta, f.mul(gamma.coeffs[i], f.frobenius(s[j - i], static_cast<std::int64_t>(i))));
    }
    if (delta == 0) {
      ++shift;
      continue;
    }
    // gamma -= (delta / b^[shift]) * x^[shift] o prev
    LinearizedPoly lift;
    lift.coeffs.assign(shift + 1, 0);
    lift.coeffs[shift] = 1;
    LinearizedPoly correction = compose(f, lift, prev);
    const Elem c = f.mul(delta, f.inv(f.frobenius(prev_discrepancy, static_cast<std::int64_t>(shift))));
    LinearizedPoly next = gamma;
    next.coeffs.resize(std::max(next.coeffs.size(), correction.coeffs.size()), 0);
    for (std::size_t i = 0; i < correction.coeffs.size(); ++i) {
      next.coeffs[i] = f.sub(next.coeffs[i], f.mul(c, correction.coeffs[i]));
    }
    if (2 * length <= j) {
      prev = gamma;
      prev_discrepancy = delta;
      length = j + 1 - length;
      shift = 1;
    } else {
      ++shift;
    }
    gamma = std::move(next);
  }
  gamma.coeffs.resize(length + 1, 0);
  return {gamma, length};
}

}  // namespace rankcrypt::gabidulin
