// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "rankcrypt/error.hpp"
#include "rankcrypt/gf/field_tower.hpp"
#include "rankcrypt/linalg/matrix.hpp"

namespace testing {

using rankcrypt::Elem;
using rankcrypt::gf::FieldTower;
using rankcrypt::gf::TowerPtr;
using rankcrypt::linalg::BaseMatrix;
using rankcrypt::linalg::ExtMatrix;

// Hand-rolled generators; every property test takes an explicit seed so a
// failure reproduces.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint32_t below(std::uint32_t bound) {
    return std::uniform_int_distribution<std::uint32_t>(0, bound - 1)(rng_);
  }
  Elem elem(const FieldTower& f) { return below(f.size()); }
  Elem nonzero(const FieldTower& f) { return 1 + below(f.size() - 1); }
  Elem digit(const FieldTower& f) { return below(f.q()); }

  std::vector<Elem> vec(const FieldTower& f, std::size_t n) {
    std::vector<Elem> v(n);
    for (auto& e : v) e = elem(f);
    return v;
  }
  ExtMatrix ext(const TowerPtr& t, std::size_t r, std::size_t c) {
    ExtMatrix a(t, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = elem(*t);
    return a;
  }
  BaseMatrix base(const TowerPtr& t, std::size_t r, std::size_t c) {
    BaseMatrix a(t, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = digit(*t);
    return a;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline oracle::Field oracle_field(const FieldTower& f) {
  return {f.q(), f.m(), f.modulus()};
}

template <typename M>
std::vector<std::vector<oracle::Word>> rows_of(const M& a) {
  std::vector<std::vector<oracle::Word>> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) out[r].assign(a.row(r).begin(), a.row(r).end());
  return out;
}

inline std::vector<std::vector<std::int64_t>> int_rows(const BaseMatrix& a) {
  std::vector<std::vector<std::int64_t>> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) out[r].assign(a.row(r).begin(), a.row(r).end());
  return out;
}

// Runs f and returns the code of the rankcrypt::Error it throws; fails the
// surrounding test if nothing is thrown.
template <typename F>
std::optional<rankcrypt::ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const rankcrypt::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testing
