// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "rankcrypt/gabidulin/code.hpp"
#include "rankcrypt/gabidulin/linearized.hpp"
#include "rankcrypt/gabidulin/product.hpp"
#include "rankcrypt/gf/phi.hpp"
#include "rankcrypt/linalg/algorithms.hpp"
#include "rankcrypt/linalg/enumerate.hpp"

using namespace rankcrypt;
using namespace rankcrypt::gabidulin;
using linalg::BaseMatrix;
using linalg::ExtMatrix;
using testing::Gen;

namespace {

std::vector<std::vector<Elem>> all_messages(const gf::FieldTower& f, std::size_t k) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= f.size();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> u(k);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    linalg::unpack_index(idx, f.size(), u);
    out.push_back(u);
  }
  return out;
}

}  // namespace

TEST_SUITE("gabidulin") {
  TEST_CASE("generator rows are frobenius powers of the points") {
    const auto t = gf::FieldTower::create(2, 4);
    const auto c = GabidulinCode::build(t, 4, 3);
    CHECK(c.points() == std::vector<Elem>{1, 2, 4, 8});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(c.generator()(i, j) == t->frobenius(c.points()[j], static_cast<std::int64_t>(i)));
  }

  TEST_CASE("[3,2] over GF(8) has distance 2 over its 64 codewords") {
    const auto t = gf::FieldTower::create(2, 3);
    const auto c = GabidulinCode::build(t, 3, 2);
    const auto o = testing::oracle_field(*t);
    std::size_t best = 99;
    std::set<std::vector<Elem>> words;
    for (const auto& u : all_messages(*t, 2)) {
      const auto x = c.encode(u);
      words.insert(x);
      if (u != std::vector<Elem>{0, 0}) best = std::min(best, oracle::rank_weight(o, x));
    }
    CHECK(words.size() == 64);
    CHECK(best == 2);
    CHECK(min_rank_distance_bruteforce(c) == 2);
  }

  TEST_CASE("the [3,1] generator is the parity check [1 a a^2] of an MRD [3,2] code") {
    const auto t = gf::FieldTower::create(2, 3);
    const auto c31 = GabidulinCode::build(t, 3, 1);
    CHECK(c31.generator() == ExtMatrix(t, {{1, 2, 4}}));
    const auto dual = linalg::right_null_space(c31.generator()).basis();
    CHECK(dual.rows() == 2);
    CHECK(c31.parity_check() == dual);
    CHECK(min_rank_distance_bruteforce(dual) == 2);
    CHECK(oracle::min_distance_from_parity(testing::oracle_field(*t), {{1, 2, 4}}, 3) == 2);
  }

  TEST_CASE("invalid construction") {
    const auto t = gf::FieldTower::create(2, 3);
    CHECK(testing::error_code([&] { GabidulinCode::build(t, 3, 1, {1, 1, 2}); }) ==
          ErrorCode::DependentPoints);
    CHECK(testing::error_code([&] { GabidulinCode::build(t, 4, 1); }) ==
          ErrorCode::ParameterViolation);
    CHECK(testing::error_code([&] { GabidulinCode::build(t, 3, 4); }).has_value());
    CHECK(testing::error_code([&] { GabidulinCode::build(t, 3, 2).encode(std::vector<Elem>{1}); }) ==
          ErrorCode::ShapeMismatch);
  }

  TEST_CASE("parity check annihilates the generator and has full rank") {
    Gen g(41);
    for (auto [q, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {2, 5}, {3, 3}}) {
      const auto t = gf::FieldTower::create(q, m);
      for (std::size_t n = 1; n <= m; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
          const auto c = GabidulinCode::build(t, n, k);
          REQUIRE(c.parity_check().rows() == n - k);
          if (k > 0 && k < n) {
            REQUIRE((c.parity_check() * linalg::transpose(c.generator())).is_zero());
            REQUIRE(linalg::rank(c.parity_check()) == n - k);
          }
          for (int i = 0; i < 10; ++i) {
            const auto x = c.encode(g.vec(*t, k));
            REQUIRE(c.contains(x));
            REQUIRE(c.message_of(x).size() == k);
          }
        }
      }
    }
  }

  TEST_CASE("message_of inverts encode") {
    Gen g(42);
    const auto t = gf::FieldTower::create(2, 6);
    const auto c = GabidulinCode::build(t, 5, 3);
    for (int i = 0; i < 200; ++i) {
      const auto u = g.vec(*t, 3);
      REQUIRE(c.message_of(c.encode(u)) == u);
    }
  }

  TEST_CASE("dual points give a frobenius-form parity check") {
    const auto t = gf::FieldTower::create(2, 5);
    for (std::size_t k = 1; k < 5; ++k) {
      const auto c = GabidulinCode::build(t, 5, k);
      const auto h = moore_matrix(t, c.dual_points(), 0, 5 - k);
      REQUIRE(linalg::rank(h) == 5 - k);
      REQUIRE((h * linalg::transpose(c.generator())).is_zero());
    }
  }

  TEST_CASE("brute-force distance agrees with the parity-check oracle") {
    for (auto [m, n, k] : std::vector<std::array<std::size_t, 3>>{{3, 3, 1}, {3, 3, 2}, {4, 4, 2}, {4, 3, 2}}) {
      const auto t = gf::FieldTower::create(2, static_cast<std::uint32_t>(m));
      const auto c = GabidulinCode::build(t, n, k);
      const auto expect = oracle::min_distance_from_parity(testing::oracle_field(*t),
                                                           testing::rows_of(c.parity_check()), n);
      CHECK(min_rank_distance_bruteforce(c) == expect);
      CHECK(expect == n - k + 1);
      CHECK(is_mrd(c));
    }
  }

  TEST_CASE("random points still give MRD codes") {
    Gen g(43);
    const auto t = gf::FieldTower::create(2, 4);
    for (int i = 0; i < 10; ++i) {
      std::vector<Elem> pts;
      do {
        pts = g.vec(*t, 3);
      } while (!independent_over_base(*t, pts));
      const auto c = GabidulinCode::build(t, 3, 2, pts);
      REQUIRE(min_rank_distance_bruteforce(c) == 2);
    }
  }

  TEST_CASE("singleton bound holds with equality") {
    // |C| = q^(m k) and max(n,m)(min(n,m) - d + 1) = m k when m >= n.
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto t = gf::FieldTower::create(2, 4);
      const auto c = GabidulinCode::build(t, 4, k);
      const std::size_t d = min_rank_distance_bruteforce(c);
      CHECK(4 * k == 4 * (4 - d + 1));
    }
  }

  TEST_CASE("non-MRD code is detected") {
    const auto t = gf::FieldTower::create(2, 3);
    const ExtMatrix g(t, {{1, 1, 0}, {0, 1, 1}});
    CHECK(min_rank_distance_bruteforce(g) == 1);
    CHECK_FALSE(is_mrd(g));
  }

  TEST_CASE("full-length code has distance 1") {
    const auto t = gf::FieldTower::create(2, 3);
    const auto c = GabidulinCode::build(t, 3, 3);
    CHECK(min_rank_distance_bruteforce(c) == 1);
    CHECK(is_mrd(c));
  }

  TEST_CASE("distance cap") {
    const auto t = gf::FieldTower::create(2, 8);
    const auto c = GabidulinCode::build(t, 4, 3);
    CHECK(testing::error_code([&] { min_rank_distance_bruteforce(c); }) == ErrorCode::CapExceeded);
  }

  TEST_CASE("oracle decoding of a clean codeword") {
    const auto t = gf::FieldTower::create(2, 3);
    const auto c = GabidulinCode::build(t, 3, 2);
    const BaseMatrix id = BaseMatrix::identity(t, 3);
    for (const auto& u : all_messages(*t, 2)) {
      const auto r = decode_oracle(c, id, c.encode(u), 0, 0);
      REQUIRE(r.ok());
      REQUIRE(r.message == u);
    }
  }

  TEST_CASE("[4,1] corrects every rank-1 error") {
    const auto t = gf::FieldTower::create(2, 4);
    const auto c = GabidulinCode::build(t, 4, 1);
    const auto errors = linalg::rank_bounded_vectors(t, 4, 1);
    REQUIRE(errors.size() == 226);
    const OracleDecoder dec(c.generator(), BaseMatrix::identity(t, 4), 1, 0);
    Gen g(44);
    for (int i = 0; i < 4; ++i) {
      const std::vector<Elem> u{g.elem(*t)};
      const auto x = c.encode(u);
      for (const auto& e : errors) {
        const auto r = dec.decode(linalg::add(*t, x, e));
        REQUIRE(r.ok());
        REQUIRE(r.message == u);
      }
    }
  }

  TEST_CASE("[4,3] with one error admits an ambiguous midpoint") {
    const auto t = gf::FieldTower::create(2, 4);
    const auto c = GabidulinCode::build(t, 4, 3);
    const auto errors = linalg::rank_bounded_vectors(t, 4, 1);
    // Find a weight-2 codeword x2 and a rank-1 e1 with x2 - e1 also rank 1.
    std::optional<std::vector<Elem>> midpoint;
    for (const auto& u : all_messages(*t, 3)) {
      const auto x2 = c.encode(u);
      if (linalg::rank_weight(x2, *t) != 2) continue;
      for (const auto& e1 : errors) {
        if (linalg::rank_weight(e1, *t) == 1 &&
            linalg::rank_weight(linalg::sub(*t, x2, e1), *t) == 1) {
          midpoint = e1;
          break;
        }
      }
      if (midpoint) break;
    }
    REQUIRE(midpoint.has_value());
    const auto r = decode_oracle(c, BaseMatrix::identity(t, 4), *midpoint, 1, 0);
    CHECK(r.status == DecodeStatus::Ambiguous);
  }

  TEST_CASE("oracle reports no candidate beyond the budget") {
    const auto t = gf::FieldTower::create(2, 4);
    const auto c = GabidulinCode::build(t, 4, 1);
    // Rank-1 error on a minimum distance 4 code, decoded with a zero budget.
    const std::vector<Elem> y{1, 0, 0, 0};
    const auto r = decode_oracle(c, BaseMatrix::identity(t, 4), y, 0, 0);
    CHECK(r.status == DecodeStatus::NoCandidate);
  }

  TEST_CASE("oracle decodes through rank-deficient transfers") {
    const auto t = gf::FieldTower::create(2, 4);
    const auto c = GabidulinCode::build(t, 4, 1);  // d = 4 > 2t + rho for t=1, rho=1
    Gen g(45);
    for (int i = 0; i < 30; ++i) {
      BaseMatrix a;
      do {
        a = g.base(t, 4, 4);
      } while (linalg::rank(a) != 3);
      const std::vector<Elem> u{g.elem(*t)};
      auto y = linalg::apply(linalg::embed(a), c.encode(u));
      const auto errors = linalg::rank_bounded_vectors(t, 4, 1);
      y = linalg::add(*t, y, errors[g.below(static_cast<std::uint32_t>(errors.size()))]);
      const auto r = decode_oracle(c, a, y, 1, 1);
      REQUIRE(r.ok());
      REQUIRE(r.message == u);
    }
  }

  TEST_CASE("oracle cap") {
    const auto t = gf::FieldTower::create(2, 6);
    const auto c = GabidulinCode::build(t, 4, 3);
    CHECK(testing::error_code([&] {
            decode_oracle(c, BaseMatrix::identity(t, 4), std::vector<Elem>(4, 0), 0, 0);
          }) == ErrorCode::CapExceeded);
  }

  TEST_CASE("syndrome decoder matches the oracle on sampled inputs") {
    Gen g(46);
    for (auto [m, n, k, tt] : std::vector<std::array<std::size_t, 4>>{
             {4, 4, 2, 1}, {3, 3, 1, 1}, {5, 5, 1, 2}, {6, 5, 3, 1}, {8, 7, 3, 2}}) {
      const auto t = gf::FieldTower::create(2, static_cast<std::uint32_t>(m));
      const auto c = GabidulinCode::build(t, n, k);
      for (int i = 0; i < 100; ++i) {
        const auto u = g.vec(*t, k);
        // Error of rank <= tt: sum of tt rank-one vectors beta_i * w_i.
        std::vector<Elem> e(n, 0);
        for (std::size_t r = 0; r < tt; ++r) {
          const Elem beta = g.elem(*t);
          for (std::size_t j = 0; j < n; ++j) e[j] = t->add(e[j], t->mul(beta, g.digit(*t)));
        }
        const auto y = linalg::add(*t, c.encode(u), e);
        const auto r = decode_syndrome(c, y, tt);
        REQUIRE(r.ok());
        REQUIRE(r.message == u);
        if (std::pow(2.0, double(m * k)) <= double(kOracleCap)) {
          const auto o = decode_oracle(c, BaseMatrix::identity(t, n), y, tt, 0);
          REQUIRE(o.ok());
          REQUIRE(o.message == u);
        }
      }
    }
  }

  TEST_CASE("syndrome decoder never silently accepts an over-budget error") {
    Gen g(47);
    const auto t = gf::FieldTower::create(2, 4);
    const auto c = GabidulinCode::build(t, 4, 2);
    std::size_t failures = 0, wrong = 0;
    for (int i = 0; i < 500; ++i) {
      const auto u = g.vec(*t, 2);
      std::vector<Elem> e;
      do {
        e = g.vec(*t, 4);
      } while (linalg::rank_weight(e, *t) != 2);
      const auto y = linalg::add(*t, c.encode(u), e);
      const auto r = decode_syndrome(c, y, 1);
      if (!r.ok()) {
        ++failures;
        continue;
      }
      // Any accepted answer must be a codeword within the budget of y, so it
      // is necessarily a different message than u.
      REQUIRE(r.message != u);
      REQUIRE(linalg::rank_weight(linalg::sub(*t, y, c.encode(r.message)), *t) <= 1);
      const auto o = decode_oracle(c, BaseMatrix::identity(t, 4), y, 1, 0);
      REQUIRE(o.ok());
      REQUIRE(o.message == r.message);
      ++wrong;
    }
    CHECK(failures + wrong == 500);
    CHECK(failures > 0);
  }

  TEST_CASE("syndrome decoder rejects an over-large budget") {
    const auto t = gf::FieldTower::create(2, 4);
    const auto c = GabidulinCode::build(t, 4, 2);
    CHECK(testing::error_code([&] { decode_syndrome(c, std::vector<Elem>(4, 0), 2); }).has_value());
  }

  TEST_CASE("linearized evaluation is GF(q)-linear and composes") {
    Gen g(48);
    const auto t = gf::FieldTower::create(3, 4);
    for (int i = 0; i < 100; ++i) {
      LinearizedPoly a{g.vec(*t, 1 + g.below(4))}, b{g.vec(*t, 1 + g.below(4))};
      const Elem x = g.elem(*t), y = g.elem(*t), c = g.digit(*t);
      REQUIRE(evaluate(*t, a, t->add(x, t->mul(c, y))) ==
              t->add(evaluate(*t, a, x), t->mul(c, evaluate(*t, a, y))));
      REQUIRE(evaluate(*t, compose(*t, a, b), x) == evaluate(*t, a, evaluate(*t, b, x)));
    }
  }

  TEST_CASE("root space matches exhaustive root count") {
    Gen g(49);
    const auto t = gf::FieldTower::create(2, 6);
    for (int i = 0; i < 50; ++i) {
      LinearizedPoly p{g.vec(*t, 1 + g.below(4))};
      if (i % 2 == 0) {
        // Subspace polynomial: each step composes x^2 + v x with v = p(w),
        // adding w to the root space.
        p = LinearizedPoly{{1}};
        const std::size_t steps = 1 + g.below(3);
        for (std::size_t r = 0; r < steps; ++r) {
          const Elem v = evaluate(*t, p, g.nonzero(*t));
          if (v != 0) p = compose(*t, LinearizedPoly{{v, 1}}, p);
        }
      }
      std::size_t zeros = 0;
      for (Elem x = 0; x < t->size(); ++x) zeros += evaluate(*t, p, x) == 0;
      const auto basis = root_space(*t, p);
      REQUIRE(zeros == (std::size_t{1} << basis.size()));
      for (Elem b : basis) REQUIRE(evaluate(*t, p, b) == 0);
      REQUIRE(independent_over_base(*t, basis));
    }
  }

  TEST_CASE("shift register synthesis reproduces the sequence") {
    Gen g(50);
    const auto t = gf::FieldTower::create(2, 5);
    for (int i = 0; i < 200; ++i) {
      const auto s = g.vec(*t, 1 + g.below(8));
      const auto sr = berlekamp_massey(*t, s);
      REQUIRE(sr.connection.coeffs.at(0) == 1);
      REQUIRE(sr.length <= s.size());
      for (std::size_t j = sr.length; j < s.size(); ++j) {
        Elem acc = 0;
        for (std::size_t k = 0; k < sr.connection.coeffs.size() && k <= j; ++k)
          acc = t->add(acc, t->mul(sr.connection.coeffs[k], t->frobenius(s[j - k], static_cast<std::int64_t>(k))));
        REQUIRE(acc == 0);
      }
    }
  }

  TEST_CASE("product code with r = 1 behaves like the base code") {
    const auto t = gf::FieldTower::create(2, 3);
    const auto base = GabidulinCode::build(t, 3, 1);
    const auto p = cartesian_product(base, 1);
    CHECK(p.min_rank_distance_bruteforce() == 3);
    for (Elem u = 0; u < 8; ++u) {
      const auto x = p.encode(ExtMatrix(t, {{u}}));
      REQUIRE(linalg::transpose(x) == ExtMatrix::row_vector(t, base.encode(std::vector<Elem>{u})));
    }
  }

  TEST_CASE("product code with r = 2 keeps the base distance") {
    const auto t = gf::FieldTower::create(2, 3);
    const auto p = cartesian_product(GabidulinCode::build(t, 3, 1), 2);
    CHECK(p.packet_length() == 6);
    CHECK(p.min_rank_distance_bruteforce() == 3);
    Gen g(51);
    for (int i = 0; i < 64; ++i) {
      const ExtMatrix u(t, {{g.elem(*t), g.elem(*t)}});
      const auto x = p.encode(u);
      REQUIRE(p.contract(p.expand(x)) == x);
      // Rank-1 error confined to the first column slice.
      ExtMatrix y = x;
      const Elem beta = g.nonzero(*t);
      for (std::size_t j = 0; j < 3; ++j) y(j, 0) = t->add(y(j, 0), t->mul(beta, g.digit(*t)));
      const auto r = p.decode(y, 1);
      REQUIRE(r.status == DecodeStatus::Ok);
      REQUIRE(r.message == u);
    }
  }

  TEST_CASE("product code rejects mismatched shapes") {
    const auto t = gf::FieldTower::create(2, 4);
    CHECK(testing::error_code([&] { ProductCode(GabidulinCode::build(t, 3, 1), 2); }).has_value());
  }
}
