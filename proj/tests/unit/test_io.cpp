// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "helpers.hpp"
#include "rankcrypt/io/descriptors.hpp"
#include "rankcrypt/io/packets.hpp"
#include "rankcrypt/io/text_format.hpp"
#include "rankcrypt/netsim/topology.hpp"

using namespace rankcrypt;
using linalg::BaseMatrix;
using linalg::ExtMatrix;
using testing::Gen;

TEST_SUITE("io") {
  TEST_CASE("matrix text round trips") {
    Gen g(91);
    const auto t = gf::FieldTower::create(3, 4);
    for (int i = 0; i < 50; ++i) {
      const auto e = g.ext(t, 1 + g.below(4), 1 + g.below(4));
      REQUIRE(io::parse_ext_matrix(t, io::format_matrix(e)) == e);
      const auto b = g.base(t, 1 + g.below(4), 1 + g.below(4));
      REQUIRE(io::parse_base_matrix(t, io::format_matrix(b)) == b);
    }
  }

  TEST_CASE("matrix text layout") {
    const auto t = gf::FieldTower::create(2, 3);
    CHECK(io::format_matrix(ExtMatrix(t, {{1, 2, 4}})) == "100 010 001\n");
    CHECK(io::parse_base_matrix(t, "# header\n1 0\n\n0 1\n") == BaseMatrix::identity(t, 2));
    CHECK(testing::error_code([&] { io::parse_base_matrix(t, "1 0\n1\n"); }).has_value());
    CHECK(testing::error_code([&] { io::parse_base_matrix(t, "2 0\n"); }).has_value());
  }

  TEST_CASE("packet bytes") {
    const auto t = gf::FieldTower::create(2, 3);
    const std::vector<Elem> sym{1, 2, 6};
    // Most significant digit first: a = 010, a + a^2 = 110 ascending.
    const std::vector<std::uint8_t> expect{0, 0, 1, 0, 1, 0, 1, 1, 0};
    CHECK(io::pack_symbols(*t, sym) == expect);
    CHECK(io::unpack_symbols(*t, expect, 3) == sym);
    const std::vector<std::uint8_t> truncated(expect.begin(), expect.end() - 1);
    CHECK(testing::error_code([&] { io::unpack_symbols(*t, truncated, 3); }) == ErrorCode::ShapeMismatch);
    const std::vector<std::uint8_t> bad{0, 2, 0};
    CHECK(testing::error_code([&] { io::unpack_symbols(*t, bad, 1); }) == ErrorCode::Parse);
  }

  TEST_CASE("packet bytes round trip") {
    Gen g(92);
    const auto t = gf::FieldTower::create(5, 3);
    for (int i = 0; i < 50; ++i) {
      const auto v = g.vec(*t, 4 * (1 + g.below(3)));
      REQUIRE(io::unpack_symbols(*t, io::pack_symbols(*t, v), 4) == v);
    }
  }

  TEST_CASE("scheme descriptors round trip") {
    const auto t = gf::FieldTower::create(2, 4);
    io::SchemeDescriptor d;
    d.tower = t;
    d.n = 4;
    d.k = 1;
    d.mu = 1;
    d.t = 1;
    d.points = {1, 2, 4, 8};
    const auto back = io::scheme_from_json(io::to_json(d));
    CHECK(back.kind == "layered");
    CHECK(back.tower->same_as(*t));
    CHECK(back.points == d.points);
    CHECK(back.t == 1);
    io::SchemeDescriptor c;
    c.kind = "coset";
    c.tower = gf::FieldTower::create(2, 3);
    c.n = 3;
    c.k = 1;
    c.mu = 2;
    c.h = ExtMatrix(c.tower, {{1, 2, 4}});
    const auto cb = io::scheme_from_json(io::to_json(c));
    CHECK(cb.h == c.h);
  }

  TEST_CASE("descriptor errors") {
    CHECK(testing::error_code([] { io::parse_json("{"); }) == ErrorCode::Parse);
    CHECK(testing::error_code([] { io::scheme_from_json(io::parse_json("{\"kind\":\"coset\"}")); }) ==
          ErrorCode::Parse);
    CHECK(testing::error_code([] {
            io::scheme_from_json(io::parse_json(
                R"({"format_version":1,"kind":"other","tower":"2^3","n":3,"k":1,"mu":2})"));
          }) == ErrorCode::Parse);
  }

  TEST_CASE("topology and campaign descriptors round trip") {
    const auto top = netsim::Topology::butterfly(true);
    const auto back = io::topology_from_json(io::to_json(top));
    CHECK(back.edges().size() == 11);
    CHECK(back.destinations() == top.destinations());
    const auto routed = io::topology_from_json(io::to_json(netsim::Topology::parallel(3)));
    CHECK(routed.mode() == netsim::CodingMode::Routing);
    io::CampaignConfig c{2, 1, 7, 99};
    const auto cb = io::campaign_from_json(io::to_json(c));
    CHECK(cb.mu == 2);
    CHECK(cb.t == 1);
    CHECK(cb.trials == 7);
    CHECK(cb.seed == 99);
  }
}
