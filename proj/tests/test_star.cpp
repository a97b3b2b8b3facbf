// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>
#include <stdexcept>

#include "convlat/starlat.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace convlat {
namespace {

using testutil::vq;

ExtQ q(long n, long d = 1) { return ExtQ::of(make_rational(n, d)); }

SnowflakeElement snow(ExtQ a, ExtQ b, ExtQ c) {
  return make_snowflake(a, b, c);
}

TEST_SUITE("star") {

TEST_CASE("extended rationals order, absorb, and format") {
  CHECK(ExtQ::inf() == ExtQ::inf());
  CHECK(q(3) < ExtQ::inf());
  CHECK(!(ExtQ::inf() < q(3)));
  CHECK(q(1, 2) < q(2, 3));
  CHECK(q(2, 4) == q(1, 2));
  CHECK(ext_min(q(3), ExtQ::inf()) == q(3));
  CHECK(ext_max(q(3), ExtQ::inf()) == ExtQ::inf());
  CHECK(ext_add(q(1, 2), q(1, 3)) == q(5, 6));
  CHECK(ext_add(q(1), ExtQ::inf()) == ExtQ::inf());
  CHECK(ext_scale(make_rational(2, 3), q(3, 4)) == q(1, 2));
  CHECK(ext_scale(make_rational(5), ExtQ::inf()) == ExtQ::inf());
  CHECK(format_ext(ExtQ::inf()) == "inf");
  CHECK(format_ext(q(7, 2)) == "7/2");
  CHECK(parse_ext("inf") == ExtQ::inf());
  CHECK(parse_ext("∞") == ExtQ::inf());
  CHECK(parse_ext("3/6") == q(1, 2));
}

TEST_CASE("snowflake validity and construction") {
  CHECK(snow_valid({q(1), q(1), q(2)}));
  CHECK(snow_valid({ExtQ::inf(), ExtQ::inf(), q(5)}));
  CHECK(snow_valid({ExtQ::inf(), ExtQ::inf(), ExtQ::inf()}));
  // Components below 1 are out of range.
  CHECK(!snow_valid({q(1, 2), q(1), q(1)}));
  // One component exceeding the sum of the other two breaks star shape.
  CHECK(!snow_valid({q(1), q(1), q(3)}));
  CHECK(!snow_valid({q(1), q(1), ExtQ::inf()}));
  CHECK_THROWS_AS(make_snowflake(q(1), q(1), q(3)), std::invalid_argument);
  CHECK(format_snowflake(snow(q(1), q(1), q(2))) == "[1,1,2]");
}

TEST_CASE("worked three-generator computations") {
  auto gens = snow_generators();
  CHECK(format_snowflake(gens[0]) == "[1,inf,inf]");
  CHECK(format_snowflake(gens[1]) == "[inf,1,inf]");
  CHECK(format_snowflake(gens[2]) == "[inf,inf,1]");
  // Join of the first two generators needs the repair on the third slot.
  auto s12 = snow_join(gens[0], gens[1]);
  CHECK(format_snowflake(s12) == "[1,1,2]");
  auto meet3 = snow_meet(s12, gens[2]);
  CHECK(format_snowflake(meet3) == "[inf,inf,2]");
  auto rejoin = snow_join(meet3, gens[1]);
  CHECK(format_snowflake(rejoin) == "[3,1,2]");
}

TEST_CASE("snowflake order matches the operations") {
  auto a = snow(q(2), q(2), q(2));
  auto b = snow(q(1), q(1), q(2));
  // Larger sets have smaller coordinates.
  CHECK(snow_leq(a, b));
  CHECK(!snow_leq(b, a));
  CHECK(snow_meet(a, b) == a);
  CHECK(snow_join(a, b) == b);
  for (int t = 0; t < 60; ++t) {
    Rng rng = Rng::for_trial(551, static_cast<std::uint64_t>(t));
    auto draw = [&rng]() {
      SnowflakeElement u;
      for (auto& c : u) {
        if (rng.coin()) {
          c = ExtQ::inf();
        } else {
          c = ExtQ::of(make_rational(1) +
                       make_rational(rng.range(0, 12), rng.range(1, 4)));
        }
      }
      // Repair into validity through the join with the empty star.
      return snow_join(u, u);
    };
    auto u = draw(), v = draw(), w = draw();
    REQUIRE(snow_valid(u));
    REQUIRE(snow_valid(v));
    CHECK(snow_valid(snow_meet(u, v)));
    CHECK(snow_valid(snow_join(u, v)));
    CHECK(snow_meet(u, v) == snow_meet(v, u));
    CHECK(snow_join(u, v) == snow_join(v, u));
    CHECK(snow_join(u, snow_join(v, w)) == snow_join(snow_join(u, v), w));
    CHECK(snow_meet(u, snow_meet(v, w)) == snow_meet(snow_meet(u, v), w));
    CHECK(snow_meet(u, snow_join(u, v)) == u);
    CHECK(snow_join(u, snow_meet(u, v)) == u);
    CHECK(snow_leq(u, v) == (snow_meet(u, v) == v));
  }
}

TEST_CASE("generated sublattice with small components") {
  auto elements = snow_generate(6);
  CHECK(elements.size() == 175);
  std::set<std::string> seen;
  for (const auto& e : elements) {
    CHECK(snow_valid(e));
    for (const auto& c : e) {
      if (!c.is_inf) CHECK(c.value <= make_rational(6));
    }
    CHECK(seen.insert(format_snowflake(e)).second);
  }
}

TEST_CASE("descending chain doubles the tracked component") {
  auto chain = snow_descending_chain(5);
  REQUIRE(chain.size() == 6);
  Rational expect(1);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    REQUIRE(!chain[i][0].is_inf);
    CHECK(chain[i][0].value == expect);
    expect *= 2;
    if (i > 0) {
      // Strict descent in the set order: coordinates strictly grow.
      CHECK(snow_leq(chain[i], chain[i - 1]));
      CHECK(chain[i - 1] != chain[i]);
    }
  }
}

TEST_CASE("ray configurations and their circuits") {
  StarConfig tripod =
      StarConfig::build(2, {vq({1, 0}), vq({1, 1}), vq({0, 1})});
  REQUIRE(tripod.circuits().size() == 1);
  const Circuit& c = tripod.circuits()[0];
  CHECK(c.indices == std::vector<int>({0, 1, 2}));
  REQUIRE(c.coeffs.size() == 3);
  CHECK(c.coeffs[0] == make_rational(1));
  CHECK(c.coeffs[1] == make_rational(-1));
  CHECK(c.coeffs[2] == make_rational(1));
  CHECK(c.flagged);
  CHECK(c.special == 1);

  CHECK(hexagon_config().rays().size() == 6);
  CHECK(octagon_config().rays().size() == 8);
  CHECK(chain_config().rays().size() == 4);

  // Parallel rays and duplicate rays are rejected.
  CHECK_THROWS_AS(StarConfig::build(2, {vq({1, 0}), vq({2, 0})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StarConfig::build(2, {vq({0, 0})}), std::invalid_argument);
}

TEST_CASE("closure repairs the flagged component") {
  StarConfig tripod =
      StarConfig::build(2, {vq({1, 0}), vq({1, 1}), vq({0, 1})});
  StarElement raw{q(1), ExtQ::inf(), q(1)};
  CHECK(star_in_range(tripod, raw));
  CHECK(!star_valid(tripod, raw));
  StarElement fixed = star_closure(tripod, raw);
  CHECK(format_star(fixed) == "[1,2,1]");
  CHECK(star_valid(tripod, fixed));
  // Already-valid elements are untouched.
  CHECK(star_closure(tripod, fixed) == fixed);
  // Closure only lowers coordinates (grows the set).
  for (std::size_t i = 0; i < raw.size(); ++i) {
    CHECK(fixed[i] <= raw[i]);
  }
}

TEST_CASE("star operations satisfy lattice laws on the hexagon") {
  StarConfig hex = hexagon_config();
  for (int t = 0; t < 40; ++t) {
    Rng rng = Rng::for_trial(552, static_cast<std::uint64_t>(t));
    auto draw = [&]() {
      StarElement a;
      for (std::size_t i = 0; i < hex.rays().size(); ++i) {
        a.push_back(rng.coin()
                        ? ExtQ::inf()
                        : ExtQ::of(make_rational(1) +
                                   make_rational(rng.range(0, 12),
                                                 rng.range(1, 3))));
      }
      return star_closure(hex, std::move(a));
    };
    auto u = draw(), v = draw();
    REQUIRE(star_valid(hex, u));
    auto m = star_meet(hex, u, v);
    auto j = star_join(hex, u, v);
    CHECK(star_valid(hex, m));
    CHECK(star_valid(hex, j));
    CHECK(star_leq(m, u));
    CHECK(star_leq(u, j));
    CHECK(star_meet(hex, u, star_join(hex, u, v)) == u);
    CHECK(star_join(hex, u, star_meet(hex, u, v)) == u);
  }
}

TEST_CASE("arithmetic model embeds into the six-ray configuration") {
  StarConfig hex = hexagon_config();
  auto lift = [](const SnowflakeElement& u) { return snow_to_hexagon(u); };
  auto gens = snow_generators();
  CHECK(format_star(lift(gens[0])) == "[1,inf,inf,1,inf,inf]");
  for (int t = 0; t < 40; ++t) {
    Rng rng = Rng::for_trial(553, static_cast<std::uint64_t>(t));
    auto draw = [&rng]() {
      SnowflakeElement u;
      for (auto& c : u) {
        c = rng.coin() ? ExtQ::inf()
                       : ExtQ::of(make_rational(1) +
                                  make_rational(rng.range(0, 9), rng.range(1, 3)));
      }
      return snow_join(u, u);  // repair into validity
    };
    auto u = draw(), v = draw();
    CHECK(star_valid(hex, lift(u)));
    // The embedding is a lattice homomorphism.
    CHECK(lift(snow_meet(u, v)) == star_meet(hex, lift(u), lift(v)));
    CHECK(lift(snow_join(u, v)) == star_join(hex, lift(u), lift(v)));
  }
}

TEST_CASE("ascending chain strictly climbs through valid elements") {
  ChainReport report = ascending_chain_experiment(4);
  REQUIRE(report.elements.size() == 5);
  CHECK(report.strictly_ascending);
  CHECK(report.all_valid);
  CHECK(format_star(report.elements[0]) == "[inf,2,inf,inf]");
  CHECK(format_star(report.elements[1]) == "[inf,2,3/2,inf]");
  CHECK(format_star(report.elements[2]) == "[inf,5/4,3/2,inf]");
  CHECK(format_star(report.elements[3]) == "[inf,5/4,9/8,inf]");
  StarConfig fan = chain_config();
  for (std::size_t i = 0; i < report.elements.size(); ++i) {
    CHECK(star_valid(fan, report.elements[i]));
    if (i > 0) {
      CHECK(star_leq(report.elements[i - 1], report.elements[i]));
      CHECK(report.elements[i - 1] != report.elements[i]);
    }
  }
}

TEST_CASE("octagon exploration hits the cap with the frozen profile") {
  OctagonReport report = octagon_exploration(200);
  CHECK(report.element_count == 200);
  CHECK(report.longest_chain == 17);
  CHECK(report.largest_antichain == 24);
  CHECK(report.reached_cap);
  // A small cap still reports coherent bounds.
  OctagonReport tiny = octagon_exploration(10);
  CHECK(tiny.element_count == 10);
  CHECK(tiny.reached_cap);
  CHECK(tiny.longest_chain <= 10);
}

}  // TEST_SUITE

}  // namespace
}  // namespace convlat
