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

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>

#include "convlat/convex_lattices.hpp"
#include "convlat/relconv.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace convlat {
namespace {

using testutil::poly;
using testutil::vq;

GroundSet axes5() {
  GroundSet g;
  g.dim = 2;
  g.points = {vq({0, 0}), vq({1, 0}), vq({0, 1}), vq({-1, 0}), vq({0, -1})};
  return g;
}

GroundSet line_ground(std::initializer_list<long> xs) {
  GroundSet g;
  g.dim = 1;
  for (long x : xs) g.points.push_back(vq({x}));
  return g;
}

TEST_SUITE("relconv") {

TEST_CASE("relative closure adds exactly the covered ground points") {
  GroundSet g = axes5();
  CHECK(rel_closure(g, {}) == std::vector<int>{});
  CHECK(rel_closure(g, {0}) == std::vector<int>{0});
  // The origin lies on the segment between the two horizontal points.
  CHECK(rel_closure(g, {1, 3}) == std::vector<int>({0, 1, 3}));
  // The diagonal segment misses every other ground point.
  CHECK(rel_closure(g, {1, 2}) == std::vector<int>({1, 2}));
  // The square spanned by the four outer points covers the origin.
  CHECK(rel_closure(g, {1, 2, 3, 4}) == std::vector<int>({0, 1, 2, 3, 4}));
  // Input order and duplicates are irrelevant.
  CHECK(rel_closure(g, {3, 1, 3, 1}) == std::vector<int>({0, 1, 3}));
  CHECK_THROWS_AS(rel_closure(g, {5}), std::invalid_argument);
}

TEST_CASE("closure operator laws on random subsets") {
  GroundSet g = axes5();
  const int n = static_cast<int>(g.points.size());
  for (int t = 0; t < 60; ++t) {
    Rng rng = Rng::for_trial(441, static_cast<std::uint64_t>(t));
    std::vector<int> a, b;
    for (int i = 0; i < n; ++i) {
      if (rng.coin()) a.push_back(i);
      if (rng.coin()) b.push_back(i);
    }
    std::vector<int> ca = rel_closure(g, a);
    // Extensive and idempotent.
    CHECK(std::includes(ca.begin(), ca.end(), a.begin(), a.end()));
    CHECK(rel_closure(g, ca) == ca);
    // Monotone on the union.
    std::vector<int> u = a;
    u.insert(u.end(), b.begin(), b.end());
    std::vector<int> cu = rel_closure(g, u);
    CHECK(std::includes(cu.begin(), cu.end(), ca.begin(), ca.end()));
  }
}

TEST_CASE("closed-set enumeration is exact on small grounds") {
  // Three collinear points: one non-closed subset, the endpoint pair.
  GroundSet g3 = line_ground({0, 1, 2});
  auto closed3 = enumerate_closed_sets(g3);
  CHECK(closed3.size() == 7);
  CHECK(closed3.front() == std::vector<int>{});
  CHECK(closed3.back() == std::vector<int>({0, 1, 2}));

  GroundSet g = axes5();
  auto closed = enumerate_closed_sets(g);
  CHECK(closed.size() == 25);
  std::set<std::vector<int>> unique(closed.begin(), closed.end());
  CHECK(unique.size() == closed.size());
  for (std::size_t i = 0; i < closed.size(); ++i) {
    CHECK(rel_closure(g, closed[i]) == closed[i]);
    if (i > 0) {
      // Sorted by size, then lexicographically.
      const bool size_le = closed[i - 1].size() <= closed[i].size();
      CHECK(size_le);
      if (closed[i - 1].size() == closed[i].size()) {
        CHECK(closed[i - 1] < closed[i]);
      }
    }
  }
}

TEST_CASE("one-dimensional meets agree with interval intersection") {
  GroundSet g = line_ground({0, 1, 2, 3});
  // Closed sets: contiguous runs of ground points.
  CHECK(hull_lattice_R1_meet_check(g, {0, 1, 2}, {1, 2, 3}));
  CHECK(hull_lattice_R1_meet_check(g, {0}, {3}));
  CHECK(hull_lattice_R1_meet_check(g, {}, {0, 1}));
  // A non-closed pair can break the interval law; the check detects it.
  CHECK(!hull_lattice_R1_meet_check(g, {0, 2}, {1, 3}));
  GroundSet g2 = axes5();
  CHECK_THROWS_AS(hull_lattice_R1_meet_check(g2, {0}, {1}),
                  std::invalid_argument);
}

TEST_CASE("random 1D grounds satisfy the meet law on closed sets") {
  for (int t = 0; t < 80; ++t) {
    Rng rng = Rng::for_trial(442, static_cast<std::uint64_t>(t));
    GroundSet g;
    g.dim = 1;
    std::set<Rational> used;
    const long count = rng.range(2, 7);
    while (static_cast<long>(g.points.size()) < count) {
      Rational v = rng.rational(8, 4);
      if (used.insert(v).second) {
        VecQ p(1);
        p(0) = v;
        g.points.push_back(p);
      }
    }
    std::vector<int> x, y;
    for (int i = 0; i < static_cast<int>(g.points.size()); ++i) {
      if (rng.coin()) x.push_back(i);
      if (rng.coin()) y.push_back(i);
    }
    CHECK(hull_lattice_R1_meet_check(g, rel_closure(g, x),
                                     rel_closure(g, y)));
  }
}

TEST_CASE("relative-convexity adapter semantics") {
  RelConvLattice lat(axes5(), "relconv:data/ground_axes5.json");
  CHECK(lat.name() == "relconv:data/ground_axes5.json");
  auto horizontal = lat.make_element({1, 3});
  CHECK(lat.as_indices(horizontal) == std::vector<int>({0, 1, 3}));
  auto vertical = lat.make_element({2, 4});
  // Meet is plain intersection of closed sets; join closes the union.
  auto m = lat.meet(horizontal, vertical);
  CHECK(lat.as_indices(m) == std::vector<int>({0}));
  auto j = lat.join(lat.make_element({1}), lat.make_element({3}));
  CHECK(lat.as_indices(j) == std::vector<int>({0, 1, 3}));
  CHECK(lat.leq(m, horizontal));
  CHECK(!lat.leq(horizontal, vertical));
  CHECK(lat.describe(m) == "{(0, 0)}");
  // Witnesses are ground points of the left side missing from the right.
  auto w = lat.point_witness(horizontal, vertical);
  REQUIRE(w.has_value());
  CHECK(*lat.contains_point(horizontal, *w));
  CHECK(!*lat.contains_point(vertical, *w));
  CHECK(!lat.point_witness(m, horizontal).has_value());
}

TEST_CASE("adapter JSON uses coordinates and validates closure") {
  RelConvLattice lat(axes5(), "g");
  auto e = lat.make_element({1, 3});
  std::string json = lat.elem_json(e);
  auto back = lat.elem_from_json(json);
  CHECK(lat.equal(e, back));
  // A non-closed point list is rejected.
  CHECK_THROWS_AS(
      lat.elem_from_json(R"({"points":[["1","0"],["-1","0"]]})"),
      std::invalid_argument);
  // Points outside the ground set are rejected.
  CHECK_THROWS_AS(lat.elem_from_json(R"({"points":[["5","5"]]})"),
                  std::invalid_argument);
}

TEST_CASE("pointed variant pins the base point everywhere") {
  RelConvLattice lat(axes5(), "p", 0);
  CHECK(lat.base_point() == 0);
  auto e = lat.make_element({1});
  CHECK(lat.as_indices(e) == std::vector<int>({0, 1}));
  CHECK_THROWS_AS(lat.elem_from_json(R"({"points":[["1","0"]]})"),
                  std::invalid_argument);
  SamplerConfig config;
  for (int t = 0; t < 40; ++t) {
    Rng rng = Rng::for_trial(443, static_cast<std::uint64_t>(t));
    auto s = lat.sample(rng, config);
    const auto& idx = lat.as_indices(s);
    CHECK(std::binary_search(idx.begin(), idx.end(), 0));
  }
}

TEST_CASE("sampled elements are closed and satisfy the lattice laws") {
  RelConvLattice lat(axes5(), "g");
  SamplerConfig config;
  for (int t = 0; t < 60; ++t) {
    Rng rng = Rng::for_trial(444, static_cast<std::uint64_t>(t));
    auto a = lat.sample(rng, config);
    auto b = lat.sample(rng, config);
    CHECK(rel_closure(lat.ground(), lat.as_indices(a)) == lat.as_indices(a));
    CHECK(lat.equal(lat.meet(a, lat.join(a, b)), a));
    CHECK(lat.equal(lat.join(a, lat.meet(a, b)), a));
    CHECK(lat.equal(lat.meet(a, b), lat.meet(b, a)));
  }
}

TEST_CASE("relativization replaces the meet and keeps the join") {
  auto base = std::make_shared<ConvLattice>(2);
  auto p1 = base->make_element(poly({{0, 0}, {1, 0}}));
  auto p2 = base->make_element(poly({{3, 0}, {4, 0}}));
  auto lat = relativize(base, {p1, p2});
  CHECK(lat->name() == "relativized(conv:2)");
  auto e1 = lat->elem_from_json(base->elem_json(p1));
  auto e2 = lat->elem_from_json(base->elem_json(p2));
  // Disjoint pieces now meet at the bottom even though the pieces span a
  // segment through the gap in the base lattice's join.
  auto m = lat->meet(e1, e2);
  CHECK(base->as_polytope(m) == Polytope(2));
  auto j = lat->join(e1, e2);
  CHECK(base->as_polytope(j) == poly({{0, 0}, {4, 0}}));
  // A point in the gap is not a fixed point of the interior operator.
  CHECK_THROWS_AS(
      lat->elem_from_json(R"({"dim":2,"vertices":[["2","0"]]})"),
      std::invalid_argument);
  // Samples land on fixed points: re-validating through JSON round trips.
  SamplerConfig config;
  for (int t = 0; t < 20; ++t) {
    Rng rng = Rng::for_trial(445, static_cast<std::uint64_t>(t));
    auto s = lat->sample(rng, config);
    CHECK_NOTHROW(lat->elem_from_json(lat->elem_json(s)));
  }
  CHECK_THROWS_AS(relativize(base, {}), std::invalid_argument);
}

}  // TEST_SUITE

}  // namespace
}  // namespace convlat
