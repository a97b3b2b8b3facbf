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
#include <set>
#include <stdexcept>

#include "convlat/closure_system.hpp"
#include "convlat/finite_lattice.hpp"
#include "doctest.h"

namespace convlat {
namespace {

// Re-verifies an embedding claim directly against the tables.
void require_mk(const FiniteLattice& lat, const MkEmbedding& e, int k) {
  REQUIRE(static_cast<int>(e.middles.size()) == k);
  std::set<int> distinct(e.middles.begin(), e.middles.end());
  REQUIRE(static_cast<int>(distinct.size()) == k);
  for (int i = 0; i < k; ++i) {
    CHECK(lat.leq(e.bottom, e.middles[i]));
    CHECK(lat.leq(e.middles[i], e.top));
    CHECK(e.middles[i] != e.bottom);
    CHECK(e.middles[i] != e.top);
    for (int j = i + 1; j < k; ++j) {
      CHECK(lat.meet(e.middles[i], e.middles[j]) == e.bottom);
      CHECK(lat.join(e.middles[i], e.middles[j]) == e.top);
    }
  }
}

TEST_SUITE("finite") {

TEST_CASE("builders produce the expected structures") {
  FiniteLattice c4 = chain_lattice(4);
  CHECK(c4.size() == 4);
  CHECK(c4.bottom() == c4.index_of("0"));
  CHECK(c4.top() == c4.index_of("3"));
  CHECK(c4.meet(1, 3) == 1);
  CHECK(c4.join(1, 3) == 3);
  CHECK(c4.leq(0, 2));
  CHECK(!c4.leq(2, 0));

  FiniteLattice b2 = boolean_lattice(2);
  CHECK(b2.size() == 4);
  const int s0 = b2.index_of("{0}");
  const int s1 = b2.index_of("{1}");
  CHECK(b2.meet(s0, s1) == b2.index_of("{}"));
  CHECK(b2.join(s0, s1) == b2.index_of("{0,1}"));
  CHECK(b2.is_join_irreducible(s0));
  CHECK(!b2.is_join_irreducible(b2.index_of("{0,1}")));
  CHECK(!b2.is_join_irreducible(b2.bottom()));

  FiniteLattice m3 = mk_lattice(3);
  CHECK(m3.size() == 5);
  CHECK(m3.index_of("y2") == 2);
  CHECK(m3.index_of("absent") == -1);
  CHECK(m3.meet(1, 2) == m3.bottom());
  CHECK(m3.join(1, 2) == m3.top());
}

TEST_CASE("construction validates the order and the tables") {
  // Two minimal elements under two maximal ones: no least upper bound.
  std::vector<std::vector<bool>> bowtie(4, std::vector<bool>(4, false));
  for (int i = 0; i < 4; ++i) bowtie[i][i] = true;
  bowtie[0][2] = bowtie[0][3] = bowtie[1][2] = bowtie[1][3] = true;
  CHECK_THROWS_AS(
      FiniteLattice::from_leq({"a", "b", "c", "d"}, bowtie),
      std::invalid_argument);

  // A cycle is not a partial order.
  std::vector<std::vector<bool>> cyc(2, std::vector<bool>(2, true));
  CHECK_THROWS_AS(FiniteLattice::from_leq({"a", "b"}, cyc),
                  std::invalid_argument);

  // A noncommutative meet table is rejected.
  CHECK_THROWS_AS(
      FiniteLattice::from_tables({"0", "1"}, {{0, 1}, {0, 1}},
                                 {{0, 1}, {1, 1}}),
      std::invalid_argument);
  CHECK_NOTHROW(FiniteLattice::from_tables({"0", "1"}, {{0, 0}, {0, 1}},
                                           {{0, 1}, {1, 1}}));
}

TEST_CASE("partitions canonicalize and enumerate to the Bell numbers") {
  Partition p = make_partition(3, {{2, 1}, {0}});
  CHECK(format_partition(p) == "0|1,2");
  CHECK_THROWS_AS(make_partition(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(3, {{0, 1}, {1, 2}}), std::invalid_argument);

  CHECK(all_partitions(1).size() == 1);
  CHECK(all_partitions(2).size() == 2);
  CHECK(all_partitions(3).size() == 5);
  CHECK(all_partitions(4).size() == 15);
  CHECK(all_partitions(5).size() == 52);

  Partition a = make_partition(4, {{0, 1}, {2, 3}});
  Partition b = make_partition(4, {{0, 2}, {1, 3}});
  CHECK(format_partition(partition_meet(4, a, b)) == "0|1|2|3");
  CHECK(format_partition(partition_join(4, a, b)) == "0,1,2,3");
  // Refinement through a chain of joins: 0,1 with 1,2 glues transitively.
  Partition c = make_partition(4, {{0, 1}, {2}, {3}});
  Partition d = make_partition(4, {{1, 2}, {0}, {3}});
  CHECK(format_partition(partition_join(4, c, d)) == "0,1,2|3");
}

TEST_CASE("the partition lattice orders finer below coarser") {
  FiniteLattice eq4 = partition_lattice(4);
  CHECK(eq4.size() == 15);
  CHECK(eq4.names()[eq4.bottom()] == "0|1|2|3");
  CHECK(eq4.names()[eq4.top()] == "0,1,2,3");
  const int fine = eq4.index_of("0,1|2|3");
  const int coarse = eq4.index_of("0,1|2,3");
  REQUIRE(fine >= 0);
  REQUIRE(coarse >= 0);
  CHECK(eq4.leq(fine, coarse));
  CHECK(!eq4.leq(coarse, fine));
  CHECK(partition_lattice(5).size() == 52);
}

TEST_CASE("difference subspaces translate partitions faithfully") {
  DiffSubspace zero = partition_to_subspace(3, make_partition(3, {{0}, {1}, {2}}));
  CHECK(zero.rows.rows() == 0);
  CHECK(format_diff_subspace(zero) == "[]");
  DiffSubspace full = partition_to_subspace(3, make_partition(3, {{0, 1, 2}}));
  CHECK(full.rows.rows() == 2);
  for (const Partition& p : all_partitions(4)) {
    CHECK(subspace_to_partition(partition_to_subspace(4, p)) == p);
  }
  CHECK(diff_subspace_lattice(3).size() == 5);
}

TEST_CASE("partition and subspace lattices are isomorphic") {
  IsoReport r2 = equiv_subspace_isomorphism(2);
  CHECK(r2.partition_count == 2);
  CHECK(r2.isomorphic);
  IsoReport r3 = equiv_subspace_isomorphism(3);
  CHECK(r3.partition_count == 5);
  CHECK(r3.subspace_count == 5);
  CHECK(r3.maps_mutually_inverse);
  CHECK(r3.order_preserved);
  CHECK(r3.tables_transported);
  CHECK(r3.isomorphic);
  IsoReport r4 = equiv_subspace_isomorphism(4);
  CHECK(r4.partition_count == 15);
  CHECK(r4.isomorphic);
  CHECK_THROWS_AS(equiv_subspace_isomorphism(1), std::invalid_argument);
}

TEST_CASE("height-two embeddings are found and verified") {
  FiniteLattice m3 = mk_lattice(3);
  auto direct = find_Mk(m3, 3);
  REQUIRE(direct.has_value());
  require_mk(m3, *direct, 3);
  CHECK(direct->bottom == m3.bottom());
  CHECK(direct->top == m3.top());

  CHECK(!find_Mk(chain_lattice(6), 3).has_value());
  CHECK(!find_Mk(boolean_lattice(3), 3).has_value());

  FiniteLattice eq4 = partition_lattice(4);
  auto inside = find_Mk(eq4, 3);
  REQUIRE(inside.has_value());
  require_mk(eq4, *inside, 3);

  // The three pair-partitions form their own copy over bottom and top.
  MkEmbedding pairs;
  pairs.bottom = eq4.bottom();
  pairs.top = eq4.top();
  pairs.middles = {eq4.index_of("0,1|2,3"), eq4.index_of("0,2|1,3"),
                   eq4.index_of("0,3|1,2")};
  REQUIRE(pairs.middles[0] == 3);
  REQUIRE(pairs.middles[1] == 6);
  REQUIRE(pairs.middles[2] == 8);
  require_mk(eq4, pairs, 3);

  auto four = find_Mk(eq4, 4);
  if (four.has_value()) require_mk(eq4, *four, 4);
}

TEST_CASE("tuple laws hold on distributive lattices") {
  for (int n = 1; n <= 2; ++n) {
    CHECK(is_dn(chain_lattice(5), n));
    CHECK(is_dn(boolean_lattice(2), n));
    CHECK(is_njsd(boolean_lattice(2), n));
    CHECK(is_nmsd(boolean_lattice(2), n));
    CHECK(!njsd_violation(chain_lattice(5), n).has_value());
    CHECK(!nmsd_violation(chain_lattice(5), n).has_value());
  }
}

TEST_CASE("tuple-law violations come with checkable witnesses") {
  FiniteLattice m3 = mk_lattice(3);

  auto dn = dn_violation(m3, 1);
  REQUIRE(dn.has_value());
  REQUIRE(dn->ys.size() == 2);
  {
    const int x = dn->x, y1 = dn->ys[0], y2 = dn->ys[1];
    const int lhs = m3.meet(x, m3.join(y1, y2));
    const int rhs = m3.join(m3.meet(x, y1), m3.meet(x, y2));
    CHECK(lhs != rhs);
  }
  CHECK(!is_dn(m3, 1));

  auto jsd = njsd_violation(m3, 1);
  REQUIRE(jsd.has_value());
  REQUIRE(jsd->ys.size() == 2);
  {
    const int x = jsd->x, y1 = jsd->ys[0], y2 = jsd->ys[1];
    REQUIRE(m3.join(x, y1) == m3.join(x, y2));
    CHECK(m3.join(x, y1) != m3.join(x, m3.meet(y1, y2)));
  }
  CHECK(!is_njsd(m3, 1));

  auto msd = nmsd_violation(m3, 1);
  REQUIRE(msd.has_value());
  {
    const int x = msd->x, y1 = msd->ys[0], y2 = msd->ys[1];
    REQUIRE(m3.meet(x, y1) == m3.meet(x, y2));
    CHECK(m3.meet(x, y1) != m3.meet(x, m3.join(y1, y2)));
  }
  CHECK(!is_nmsd(m3, 1));
}

TEST_CASE("the adapter exposes finite lattices to the generic checker") {
  auto handle = finite_lattice_handle(mk_lattice(3), "mk:3");
  CHECK(handle->name() == "mk:3");
  auto y1 = handle->elem_from_json("\"y1\"");
  auto y2 = handle->elem_from_json("\"y2\"");
  CHECK(handle->describe(handle->join(y1, y2)) == "1");
  CHECK(handle->elem_json(y1) == "\"y1\"");
  CHECK_THROWS_AS(handle->elem_from_json("\"zz\""), std::invalid_argument);
  CHECK_THROWS_AS(handle->elem_from_json("y1"), std::invalid_argument);
  // No ambient space: the point hooks opt out.
  CHECK(!handle->point_witness(y1, y2).has_value());
  SamplerConfig config;
  for (int t = 0; t < 30; ++t) {
    Rng rng = Rng::for_trial(661, static_cast<std::uint64_t>(t));
    auto e = handle->sample(rng, config);
    CHECK_NOTHROW(handle->describe(e));
    CHECK(handle->leq(e, handle->elem_from_json("\"1\"")));
  }
}

TEST_CASE("closure systems validate input and close correctly") {
  CHECK_THROWS_AS(ClosureSystem({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(ClosureSystem({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(ClosureSystem({"a"}, {ClosureRule{{0}, 5}}),
                  std::invalid_argument);

  ClosureSystem majority({"a", "b", "c", "d"},
                         {ClosureRule{{0, 1}, 2}, ClosureRule{{1, 2}, 3}});
  CHECK(majority.close(0b0011u) == 0b1111u);
  CHECK(majority.close(0b0110u) == 0b1110u);
  CHECK(majority.close(0u) == 0u);
  CHECK(majority.is_closed(0b0101u));
  CHECK(!majority.is_closed(0b0011u));
  CHECK(majority.format_subset(0b0101u) == "{a,c}");
  CHECK(majority.format_subset(0u) == "{}");
  auto closed = majority.closed_sets();
  CHECK(closed.size() == 12);
  for (std::uint32_t mask : closed) CHECK(majority.is_closed(mask));

  FiniteLattice lat = closed_set_lattice(majority);
  CHECK(lat.size() == 12);
  // Meet of closed sets is their intersection.
  const int ab_cd = lat.index_of(majority.format_subset(majority.close(0b0011u)));
  const int c = lat.index_of("{c}");
  REQUIRE(ab_cd >= 0);
  REQUIRE(c >= 0);
  CHECK(lat.meet(ab_cd, c) == c);
}

TEST_CASE("closure operator laws hold on random systems") {
  for (int t = 0; t < 30; ++t) {
    Rng rng = Rng::for_trial(662, static_cast<std::uint64_t>(t));
    ClosureSystem sys = random_closure_system(rng);
    CHECK(sys.ground_size() >= 3);
    CHECK(sys.ground_size() <= 6);
    const std::uint32_t full = (1u << sys.ground_size()) - 1;
    for (int probe = 0; probe < 10; ++probe) {
      const std::uint32_t m =
          static_cast<std::uint32_t>(rng.below(full + 1));
      const std::uint32_t cm = sys.close(m);
      CHECK((m & cm) == m);
      CHECK(sys.close(cm) == cm);
      const std::uint32_t m2 =
          static_cast<std::uint32_t>(rng.below(full + 1));
      const std::uint32_t that = sys.close(m | m2);
      CHECK((cm & that) == cm);
    }
    // Bounded generation at the full arity is trivially present.
    CHECK(caratheodory_property(sys, sys.ground_size()));
  }
}

TEST_CASE("bounded generation versus the distributive law") {
  ClosureSystem majority({"a", "b", "c", "d"},
                         {ClosureRule{{0, 1}, 2}, ClosureRule{{1, 2}, 3}});
  ClosureLawReport r1 = check_caratheodory_distributivity(majority, 1);
  CHECK(r1.checked);
  CHECK(!r1.dn_holds);
  CHECK(!r1.caratheodory_holds);
  CHECK(r1.biconditional_holds);
  for (int n = 2; n <= 3; ++n) {
    ClosureLawReport r = check_caratheodory_distributivity(majority, n);
    CHECK(r.checked);
    CHECK(r.dn_holds);
    CHECK(r.caratheodory_holds);
    CHECK(r.biconditional_holds);
  }

  // With no rules every subset is closed and every arity works.
  ClosureSystem free3({"a", "b", "c"}, {});
  CHECK(free3.closed_sets().size() == 8);
  ClosureLawReport fr = check_caratheodory_distributivity(free3, 1);
  CHECK(fr.checked);
  CHECK(fr.dn_holds);
  CHECK(fr.caratheodory_holds);
  CHECK(fr.biconditional_holds);

  // An unconditional rule makes a singleton closure reducible, which the
  // comparison refuses to interpret.
  ClosureSystem seeded({"a", "b"}, {ClosureRule{{}, 0}});
  CHECK(seeded.close(0u) == 0b01u);
  ClosureLawReport sr = check_caratheodory_distributivity(seeded, 1);
  CHECK(!sr.checked);
  CHECK(sr.skipped_reason.find("join-irreducible") != std::string::npos);
}

}  // TEST_SUITE

}  // namespace
}  // namespace convlat
