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

#include "convlat/convex_lattices.hpp"
#include "convlat/gallery.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace convlat {
namespace {

using testutil::poly;
using testutil::vq;

TEST_SUITE("gallery") {

TEST_CASE("the catalogue holds fifteen well-formed entries") {
  auto entries = all_gallery_entries();
  CHECK(entries.size() == 15);
  std::set<std::string> names;
  for (const auto& e : entries) {
    CHECK(names.insert(e.name).second);
    CHECK(e.lattice != nullptr);
    CHECK(e.expected == Verdict::Fails);
    // Every free variable of the identity is assigned.
    for (const std::string& var : e.identity.free_vars) {
      CHECK(e.assignment.count(var) == 1);
    }
  }
  CHECK(names.count("dn_fail_conv:2") == 1);
  CHECK(names.count("wrapped_dn_fail_pointed:3") == 1);
  CHECK(names.count("dnop_fail_conv:1") == 1);
  CHECK(names.count("wrapped_dnop_fail_pointed:2") == 1);
  CHECK(names.count("radon_fail:2") == 1);
  CHECK(names.count("relconv_d1op_fail") == 1);
  CHECK(names.count("relconv_wrapped_fail:1") == 1);
}

TEST_CASE("every entry reproduces with a verified witness") {
  auto results = run_gallery();
  REQUIRE(results.size() == 15);
  for (const auto& r : results) {
    CAPTURE(r.entry);
    CHECK(r.pass);
    CHECK(r.expected == "fails");
    CHECK(r.observed == "fails");
    CHECK(r.witness.has_value());
  }
}

TEST_CASE("witness points carry the frozen coordinates") {
  auto check_witness = [](const std::string& name,
                          const std::vector<std::string>& coords) {
    auto results = run_gallery(name);
    REQUIRE(results.size() == 1);
    REQUIRE(results[0].witness.has_value());
    const VecQ& w = *results[0].witness;
    REQUIRE(static_cast<std::size_t>(w.size()) == coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      CHECK(format_rational(w(static_cast<int>(i))) == coords[i]);
    }
  };
  check_witness("dn_fail_conv:1", {"1/2"});
  check_witness("dn_fail_conv:2", {"1/3", "1/3"});
  check_witness("dn_fail_conv:3", {"1/4", "1/4", "1/4"});
  check_witness("wrapped_dn_fail_pointed:2", {"1/2", "1/2"});
  check_witness("wrapped_dn_fail_pointed:3", {"1/2", "0", "1/2"});
  check_witness("dnop_fail_conv:1", {"3"});
  check_witness("dnop_fail_conv:2", {"2", "2"});
  check_witness("dnop_fail_conv:3", {"2", "2", "2"});
  check_witness("wrapped_dnop_fail_pointed:2", {"2", "1/2"});
  check_witness("wrapped_dnop_fail_pointed:3", {"2", "2", "1/2"});
  check_witness("radon_fail:2", {"2", "2"});
  check_witness("radon_fail:3", {"2", "2", "2"});
  check_witness("relconv_d1op_fail", {"0", "0"});
  check_witness("relconv_wrapped_fail:1", {"0", "1"});
  check_witness("relconv_wrapped_fail:2", {"0", "1"});
}

TEST_CASE("the filter narrows runs by substring") {
  CHECK(run_gallery("radon").size() == 2);
  CHECK(run_gallery("relconv").size() == 3);
  CHECK(run_gallery("no_such_entry").empty());
}

TEST_CASE("builders reject out-of-range parameters") {
  CHECK_THROWS_AS(dn_fail_conv(0), std::logic_error);
  CHECK_THROWS_AS(dn_fail_conv(4), std::logic_error);
  CHECK_THROWS_AS(wrapped_dn_fail_pointed(1), std::logic_error);
  CHECK_THROWS_AS(radon_fail(4), std::logic_error);
  CHECK_THROWS_AS(relconv_wrapped_fail(3), std::logic_error);
}

TEST_CASE("a mismatched expectation is reported as a non-pass") {
  GalleryEntry entry = dn_fail_conv(2);
  entry.expected = Verdict::Holds;
  GalleryResult r = run_gallery_entry(entry);
  CHECK(!r.pass);
  CHECK(r.expected == "holds");
  CHECK(r.observed == "fails");
}

TEST_CASE("positive counterparts separate the failing constructions") {
  // The same law that fails over the centroid assignment holds one
  // variable up over a simplex with a full vertex family.
  ConvLattice lat(2);
  Assignment as;
  as["x"] = lat.make_element(poly({{0, 0}, {4, 0}, {0, 4}}));
  as["y1"] = lat.make_element(poly({{0, 0}}));
  as["y2"] = lat.make_element(poly({{1, 0}}));
  as["y3"] = lat.make_element(poly({{0, 1}}));
  as["y4"] = lat.make_element(poly({{1, 1}}));
  CHECK(check(build_Dn(3), lat, as).verdict == Verdict::Holds);

  // The binary law never fails in the pointed plane lattice.
  PointedConvLattice pointed(2);
  Assignment pas;
  pas["x"] = pointed.make_element(poly({{0, 0}, {1, 1}}));
  pas["y1"] = pointed.make_element(poly({{0, 0}, {2, 0}}));
  pas["y2"] = pointed.make_element(poly({{0, 0}, {0, 2}}));
  pas["y3"] = pointed.make_element(poly({{0, 0}, {-1, -1}}));
  CHECK(check(build_Dn(2), pointed, pas).verdict == Verdict::Holds);
}

}  // TEST_SUITE

}  // namespace
}  // namespace convlat
