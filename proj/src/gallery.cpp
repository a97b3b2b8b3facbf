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

#include "convlat/gallery.hpp"

#include <algorithm>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "convlat/convex_lattices.hpp"
#include "convlat/polytope.hpp"
#include "convlat/relconv.hpp"

namespace convlat {

namespace {

// Construction invariants are programming errors if violated: every
// entry is fixed data, so a failed condition means the catalogue itself
// is wrong, not the caller's input.
void ensure(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error("gallery: " + msg);
}

VecQ vec(std::initializer_list<Rational> coords) {
  VecQ v(static_cast<int>(coords.size()));
  int i = 0;
  for (const Rational& c : coords) v(i++) = c;
  return v;
}

/// Standard basis vector e_axis in R^dim (axis 0-based).
VecQ unit(int dim, int axis) {
  VecQ v = VecQ::Zero(dim);
  v(axis) = 1;
  return v;
}

/// Vertices of the standard simplex in R^dim: 0, e_1, ..., e_dim.
std::vector<VecQ> simplex_vertices(int dim) {
  std::vector<VecQ> verts;
  verts.push_back(VecQ::Zero(dim));
  for (int j = 0; j < dim; ++j) verts.push_back(unit(dim, j));
  return verts;
}

GalleryEntry conv_entry(std::string name, int dim, Identity id,
                        const std::vector<std::pair<std::string,
                                                    std::vector<VecQ>>>&
                            generators,
                        bool pointed) {
  std::shared_ptr<ConvLattice> lat;
  if (pointed) {
    lat = std::make_shared<PointedConvLattice>(dim);
  } else {
    lat = std::make_shared<ConvLattice>(dim);
  }
  GalleryEntry e;
  e.name = std::move(name);
  e.lattice = lat;
  e.identity = std::move(id);
  for (const auto& [var, points] : generators) {
    e.assignment[var] = lat->make_element(hull(points, dim));
  }
  ensure(e.assignment.size() == e.identity.free_vars.size(),
         e.name + ": assignment does not cover the identity's variables");
  for (const std::string& var : e.identity.free_vars) {
    ensure(e.assignment.count(var) == 1,
           e.name + ": missing assignment for " + var);
  }
  e.expected = Verdict::Fails;
  return e;
}

/// Shared scaffold for the two relative-convexity wrapped entries and
/// the unpointed dual-law entry: builds the lattice, turns 1-based
/// circle subscripts into elements, and asserts that closure adds
/// nothing to any assignment set (each set really is an element, not
/// merely a generating set).
GalleryEntry relconv_entry(
    std::string name, GroundSet ground, std::string label, int base_point,
    Identity id,
    const std::vector<std::pair<std::string, std::vector<int>>>& sets) {
  auto lat = std::make_shared<RelConvLattice>(std::move(ground),
                                              std::move(label), base_point);
  GalleryEntry e;
  e.name = std::move(name);
  e.lattice = lat;
  e.identity = std::move(id);
  for (const auto& [var, indices] : sets) {
    LatticeHandle::Elem el = lat->make_element(indices);
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    ensure(lat->as_indices(el) == sorted,
           e.name + ": assignment set " + var +
               " is not relatively convex as given");
    e.assignment[var] = std::move(el);
  }
  for (const std::string& var : e.identity.free_vars) {
    ensure(e.assignment.count(var) == 1,
           e.name + ": missing assignment for " + var);
  }
  e.expected = Verdict::Fails;
  return e;
}

Rational dot(const VecQ& a, const VecQ& b) {
  return (a.transpose() * b)(0, 0);
}

Rational cross2(const VecQ& a, const VecQ& b) {
  return a(0) * b(1) - a(1) * b(0);
}

}  // namespace

GalleryEntry dn_fail_conv(int n) {
  ensure(n >= 1 && n <= 3, "dn_fail_conv: n must be in 1..3");
  // Simplex vertices as singleton y's; x is the centroid alone.  The
  // meet side keeps the centroid, while every leave-one-out join is a
  // facet missing it, so the join side collapses to the empty set.
  std::vector<VecQ> verts = simplex_vertices(n);
  VecQ centroid = VecQ::Zero(n);
  for (const VecQ& v : verts) centroid += v;
  centroid /= Rational(n + 1);
  std::vector<std::pair<std::string, std::vector<VecQ>>> gens;
  gens.emplace_back("x", std::vector<VecQ>{centroid});
  for (int i = 0; i < n + 1; ++i) {
    gens.emplace_back("y" + std::to_string(i + 1),
                      std::vector<VecQ>{verts[i]});
  }
  return conv_entry("dn_fail_conv:" + std::to_string(n), n, build_Dn(n),
                    gens, /*pointed=*/false);
}

GalleryEntry wrapped_dn_fail_pointed(int n) {
  ensure(n >= 2 && n <= 3, "wrapped_dn_fail_pointed: n must be in 2..3");
  // Lift the (n-1)-dimensional centroid construction into the affine
  // hyperplane {last coordinate = 1} and cone every set over the origin.
  // The auxiliary point q = q2/2 is placed in y1 (it already lies in
  // y2), and z reaches q from the centroid: q is the midpoint of the
  // segment from p to 2q - p, so the wrapped left side keeps q while the
  // wrapped right side cannot reach past a proper fraction of it.
  const int m = n - 1;
  // Simplex vertices inside the hyperplane: q_1 = e_n, q_j = e_{j-1}+e_n.
  std::vector<VecQ> qs;
  qs.push_back(unit(n, n - 1));
  for (int j = 1; j <= m; ++j) qs.push_back(unit(n, j - 1) + unit(n, n - 1));
  VecQ p = VecQ::Zero(n);
  for (const VecQ& v : qs) p += v;
  p /= Rational(m + 1);
  const VecQ q = qs[1] / Rational(2);
  const VecQ z0 = 2 * q - p;
  const VecQ origin = VecQ::Zero(n);
  std::vector<std::pair<std::string, std::vector<VecQ>>> gens;
  gens.emplace_back("x", std::vector<VecQ>{origin, p});
  gens.emplace_back("y1", std::vector<VecQ>{origin, qs[0], q});
  for (int i = 2; i <= m + 1; ++i) {
    gens.emplace_back("y" + std::to_string(i),
                      std::vector<VecQ>{origin, qs[i - 1]});
  }
  gens.emplace_back("z", std::vector<VecQ>{origin, z0});
  return conv_entry("wrapped_dn_fail_pointed:" + std::to_string(n), n,
                    build_wrapped_Dn(m), gens, /*pointed=*/true);
}

GalleryEntry dnop_fail_conv(int n) {
  ensure(n >= 1 && n <= 3, "dnop_fail_conv: n must be in 1..3");
  // x is the standard simplex, p an outside point, and the y's are the
  // facets of the reflected simplex 2p - x.  The y's intersect in
  // nothing, so the meet side is x alone; but each leave-one-out meet of
  // y's is a reflected vertex, and joining x with the reflection of one
  // of its own vertices always captures p.
  std::vector<VecQ> verts = simplex_vertices(n);
  VecQ p(n);
  for (int j = 0; j < n; ++j) p(j) = 2;
  std::vector<VecQ> reflected;
  for (const VecQ& v : verts) reflected.push_back(2 * p - v);
  std::vector<std::pair<std::string, std::vector<VecQ>>> gens;
  gens.emplace_back("x", verts);
  for (int i = 0; i < n + 1; ++i) {
    std::vector<VecQ> face;
    for (int j = 0; j < n + 1; ++j) {
      if (j != i) face.push_back(reflected[j]);
    }
    gens.emplace_back("y" + std::to_string(i + 1), face);
  }
  return conv_entry("dnop_fail_conv:" + std::to_string(n), n,
                    build_Dn_op(n), gens, /*pointed=*/false);
}

GalleryEntry wrapped_dnop_fail_pointed(int n) {
  ensure(n >= 2 && n <= 3, "wrapped_dnop_fail_pointed: n must be in 2..3");
  // Lift the (n-1)-dimensional reflected-simplex construction into the
  // hyperplane {last coordinate = 1} and cone over the origin.  q0 is
  // the reflected vertex opposite the face omitted from y1; feeding
  // q0/2 into y1 makes y1 ^ ... ^ y_n reach exactly up to q0/2, which
  // the wrapped right side attains through the plane point p0 while the
  // wrapped left side stops strictly short of it.
  const int m = n - 1;
  std::vector<VecQ> w;  // simplex vertices inside the hyperplane
  w.push_back(unit(n, n - 1));
  for (int j = 1; j <= m; ++j) w.push_back(unit(n, j - 1) + unit(n, n - 1));
  VecQ p0(n);
  for (int j = 0; j < m; ++j) p0(j) = 2;
  p0(n - 1) = 1;
  std::vector<VecQ> reflected;
  for (const VecQ& v : w) reflected.push_back(2 * p0 - v);
  const VecQ q0 = reflected[0];  // opposite the face y1 omits
  const VecQ origin = VecQ::Zero(n);
  std::vector<std::pair<std::string, std::vector<VecQ>>> gens;
  std::vector<VecQ> xg = w;
  xg.push_back(origin);
  gens.emplace_back("x", xg);
  for (int i = 1; i <= m + 1; ++i) {
    std::vector<VecQ> face;
    for (int j = 0; j < m + 1; ++j) {
      if (j != i - 1) face.push_back(reflected[j]);
    }
    face.push_back(origin);
    if (i == 1) face.push_back(q0 / Rational(2));
    gens.emplace_back("y" + std::to_string(i), face);
  }
  gens.emplace_back("z", std::vector<VecQ>{origin, q0 - p0});
  gens.emplace_back("zp", std::vector<VecQ>{origin, p0});
  return conv_entry("wrapped_dnop_fail_pointed:" + std::to_string(n), n,
                    build_wrapped_Dn_op(m), gens, /*pointed=*/true);
}

GalleryEntry radon_fail(int n_plus_1) {
  ensure(n_plus_1 >= 2 && n_plus_1 <= 3,
         "radon_fail: n_plus_1 must be in 2..3");
  // The inequation for dimension n runs one dimension up: x is the
  // (n+1)-simplex, p an outside point, and the y's are the reflected
  // vertices, one per vertex of x.  Every x v y_i captures p (midpoint
  // of a vertex and its reflection), but complementary faces of the
  // small reflected simplex are disjoint, so the right side is x alone.
  const int d = n_plus_1;
  std::vector<VecQ> verts = simplex_vertices(d);
  VecQ p(d);
  for (int j = 0; j < d; ++j) p(j) = 2;
  std::vector<std::pair<std::string, std::vector<VecQ>>> gens;
  gens.emplace_back("x", verts);
  for (int i = 0; i < d + 1; ++i) {
    gens.emplace_back("y" + std::to_string(i + 1),
                      std::vector<VecQ>{2 * p - verts[i]});
  }
  return conv_entry("radon_fail:" + std::to_string(d), d,
                    build_radon_identity(d - 1), gens, /*pointed=*/false);
}

GalleryEntry relconv_d1op_fail() {
  // Ground set: origin plus the four unit axis points.  The two
  // singleton y's meet in nothing, so the left side is x alone; but each
  // x v y_i closes over an antipodal pair and captures the origin, which
  // survives the meet on the right.
  GroundSet ground;
  ground.dim = 2;
  ground.points = {vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({-1, 0}),
                   vec({0, -1})};
  for (int i = 1; i <= 2; ++i) {
    ensure(ground.points[i] == -ground.points[i + 2],
           "relconv_d1op_fail: axis points must come in antipodal pairs");
  }
  std::vector<std::pair<std::string, std::vector<int>>> sets;
  sets.emplace_back("x", std::vector<int>{3, 4});
  sets.emplace_back("y1", std::vector<int>{2});
  sets.emplace_back("y2", std::vector<int>{1});
  return relconv_entry("relconv_d1op_fail", std::move(ground),
                       "relconv:axes5", /*base_point=*/-1, build_Dn_op(1),
                       sets);
}

GalleryEntry relconv_wrapped_fail(int n) {
  ensure(n >= 1 && n <= 2, "relconv_wrapped_fail: n must be in 1..2");
  // 2n+6 rational points on the unit circle in antipodal pairs, plus the
  // origin and an external point r at twice the distinguished point
  // s = q_{n+2}.  Subscripts are 1-based and follow the circular order.
  // The y's are leave-one-out subsets of {q_1..q_{n+3}}, x is the arc
  // {q_{n+3}..q_{2n+4}}, and the wrappers z' = {q_{n+3}, 0} and
  // z = {q_{n+3}, r} are pinned at the base point p = q_{n+3}.  The
  // distinguished point s separates the sides: the right side reaches 0,
  // closes over the segment from 0 to r (which passes through s), and
  // keeps s in the final meet, while the left side never reaches 0 and
  // ends at {p}.
  std::vector<VecQ> circle;
  if (n == 1) {
    circle = {vec({1, 0}),
              vec({make_rational(4, 5), make_rational(3, 5)}),
              vec({0, 1}),
              vec({make_rational(-4, 5), make_rational(3, 5)})};
  } else {
    circle = {vec({1, 0}),
              vec({make_rational(4, 5), make_rational(3, 5)}),
              vec({make_rational(3, 5), make_rational(4, 5)}),
              vec({0, 1}),
              vec({make_rational(-3, 5), make_rational(4, 5)})};
  }
  const int half = n + 3;
  ensure(static_cast<int>(circle.size()) == half,
         "relconv_wrapped_fail: wrong number of seed points");
  for (int i = 0; i < half; ++i) circle.push_back(-circle[i]);

  // Surrogate conditions, asserted exactly before anything runs.
  for (const VecQ& q : circle) {
    ensure(dot(q, q) == 1, "relconv_wrapped_fail: circle point off the "
                           "rational unit circle");
  }
  for (int i = 0; i < half; ++i) {
    ensure(circle[i + half] == -circle[i],
           "relconv_wrapped_fail: antipodal pairing broken");
  }
  const int total = 2 * half;
  for (int i = 0; i < total; ++i) {
    ensure(cross2(circle[i], circle[(i + 1) % total]) > 0,
           "relconv_wrapped_fail: circle points out of circular order");
  }
  for (int i = 0; i < total; ++i) {
    std::vector<VecQ> others;
    for (int j = 0; j < total; ++j) {
      if (j != i) others.push_back(circle[j]);
    }
    ensure(!contains(hull(others, 2), circle[i]),
           "relconv_wrapped_fail: circle points not in convex position");
  }
  const VecQ s = circle[n + 1];  // q_{n+2}, 1-based
  const VecQ r = 2 * s;
  ensure(dot(r, r) >= 4,
         "relconv_wrapped_fail: external point closer than distance 2");

  GroundSet ground;
  ground.dim = 2;
  ground.points = circle;
  ground.points.push_back(vec({0, 0}));  // index 2n+6
  ground.points.push_back(r);            // index 2n+7
  const int origin_idx = total;
  const int r_idx = total + 1;
  const int p_idx = n + 2;  // q_{n+3}, 1-based

  std::vector<std::pair<std::string, std::vector<int>>> sets;
  for (int i = 1; i <= n + 1; ++i) {
    std::vector<int> y;
    for (int j = 1; j <= n + 3; ++j) {
      if (j != i) y.push_back(j - 1);
    }
    sets.emplace_back("y" + std::to_string(i), y);
  }
  std::vector<int> x;
  for (int j = n + 3; j <= 2 * n + 4; ++j) x.push_back(j - 1);
  sets.emplace_back("x", x);
  sets.emplace_back("z", std::vector<int>{p_idx, r_idx});
  sets.emplace_back("zp", std::vector<int>{p_idx, origin_idx});
  std::string label = "relconv-pointed:circle" + std::to_string(total) +
                      ":" + std::to_string(p_idx);
  return relconv_entry("relconv_wrapped_fail:" + std::to_string(n),
                       std::move(ground), std::move(label), p_idx,
                       build_wrapped_Dn_op(n), sets);
}

std::vector<GalleryEntry> all_gallery_entries() {
  std::vector<GalleryEntry> entries;
  for (int n = 1; n <= 3; ++n) entries.push_back(dn_fail_conv(n));
  for (int n = 2; n <= 3; ++n) entries.push_back(wrapped_dn_fail_pointed(n));
  for (int n = 1; n <= 3; ++n) entries.push_back(dnop_fail_conv(n));
  for (int n = 2; n <= 3; ++n) {
    entries.push_back(wrapped_dnop_fail_pointed(n));
  }
  for (int d = 2; d <= 3; ++d) entries.push_back(radon_fail(d));
  entries.push_back(relconv_d1op_fail());
  for (int n = 1; n <= 2; ++n) entries.push_back(relconv_wrapped_fail(n));
  return entries;
}

GalleryResult run_gallery_entry(const GalleryEntry& e) {
  GalleryResult result;
  result.entry = e.name;
  result.expected = verdict_name(e.expected);
  CheckReport report = check(e.identity, *e.lattice, e.assignment);
  result.observed = verdict_name(report.verdict);
  result.witness = report.witness;
  bool ok = report.verdict == e.expected;
  if (ok && e.expected == Verdict::Fails) {
    // Re-verify the witness independently: it must lie in one evaluated
    // side and not the other (for an inequation, in the left and not the
    // right, since that is the only way lhs <= rhs can break).
    ok = false;
    if (report.witness.has_value()) {
      const LatticeHandle& lat = *e.lattice;
      LatticeHandle::Elem lhs = eval_term(e.identity.lhs, lat, e.assignment);
      LatticeHandle::Elem rhs = eval_term(e.identity.rhs, lat, e.assignment);
      std::optional<bool> in_lhs = lat.contains_point(lhs, *report.witness);
      std::optional<bool> in_rhs = lat.contains_point(rhs, *report.witness);
      if (in_lhs.has_value() && in_rhs.has_value()) {
        if (e.identity.mode == IdentityMode::Inequation) {
          ok = *in_lhs && !*in_rhs;
        } else {
          ok = *in_lhs != *in_rhs;
        }
      }
    }
  }
  result.pass = ok;
  return result;
}

std::vector<GalleryResult> run_gallery(const std::string& filter) {
  std::vector<GalleryResult> results;
  for (const GalleryEntry& e : all_gallery_entries()) {
    if (!filter.empty() && e.name.find(filter) == std::string::npos) {
      continue;
    }
    results.push_back(run_gallery_entry(e));
  }
  return results;
}

}  // namespace convlat
