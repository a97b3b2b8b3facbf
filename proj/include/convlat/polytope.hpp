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

// Exact polytopes over Q in canonical V-representation.
//
// A Polytope stores only the extreme points of its hull, sorted
// lexicographically, so equal point sets produce bit-identical values and
// structural equality decides geometric equality.  The empty polytope is a
// first-class value: it is the bottom element of the lattice of polytopes
// under intersection (meet) and hull-of-union (join).
//
// Representation conversions run through one double-description kernel
// (extreme rays of {y : My <= 0}) used in both directions:
//   * to_h_rep    — facets = extreme rays of the valid-inequality cone,
//                   affine-hull equalities = its lineality space;
//   * from_h_rep  — vertices = extreme rays of the homogenization.
// Exact rational pivots make the results exact in every degenerate case;
// ambient dimensions 1-4 are the supported regime (higher dims work on the
// same code path, just without the same level of test coverage).

#pragma once

#include <string>
#include <vector>

#include "convlat/rational.hpp"

namespace convlat {

/// Lexicographic strict order on coordinate vectors (the canonical vertex
/// order).
bool lex_less(const VecQ& a, const VecQ& b);

class Polytope {
 public:
  /// The empty polytope in the given ambient dimension.
  explicit Polytope(int dim = 0) : dim_(dim) {}

  int dim() const { return dim_; }
  bool is_empty() const { return verts_.empty(); }
  const std::vector<VecQ>& vertices() const { return verts_; }

  bool operator==(const Polytope& o) const;
  bool operator!=(const Polytope& o) const { return !(*this == o); }

  std::string to_string() const;

  /// Trusted constructor: `verts` must already be exactly the extreme
  /// points; they are sorted (and deduplicated) but not re-filtered.
  static Polytope from_extreme_points(int dim, std::vector<VecQ> verts);

 private:
  int dim_;
  std::vector<VecQ> verts_;  // sorted by lex_less, no duplicates
};

/// H-representation: intersection of half-spaces normal.x <= offset plus
/// affine-hull equalities normal.x = offset.  Rows are normalized to
/// coprime integer coefficients and sorted, so equal representations
/// compare equal.
struct HPolytope {
  int dim = 0;
  std::vector<std::pair<VecQ, Rational>> inequalities;
  std::vector<std::pair<VecQ, Rational>> equalities;
};

/// Extreme rays and lineality space of the cone {y : My <= 0}.
struct ConeRays {
  std::vector<VecQ> rays;       // primitive integer direction vectors
  std::vector<VecQ> lineality;  // basis of {y : My = 0}
};

/// Double-description kernel.  Handles non-pointed cones by splitting off
/// the lineality space first.
ConeRays dd_extreme_rays(const MatQ& m);

/// Canonical hull: drop duplicates, keep exactly the extreme points, sort.
Polytope hull(const std::vector<VecQ>& points, int dim);

/// Exact membership: q is a convex combination of P's vertices (LP
/// feasibility).  The empty polytope contains nothing.
bool contains(const Polytope& p, const VecQ& q);

/// Lattice operations of the polytope lattice: meet = intersection (via
/// H-representations), join = hull of the vertex union.
Polytope meet(const Polytope& p, const Polytope& q);
Polytope join(const Polytope& p, const Polytope& q);

/// Facet enumeration; requires a nonempty polytope.
HPolytope to_h_rep(const Polytope& p);

/// Vertex enumeration; empty systems yield the empty polytope, unbounded
/// ones raise std::domain_error.
Polytope from_h_rep(const HPolytope& h);

/// Polar dual P* = {q : q.p <= 1 for all p in P}.  Requires 0 strictly
/// interior and P full-dimensional (both checked exactly); then P** = P.
Polytope polar_dual(const Polytope& p);

}  // namespace convlat
