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

// Constructive witnesses for the classical convexity theorems, all over
// exact rationals: small-support convex combinations (with an optional
// prescribed generator), Radon partitions with a common point, the Helly
// implication as an executable check, and visibility cones with their
// join-membership equivalence.

#pragma once

#include <optional>
#include <vector>

#include "convlat/polytope.hpp"
#include "convlat/rational.hpp"

namespace convlat {

/// A convex combination q = sum coeffs[k] * points[indices[k]] with
/// sum coeffs = 1, coeffs >= 0, and at most dim+1 entries.
struct CaraWitness {
  std::vector<int> indices;
  std::vector<Rational> coeffs;
};

/// Small-support representation of q over `points`.  When `anchor` is
/// given it must be one of the points and the witness always contains it.
/// Throws std::domain_error if q is not in the hull and
/// std::invalid_argument if the anchor is not one of the points.
CaraWitness caratheodory_witness(const std::vector<VecQ>& points,
                                 const VecQ& q,
                                 const std::optional<VecQ>& anchor = {});

/// Index partition {i1, i2} of dim+2 points whose sub-hulls share
/// `common`.
struct RadonPartition {
  std::vector<int> i1;
  std::vector<int> i2;
  VecQ common;
};

/// Splits exactly dim+2 points into two parts with intersecting hulls;
/// throws std::invalid_argument on any other count.
RadonPartition radon_partition(const std::vector<VecQ>& points, int dim);

/// Checks the intersection implication for a family of polytopes: if
/// every (dim+1)-subfamily has a common point then so does the whole
/// family.  A sound geometry kernel makes this always true; the checker
/// recomputes both sides exactly.
bool helly_verify(const std::vector<Polytope>& family, int dim);

/// The cone of directions at `apex` pointing away from x, i.e.
/// apex + cone{apex - v : v vertex of x}.  When apex lies in x the cone
/// degenerates to the whole space.
struct VisibilityCone {
  VecQ apex;
  std::vector<VecQ> generators;
  bool whole_space = false;
};

/// Builds the visibility cone of a nonempty polytope from point p;
/// throws std::domain_error when x is empty.
VisibilityCone visibility_cone(const Polytope& x, const VecQ& p);

/// Decides whether the cone's defining membership holds: true iff
/// apex \in x v y for the x the cone was built from.  Exact LP
/// feasibility on the generator/convex-combination system.
bool cone_meets(const VisibilityCone& w, const Polytope& y);

}  // namespace convlat
