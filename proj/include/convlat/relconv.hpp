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

// Relative convexity over a finite rational ground set S: elements are
// the subsets closed under x = hull(x) ∩ S, with intersection as meet and
// closure-of-union as join.  Elements are canonical sorted index vectors
// into S.  Also the generic relativizer combinator, which replaces a base
// lattice's meet by the piecewise formula  x ^_S y = V_i (x ^ y ^ S_i)
// and restricts to the fixed points of the induced interior operator.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "convlat/jsonio.hpp"
#include "convlat/lattice.hpp"

namespace convlat {

/// hull(points[a]) ∩ S as a sorted index vector; a's indices must be
/// valid.  Idempotent, extensive, monotone.
std::vector<int> rel_closure(const GroundSet& ground,
                             const std::vector<int>& a);

/// All closed subsets (each once, sorted by size then lexicographically).
/// Guarded to |S| <= 20; costs 2^|S| closure computations.
std::vector<std::vector<int>> enumerate_closed_sets(const GroundSet& ground);

/// Dimension-1 sublattice property: hull(x) ∩ hull(y) = hull(x ∩ y) as
/// intervals.  Exact endpoint comparison; requires ground.dim == 1.
bool hull_lattice_R1_meet_check(const GroundSet& ground,
                                const std::vector<int>& x,
                                const std::vector<int>& y);

class RelConvLattice : public LatticeHandle {
 public:
  /// `label` becomes the lattice name; `base_point` >= 0 restricts to
  /// elements containing that ground point (the pointed variant).
  RelConvLattice(GroundSet ground, std::string label = "",
                 int base_point = -1);

  std::string name() const override;
  Elem meet(const Elem& a, const Elem& b) const override;
  Elem join(const Elem& a, const Elem& b) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  bool leq(const Elem& a, const Elem& b) const override;
  std::string describe(const Elem& e) const override;
  std::string elem_json(const Elem& e) const override;
  Elem elem_from_json(const std::string& text) const override;
  Elem sample(Rng& rng, const SamplerConfig& config) const override;
  std::optional<VecQ> point_witness(const Elem& a,
                                    const Elem& b) const override;
  std::optional<bool> contains_point(const Elem& e,
                                     const VecQ& p) const override;

  /// Wraps an index set as an element: sorts, closes under the relative
  /// hull, and adds the base point when pointed.
  Elem make_element(std::vector<int> indices) const;

  const GroundSet& ground() const { return ground_; }
  int base_point() const { return base_point_; }

  const std::vector<int>& as_indices(const Elem& e) const;

 private:
  GroundSet ground_;
  std::string label_;
  int base_point_;
};

/// Relativization of an arbitrary lattice to a family of pieces: join is
/// unchanged, meet becomes V_i (x ^ y ^ pieces[i]), and elements are the
/// fixed points of int(x) = V_i (x ^ pieces[i]).  Pieces must be
/// nonempty and belong to the base lattice.
std::shared_ptr<LatticeHandle> relativize(
    std::shared_ptr<const LatticeHandle> base,
    std::vector<LatticeHandle::Elem> pieces);

}  // namespace convlat
