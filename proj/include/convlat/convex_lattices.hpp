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

// LatticeHandle adapters over exact polytopes: the full lattice of
// polytopes in dimension n (with the empty set as bottom) and its pointed
// sublattice of polytopes containing the origin (bottom = {0}).  Elements
// are canonical Polytope values, so structural equality decides lattice
// equality and every failed containment yields a concrete vertex witness.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "convlat/lattice.hpp"
#include "convlat/polytope.hpp"

namespace convlat {

class ConvLattice : public LatticeHandle {
 public:
  explicit ConvLattice(int dim);

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

  /// Wraps a polytope as an element after checking its dimension.
  virtual Elem make_element(Polytope p) const;

  int dim() const { return dim_; }

  /// Unwraps with a type check; shared by the pointed subclass and
  /// callers that need the underlying polytope back.
  const Polytope& as_polytope(const Elem& e) const;

 protected:
  int dim_;
};

/// The sublattice of polytopes containing the origin.  Element validity
/// is enforced at every entry point; meet and join preserve it.
class PointedConvLattice : public ConvLattice {
 public:
  explicit PointedConvLattice(int dim);

  std::string name() const override;
  Elem sample(Rng& rng, const SamplerConfig& config) const override;
  Elem make_element(Polytope p) const override;
  Elem elem_from_json(const std::string& text) const override;
};

/// Draws (x, y1, y2) in Conv(R^dim) with x v y1 = x v y2 guaranteed
/// exactly: every vertex of v = x v y1 outside x is put into y2, which
/// keeps the join's extreme points covered, and y2 <= v by construction.
struct JsdTriple {
  Polytope x, y1, y2;
};
JsdTriple jsd_premise_sampler(int dim, Rng& rng,
                              const SamplerConfig& config);

}  // namespace convlat
