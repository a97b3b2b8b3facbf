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

// The runtime-polymorphic lattice interface the identity checker works
// against.  Elements travel as std::any so one checker serves polytope
// lattices, relative-convexity lattices, ray-coefficient lattices, and
// finite abstract lattices; each adapter downcasts internally and
// guarantees canonical element values, so structural equality in the
// adapter decides lattice equality.

#pragma once

#include <any>
#include <cstdint>
#include <optional>
#include <string>

#include "convlat/rational.hpp"
#include "convlat/rng.hpp"

namespace convlat {

/// Parameters for the random element samplers.  The ambient dimension is
/// a property of the lattice itself, not the sampler.
struct SamplerConfig {
  int points_per_set = 4;   // generators per sampled element (upper bound)
  long magnitude = 2;       // coordinates drawn from [-magnitude, magnitude]
  long den_bound = 4;       // denominators drawn from [1, den_bound]
  bool include_origin = false;  // force 0 into every generating set
};

class LatticeHandle {
 public:
  using Elem = std::any;

  virtual ~LatticeHandle() = default;

  /// Selector-style name, e.g. "conv:2".
  virtual std::string name() const = 0;

  virtual Elem meet(const Elem& a, const Elem& b) const = 0;
  virtual Elem join(const Elem& a, const Elem& b) const = 0;
  virtual bool equal(const Elem& a, const Elem& b) const = 0;

  /// Default order via absorption; adapters override with cheaper tests.
  virtual bool leq(const Elem& a, const Elem& b) const {
    return equal(meet(a, b), a);
  }

  /// Human-readable element rendering.
  virtual std::string describe(const Elem& e) const = 0;

  /// JSON fragment for reports; adapters own their element formats.
  virtual std::string elem_json(const Elem& e) const = 0;

  /// Parses an element from its adapter-specific JSON fragment,
  /// validating lattice invariants; throws std::invalid_argument on
  /// malformed or invalid input.
  virtual Elem elem_from_json(const std::string& text) const = 0;

  /// Draws a random element; throws std::invalid_argument when the
  /// config is incompatible with the lattice.
  virtual Elem sample(Rng& rng, const SamplerConfig& config) const = 0;

  /// A rational point lying in `a` but not in `b`, for adapters whose
  /// elements are point sets; nullopt when a <= b or the lattice has no
  /// point semantics.
  virtual std::optional<VecQ> point_witness(const Elem& a,
                                            const Elem& b) const {
    (void)a;
    (void)b;
    return std::nullopt;
  }

  /// Exact point membership for adapters whose elements are point sets;
  /// nullopt when the lattice has no point semantics.  Used to re-verify
  /// reported witness points independently of how they were found.
  virtual std::optional<bool> contains_point(const Elem& e,
                                             const VecQ& p) const {
    (void)e;
    (void)p;
    return std::nullopt;
  }
};

}  // namespace convlat
