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

#ifndef CONVLAT_CLOSURE_SYSTEM_HPP_
#define CONVLAT_CLOSURE_SYSTEM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "convlat/finite_lattice.hpp"
#include "convlat/rng.hpp"

namespace convlat {

/// An implication rule: whenever every premise point is present, the
/// conclusion point is added.  Indices refer to the ground list.
struct ClosureRule {
  std::vector<int> premise;
  int conclusion = -1;
};

/// A closure operator on a small named ground set (at most 10 points),
/// generated by implication rules and precomputed for every subset.
/// Subsets travel as bitmasks over the ground list.
class ClosureSystem {
 public:
  /// Validates names (nonempty, distinct) and rule indices; throws
  /// std::invalid_argument.
  ClosureSystem(std::vector<std::string> ground,
                std::vector<ClosureRule> rules);

  int ground_size() const { return static_cast<int>(ground_.size()); }
  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<ClosureRule>& rules() const { return rules_; }

  std::uint32_t close(std::uint32_t mask) const;
  bool is_closed(std::uint32_t mask) const { return close(mask) == mask; }

  /// All closed subsets, ordered by (size, mask value).
  std::vector<std::uint32_t> closed_sets() const;

  /// "{a,c}" rendering of a subset mask.
  std::string format_subset(std::uint32_t mask) const;

 private:
  std::vector<std::string> ground_;
  std::vector<ClosureRule> rules_;
  std::vector<std::uint32_t> closure_;  // closure of every mask
};

/// The lattice of closed subsets: meet = intersection, join = closure
/// of the union.  Elements are named by format_subset in closed_sets()
/// order.  Guarded to at most 64 closed sets (exhaustive verification).
FiniteLattice closed_set_lattice(const ClosureSystem& system);

/// Whether the closure of every subset is the union of the closures of
/// its subsets with at most n elements (exhaustive over all subsets).
bool caratheodory_property(const ClosureSystem& system, int n);

/// Outcome of comparing the n-ary distributive law in the closed-set
/// lattice against the n-ary bounded-generation property above.  The
/// comparison is meaningful only under the hypothesis that every
/// singleton's closure is join-irreducible in the closed-set lattice;
/// systems failing the hypothesis are reported unchecked.
struct ClosureLawReport {
  int n = 0;
  bool checked = false;
  std::string skipped_reason;  // nonempty iff !checked
  bool dn_holds = false;
  bool caratheodory_holds = false;
  bool biconditional_holds = false;
};

ClosureLawReport check_caratheodory_distributivity(
    const ClosureSystem& system, int n);

/// Seeded random system for property tests: 3-6 ground points named
/// p0, p1, ..., and 2-6 rules with 2-3 premise points each.
ClosureSystem random_closure_system(Rng& rng);

}  // namespace convlat

#endif  // CONVLAT_CLOSURE_SYSTEM_HPP_
