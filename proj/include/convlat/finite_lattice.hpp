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

#ifndef CONVLAT_FINITE_LATTICE_HPP_
#define CONVLAT_FINITE_LATTICE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "convlat/lattice.hpp"
#include "convlat/linalg.hpp"

namespace convlat {

/// A finite lattice given by named elements, a `leq` bit-matrix, and
/// meet/join tables.  Construction validates everything exhaustively:
/// `leq` must be a partial order, every pair must have a greatest lower
/// and least upper bound matching the tables, and both operations must
/// be commutative, associative, and absorb each other.
class FiniteLattice {
 public:
  /// Builds from a partial order; meet/join tables are computed as the
  /// unique glb/lub of each pair.  Throws std::invalid_argument if the
  /// relation is not a partial order or some pair lacks a glb or lub.
  static FiniteLattice from_leq(std::vector<std::string> names,
                                std::vector<std::vector<bool>> leq);

  /// Builds from explicit tables; `leq` is derived as meet(i,j) == i.
  /// Throws std::invalid_argument if any lattice axiom fails.
  static FiniteLattice from_tables(std::vector<std::string> names,
                                   std::vector<std::vector<int>> meet,
                                   std::vector<std::vector<int>> join);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of the named element, or -1 when absent.
  int index_of(const std::string& name) const;

  bool leq(int a, int b) const { return leq_[idx(a, b)]; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// True when e is not the bottom and is not the join of two elements
  /// both different from e.
  bool is_join_irreducible(int e) const;

 private:
  FiniteLattice() = default;
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * names_.size() +
           static_cast<std::size_t>(b);
  }
  void verify();

  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = 0;
  int top_ = 0;
};

/// The n-element chain 0 < 1 < ... < n-1.
FiniteLattice chain_lattice(int n);

/// The lattice of subsets of a k-element set, k <= 6.
FiniteLattice boolean_lattice(int k);

/// The height-2 lattice with k >= 3 pairwise-incomparable middle
/// elements: bottom "0", atoms "y1".."yk", top "1".
FiniteLattice mk_lattice(int k);

/// A partition of {0,...,m-1} in canonical form: blocks sorted
/// internally and ordered by least member.
struct Partition {
  std::vector<std::vector<int>> blocks;

  bool operator==(const Partition& o) const { return blocks == o.blocks; }
};

/// Canonicalizes a block list (throws std::invalid_argument if the
/// blocks do not partition {0,...,m-1} exactly).
Partition make_partition(int m, std::vector<std::vector<int>> blocks);

/// "0,1|2" style: members comma-joined, blocks bar-joined.
std::string format_partition(const Partition& p);

/// All partitions of {0,...,m-1} in a fixed deterministic order.
std::vector<Partition> all_partitions(int m);

/// Common refinement: blocks are the nonempty pairwise intersections.
Partition partition_meet(int m, const Partition& p, const Partition& q);

/// Transitive closure of the union of the two equivalence relations.
Partition partition_join(int m, const Partition& p, const Partition& q);

/// The lattice of all partitions of an m-element set ordered by
/// refinement (finer below coarser), m <= 7.
FiniteLattice partition_lattice(int m);

/// A subspace of Q^m spanned by difference vectors e_a - e_b, held in
/// canonical reduced-row-echelon form (`rows` has full row rank; the
/// zero subspace has zero rows).
struct DiffSubspace {
  int m = 0;
  MatQ rows;
};

/// "[1,-1,0;0,1,-1]" style row list; "[]" for the zero subspace.
std::string format_diff_subspace(const DiffSubspace& w);

/// The subspace spanned by e_a - e_b over all pairs a, b lying in a
/// common block of p.
DiffSubspace partition_to_subspace(int m, const Partition& p);

/// The partition relating a and b exactly when e_a - e_b lies in w.
Partition subspace_to_partition(const DiffSubspace& w);

/// The lattice of all subspaces of Q^m spanned by subsets of
/// {e_a - e_b : a < b}, ordered by inclusion, m <= 5.  Element names
/// use format_diff_subspace.
FiniteLattice diff_subspace_lattice(int m);

/// Full comparison of the partition lattice with the difference-
/// subspace lattice through the two translation maps.
struct IsoReport {
  long partition_count = 0;
  long subspace_count = 0;
  bool maps_mutually_inverse = false;
  bool order_preserved = false;
  bool tables_transported = false;
  /// All of the above, with equal counts.
  bool isomorphic = false;
};

/// Runs the full check for a basis of size m (2 <= m <= 5).
IsoReport equiv_subspace_isomorphism(int m);

/// A height-2 configuration inside a lattice: bottom < y_1,...,y_k <
/// top with all pairwise meets equal to bottom and joins equal to top.
struct MkEmbedding {
  int bottom = -1;
  int top = -1;
  std::vector<int> middles;
};

/// Exhaustively searches for such a configuration with k middle
/// elements (k >= 3, |L| <= 60); returns the lexicographically first
/// or nullopt.
std::optional<MkEmbedding> find_Mk(const FiniteLattice& lattice, int k);

/// A violating assignment for one of the tuple laws below.
struct TupleWitness {
  int x = -1;
  std::vector<int> ys;
};

/// Exhaustive search for a violation of the n-ary join
/// semidistributivity law: whenever x v y_1 = ... = x v y_{n+1}, that
/// common value equals x v (joins of pairwise meets y_i ^ y_j).
/// Returns nullopt when the law holds everywhere.  |L| <= 60.
std::optional<TupleWitness> njsd_violation(const FiniteLattice& lattice,
                                           int n);
/// Dual law (meets and joins exchanged).
std::optional<TupleWitness> nmsd_violation(const FiniteLattice& lattice,
                                           int n);

bool is_njsd(const FiniteLattice& lattice, int n);
bool is_nmsd(const FiniteLattice& lattice, int n);

/// Exhaustive search for a violation of the n-ary distributive law
/// x ^ (y_1 v ... v y_{n+1}) = joins over i of x ^ (join of y_j, j != i).
/// Returns nullopt when the law holds everywhere.  |L| <= 64.
std::optional<TupleWitness> dn_violation(const FiniteLattice& lattice, int n);

bool is_dn(const FiniteLattice& lattice, int n);

/// Adapts a FiniteLattice to the sampling/checking interface; elements
/// travel as their names.
std::shared_ptr<const LatticeHandle> finite_lattice_handle(
    FiniteLattice lattice, std::string label);

}  // namespace convlat

#endif  // CONVLAT_FINITE_LATTICE_HPP_
