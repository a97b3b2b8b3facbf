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

// Lattice terms and identities: an immutable term tree, a small text DSL
// (& = meet binds tighter than | = join, both left-associative), builders
// for the identity families the lab studies, and the structural
// combinators wrap (substitute an identity into a one-hole context) and
// dualize (swap meet and join, flip inequations).

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace convlat {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Meet, Join };
  Kind kind;
  std::string var;  // Kind::Var only
  TermPtr left, right;
};

TermPtr make_var(std::string name);
TermPtr make_meet(TermPtr l, TermPtr r);
TermPtr make_join(TermPtr l, TermPtr r);

bool term_equal(const TermPtr& a, const TermPtr& b);

/// Free variables in first-occurrence (left-to-right) order.
std::vector<std::string> free_vars_of(const TermPtr& t);

enum class IdentityMode { Equation, Inequation };  // Inequation: lhs <= rhs

struct Identity {
  TermPtr lhs;
  TermPtr rhs;
  IdentityMode mode = IdentityMode::Equation;
  std::vector<std::string> free_vars;  // lhs-then-rhs first occurrence
};

Identity make_identity(TermPtr lhs, TermPtr rhs, IdentityMode mode);

/// Thrown on malformed DSL input; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position(position) {}
  std::size_t position;
};

TermPtr parse_term(const std::string& text);
Identity parse_identity(const std::string& text);

/// Minimal-parentheses rendering; parse_term(print_term(t)) == t.
std::string print_term(const TermPtr& t);
std::string print_identity(const Identity& id);

/// x ^ (y1 v ... v y_{n+1})  =  V_i (x ^ V_{j != i} y_j); the containment
/// >= holds in every lattice, so checking reduces to <=.
Identity build_Dn(int n);

/// Dual of build_Dn; here <= is the automatic direction.
Identity build_Dn_op(int n);

/// The N-generator variant (N >= n+2): right side joins x ^ (join of S)
/// over all (n+1)-subsets S; at N = n+2 the tree coincides with
/// build_Dn(n+1).
Identity build_Dn_N_ary(int n, int N);

/// ^_i (x v y_i)  <=  x v V_{splits} ((V_{I1} y_i) ^ (V_{I2} y_i)) over
/// the 2^{n+1}-1 splits of {1..n+2} into two nonempty parts, normalized
/// so y_1 always lies in I1.
Identity build_radon_identity(int n);

/// Substitutes both sides of `inner` for the variable HOLE in `context`
/// (which must contain HOLE exactly once).  Lattice terms are monotone,
/// so an inequation keeps its direction; fresh context variables are
/// appended to free_vars.
Identity wrap(const Identity& inner, const TermPtr& context);

inline constexpr const char* kHoleName = "HOLE";

/// (build_Dn(n) v z) ^ y1 ^ y2 — the wrapper separating the full convex
/// lattice from its pointed sublattice.
Identity build_wrapped_Dn(int n);

/// (build_Dn(n) v z) ^ V_{i<j} (y_i ^ y_j) — the pairwise-join variant.
Identity build_wrapped_Dn_pairs(int n);

/// (build_Dn(n) v z) ^ ^_i (V_{j != i} y_j) — the leave-one-out variant.
Identity build_wrapped_Dn_covers(int n);

/// ((build_Dn_op(n) ^ zp) v z) ^ ^_i y_i — the dual-side wrapper.
Identity build_wrapped_Dn_op(int n);

TermPtr dualize_term(const TermPtr& t);

/// Swaps meet and join throughout; an inequation lhs <= rhs becomes
/// dual(rhs) <= dual(lhs).  Involution.
Identity dualize(const Identity& id);

}  // namespace convlat
