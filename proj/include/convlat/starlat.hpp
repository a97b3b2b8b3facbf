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

// Star-shaped unions of segments through the origin, in exact inverse-
// length coordinates: element component a_i in [1, inf] encodes the
// segment from 0 to p_i / a_i along ray p_i (a_i = inf collapses it to
// the origin).  Meet is componentwise max; join is componentwise min
// followed by circuit repairs: for each minimal linearly dependent ray
// family whose coefficients oppose in exactly one position j, relative
// convexity demands a_j <= sum of positively weighted other components,
// and the closure lowers a_j to that bound until all conditions hold.
//
// The three-component arithmetic model (SnowflakeElement) is the same
// structure specialized to three symmetric rays; its operations are
// closed-form.  Experiments: the generated finite sublattice, a strictly
// descending chain, a strictly ascending chain on a four-ray fan, and
// breadth-first growth from the diameters of a centrally symmetric
// octagon.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "convlat/rational.hpp"

namespace convlat {

/// A rational in [1, inf] with an explicit infinity, ordered with inf
/// greatest; inf absorbs addition and positive scaling.
struct ExtQ {
  bool is_inf = true;
  Rational value;  // meaningful only when !is_inf

  static ExtQ inf() { return ExtQ{}; }
  static ExtQ of(Rational v) { return ExtQ{false, std::move(v)}; }

  bool operator==(const ExtQ& o) const {
    if (is_inf != o.is_inf) return false;
    return is_inf || value == o.value;
  }
  bool operator!=(const ExtQ& o) const { return !(*this == o); }
  bool operator<(const ExtQ& o) const {
    if (is_inf) return false;
    if (o.is_inf) return true;
    return value < o.value;
  }
  bool operator<=(const ExtQ& o) const { return *this < o || *this == o; }
};

ExtQ ext_min(const ExtQ& a, const ExtQ& b);
ExtQ ext_max(const ExtQ& a, const ExtQ& b);
ExtQ ext_add(const ExtQ& a, const ExtQ& b);
/// w * a for w > 0.
ExtQ ext_scale(const Rational& w, const ExtQ& a);

/// "inf" or the rational in "p/q" form.
std::string format_ext(const ExtQ& a);
ExtQ parse_ext(const std::string& text);

/// Three-segment element [a1, a2, a3]; valid when each component is in
/// [1, inf] and each is at most the sum of the other two.
using SnowflakeElement = std::array<ExtQ, 3>;

bool snow_valid(const SnowflakeElement& u);
/// Validates; throws std::invalid_argument otherwise.
SnowflakeElement make_snowflake(ExtQ a1, ExtQ a2, ExtQ a3);

std::string format_snowflake(const SnowflakeElement& u);

/// Componentwise max — always valid.
SnowflakeElement snow_meet(const SnowflakeElement& u,
                           const SnowflakeElement& v);
/// Componentwise min, then the single repair: an entry exceeding the sum
/// of the other two is reduced to that sum (at most one entry can).
SnowflakeElement snow_join(const SnowflakeElement& u,
                           const SnowflakeElement& v);
/// Set order: u <= v iff a_u >= a_v componentwise.
bool snow_leq(const SnowflakeElement& u, const SnowflakeElement& v);

/// The three unit generators S1 = [1,inf,inf], S2, S3.
std::array<SnowflakeElement, 3> snow_generators();

/// Closes {S1,S2,S3} under meet and join, discarding any element with a
/// finite component exceeding `bound`; the result is finite and sorted.
std::vector<SnowflakeElement> snow_generate(int bound);

/// steps+1 elements starting at S1, each round replacing (A,B,C) by
/// ((B v C) ^ A, (C v A) ^ B, (A v B) ^ C); the A-track descends
/// strictly, doubling the finite component each round.
std::vector<SnowflakeElement> snow_descending_chain(int steps);

/// A minimal linearly dependent ray subfamily.  `coeffs` is the unique
/// dependence with first coefficient +1; `special` indexes (into
/// `indices`) the single opposing-sign coefficient when `flagged`.
struct Circuit {
  std::vector<int> indices;
  std::vector<Rational> coeffs;
  bool flagged = false;
  int special = -1;
};

/// An immutable ray configuration with its precomputed circuits.
class StarConfig {
 public:
  /// Validates (<= 12 nonzero rays, no ray a nonnegative multiple of
  /// another, every flagged circuit's repair weights summing to >= 1 so
  /// repairs stay in [1, inf]) and enumerates all circuits.
  static StarConfig build(int dim, std::vector<VecQ> rays);

  int dim() const { return dim_; }
  const std::vector<VecQ>& rays() const { return rays_; }
  const std::vector<Circuit>& circuits() const { return circuits_; }

 private:
  StarConfig() = default;
  int dim_ = 0;
  std::vector<VecQ> rays_;
  std::vector<Circuit> circuits_;
};

using StarElement = std::vector<ExtQ>;

/// All components in [1, inf]?  (Shape check, not convexity.)
bool star_in_range(const StarConfig& config, const StarElement& a);
/// Every flagged circuit inequality holds.
bool star_valid(const StarConfig& config, const StarElement& a);

/// Smallest relatively convex element dominating `a` (componentwise <=
/// in the a-coordinates, i.e. smallest star superset): repeatedly lowers
/// a_j to its flagged-circuit bound.  Throws std::runtime_error with a
/// diagnostic if the repair count exceeds flagged * rays * 16.
StarElement star_closure(const StarConfig& config, StarElement a);

StarElement star_meet(const StarConfig& config, const StarElement& u,
                      const StarElement& v);
StarElement star_join(const StarConfig& config, const StarElement& u,
                      const StarElement& v);
/// Set order: u <= v iff a_u >= a_v componentwise.
bool star_leq(const StarElement& u, const StarElement& v);

std::string format_star(const StarElement& a);

/// Rational stand-ins for the symmetric configurations: six rays
/// (+-(1,0), +-(1,1), +-(0,1)) whose middle ray is the sum of its
/// neighbors, and the eight octagon rays (+-2,+-1), (+-1,+-2).
StarConfig hexagon_config();
StarConfig octagon_config();
/// The four-ray fan (0,3), (1,2), (2,1), (3,0).
StarConfig chain_config();

/// Embeds the arithmetic model into the six-ray configuration by central
/// symmetry: [a1,a2,a3] -> [a1,a2,a3,a1,a2,a3].
StarElement snow_to_hexagon(const SnowflakeElement& u);

struct ChainReport {
  std::vector<StarElement> elements;  // steps+1 entries
  bool strictly_ascending = false;
  bool all_valid = false;  // every element passes the circuit oracle
};

/// x1 = full segment 1 + half segment 2, y = segments 2 and 3,
/// x2 = half segment 3 + full segment 4; starting from x1 ^ y,
/// alternately joins with x2 / x1 and meets with y.
ChainReport ascending_chain_experiment(int steps);

struct OctagonReport {
  long element_count = 0;
  int longest_chain = 0;
  int largest_antichain = 0;
  bool reached_cap = false;
};

/// Breadth-first meet/join closure of the four diameters, capped at
/// max_elements; chain = longest path in the order DAG, antichain = the
/// largest same-height level.
OctagonReport octagon_exploration(long max_elements);

}  // namespace convlat
