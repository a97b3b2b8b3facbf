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

// JSON interchange for the data the tools read and write: polytopes
// ({"dim": n, "vertices": [["p/q", ...], ...]}), ground sets
// ({"dim": n, "points": [...]}), point lists, and check reports.  All
// rationals travel as strings "±num" or "±num/den"; parsing rejects zero
// denominators and inconsistent dimensions.  The interface deliberately
// exposes only std::string payloads so the rest of the library stays
// independent of the JSON implementation.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convlat/check.hpp"
#include "convlat/closure_system.hpp"
#include "convlat/finite_lattice.hpp"
#include "convlat/gallery.hpp"
#include "convlat/polytope.hpp"
#include "convlat/rational.hpp"
#include "convlat/starlat.hpp"

namespace convlat {

Polytope parse_polytope_json(const std::string& text);
std::string polytope_to_json(const Polytope& p);

struct GroundSet {
  int dim = 0;
  std::vector<VecQ> points;
};

GroundSet parse_ground_json(const std::string& text);
std::string ground_to_json(const GroundSet& g);

/// Point-list fragments {"points": [["p/q", ...], ...]}; every point must
/// have dimension `dim`.
std::vector<VecQ> parse_points_json(const std::string& text, int dim);
std::string points_to_json(const std::vector<VecQ>& points);

/// Serializes a report as a single canonical JSON object (keys sorted,
/// no volatile fields).  When `timing_unix_ms` is given, a "timing"
/// object is attached; byte-stable comparisons should omit it.
std::string check_report_to_json(
    const CheckReport& report,
    std::optional<std::pair<std::int64_t, double>> timing = std::nullopt);

/// Serializes a no-failure falsification outcome.
std::string no_failure_report_json(
    const Identity& id, const std::string& lattice_name, long trials,
    std::uint64_t seed,
    std::optional<std::pair<std::int64_t, double>> timing = std::nullopt);

/// Closure-system file {"ground": ["a", "b", ...], "rules": [{"if":
/// ["a", "b"], "then": "c"}, ...]}; rule members must name ground
/// points.  The constructed system revalidates all invariants.
ClosureSystem parse_closure_system_json(const std::string& text);
std::string closure_system_to_json(const ClosureSystem& system);

/// Finite-lattice file {"names": ["0", "a", ...], "leq": [["0", "a"],
/// ...]} listing explicit order pairs; the reflexive-transitive closure
/// is taken, and the result must verify as a lattice.
FiniteLattice parse_finite_lattice_json(const std::string& text);

/// Ray-configuration file {"dim": n, "rays": [["p/q", ...], ...]};
/// building validates ray count, pairwise independence, and circuit
/// repair weights.
StarConfig parse_star_config_json(const std::string& text);
std::string star_config_to_json(const StarConfig& config);

/// Serializes a gallery run as a JSON array of entry reports
/// [{"entry": ..., "expected": ..., "observed": ..., "witness": [...] or
/// null, "pass": ...}, ...].
std::string gallery_results_to_json(
    const std::vector<GalleryResult>& results,
    std::optional<std::pair<std::int64_t, double>> timing = std::nullopt);

}  // namespace convlat
