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

// The generic identity checker and falsifier: evaluate an identity's two
// sides bottom-up over any LatticeHandle, report Holds/Fails with an
// exact witness point where the adapter supports one, and drive seeded
// random searches for failing assignments.  Also the semidistributivity
// quasi-identity checks, whose failed premises yield a distinct Vacuous
// verdict.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "convlat/lattice.hpp"
#include "convlat/term.hpp"

namespace convlat {

enum class Verdict { Holds, Fails, Vacuous };

std::string verdict_name(Verdict v);

using Assignment = std::map<std::string, LatticeHandle::Elem>;

struct CheckReport {
  Identity identity;
  std::string lattice_name;
  /// Variable -> JSON fragment (adapter format) for the checked elements.
  std::map<std::string, std::string> assignment_json;
  Verdict verdict = Verdict::Holds;
  std::optional<VecQ> witness;
  /// Falsification runs only: master seed, trials executed, index of the
  /// first failing trial (-1 when none failed).
  std::uint64_t seed = 0;
  long trials = 0;
  long failing_trial = -1;
};

/// Evaluates a term over an assignment; throws std::invalid_argument on
/// a missing variable.
LatticeHandle::Elem eval_term(const TermPtr& t, const LatticeHandle& lat,
                              const Assignment& assignment);

/// Checks one identity instance.  Equations compare for equality,
/// inequations for lhs <= rhs; on failure the report carries a point of
/// one side missing from the other when the adapter can produce one.
CheckReport check(const Identity& id, const LatticeHandle& lat,
                  const Assignment& assignment);

/// Seeded random search for a failing assignment: trial t draws every
/// free variable from Rng::for_trial(seed, t), in free_vars order.
/// Returns the first failing report (with trial metadata) or nullopt
/// after `trials` clean trials.  Deterministic given seed.
std::optional<CheckReport> falsify(const Identity& id,
                                   const LatticeHandle& lat,
                                   const SamplerConfig& config, long trials,
                                   std::uint64_t seed);

/// Join-semidistributivity instance: premise x v y1 = x v y2, conclusion
/// x v y1 = x v (y1 ^ y2).  Vacuous when the premise fails.
Verdict check_jsd(const LatticeHandle& lat, const LatticeHandle::Elem& x,
                  const LatticeHandle::Elem& y1,
                  const LatticeHandle::Elem& y2);

/// n-ary variant over y_1..y_{n+1}: premise is that all x v y_i agree,
/// conclusion x v y_1 = x v V_{i<j} (y_i ^ y_j).
Verdict check_njsd(const LatticeHandle& lat, int n,
                   const LatticeHandle::Elem& x,
                   const std::vector<LatticeHandle::Elem>& ys);

}  // namespace convlat
