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

// Exact rational linear programming.
//
// Two-phase primal simplex over Q with Bland's anti-cycling pivot rule, so
// every run terminates and every reported optimum/witness is exact.  The
// solver works on the equality standard form
//
//     maximize c.x   subject to   A x = b,  x >= 0,
//
// which is all the geometry layer needs: convex-combination memberships,
// cone feasibility, and anchored maximization all encode naturally with
// nonnegative variables.  Returned solutions are *basic*, so at most
// rank(A) coordinates are nonzero — the Caratheodory bound comes for free.

#pragma once

#include "convlat/rational.hpp"

namespace convlat {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  // objective at optimum (valid when Optimal)
  VecQ x;          // basic optimal solution (valid when Optimal)
};

/// Maximize c.x subject to A x = b, x >= 0.
LpResult lp_solve(const MatQ& a, const VecQ& b, const VecQ& c);

/// Phase-1 only: find a basic feasible point of {A x = b, x >= 0}.
LpResult lp_feasible(const MatQ& a, const VecQ& b);

}  // namespace convlat
