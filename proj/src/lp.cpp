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

#include "convlat/lp.hpp"

#include <vector>

namespace convlat {

namespace {

// Dense simplex tableau for max-form problems.  Column layout: the problem
// variables first, then (phase 1 only) one artificial per row; last column
// is the right-hand side.  The objective row stores reduced costs for a
// maximization, so a *positive* entry is an improving column.
struct Tableau {
  MatQ t;                  // (rows+1) x (cols+1); last row = objective
  std::vector<int> basis;  // basic variable per constraint row

  Eigen::Index rows() const { return t.rows() - 1; }
  Eigen::Index cols() const { return t.cols() - 1; }

  // Bland's rule: entering = lowest-index improving column; leaving = row
  // whose ratio is minimal, ties broken by lowest basic variable index.
  // Returns false when no improving column exists (optimal), throws nothing;
  // sets *unbounded when an improving column has no blocking row.
  bool pivot_step(bool* unbounded) {
    const Eigen::Index m = rows(), n = cols();
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (t(m, j) > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;

    Eigen::Index leave = -1;
    Rational best_ratio;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = t(i, n) / t(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      *unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    t.row(row) /= t(row, col);
    for (Eigen::Index r = 0; r < t.rows(); ++r) {
      if (r != row && t(r, col) != 0) {
        t.row(r) -= t(r, col) * t.row(row);
      }
    }
    basis[row] = static_cast<int>(col);
  }

  void run(bool* unbounded) {
    *unbounded = false;
    while (pivot_step(unbounded)) {
    }
  }
};

}  // namespace

LpResult lp_solve(const MatQ& a, const VecQ& b, const VecQ& c) {
  const Eigen::Index m = a.rows(), n = a.cols();

  // Phase 1: minimize the sum of one artificial per row (as a maximization
  // of the negated sum), starting from the identity basis of artificials.
  Tableau tab;
  tab.t = MatQ::Zero(m + 1, n + m + 1);
  tab.basis.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = b(i) < 0;  // keep the rhs nonnegative
    for (Eigen::Index j = 0; j < n; ++j) tab.t(i, j) = flip ? -a(i, j) : a(i, j);
    tab.t(i, n + i) = 1;
    tab.t(i, n + m) = flip ? -b(i) : b(i);
    tab.basis[i] = static_cast<int>(n + i);
  }
  // Objective = -(sum of artificials); express through the current basis.
  for (Eigen::Index i = 0; i < m; ++i) {
    tab.t.row(m) += tab.t.row(i);
  }
  for (Eigen::Index i = 0; i < m; ++i) tab.t(m, n + i) = 0;

  bool unbounded = false;
  tab.run(&unbounded);
  if (tab.t(m, n + m) != 0) {
    return {LpStatus::Infeasible, Rational(0), VecQ()};
  }

  // Drive any artificial still basic (at value 0) out of the basis, or drop
  // its row when the row is redundant.
  std::vector<bool> keep_row(m, true);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (tab.t(i, j) != 0) {
        enter = j;
        break;
      }
    }
    if (enter >= 0) {
      tab.pivot(i, enter);
    } else {
      keep_row[i] = false;
    }
  }

  // Phase 2 on the original columns only.
  Tableau ph2;
  Eigen::Index kept = 0;
  for (Eigen::Index i = 0; i < m; ++i) kept += keep_row[i] ? 1 : 0;
  ph2.t = MatQ::Zero(kept + 1, n + 1);
  ph2.basis.resize(kept);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (!keep_row[i]) continue;
    ph2.t.block(r, 0, 1, n) = tab.t.block(i, 0, 1, n);
    ph2.t(r, n) = tab.t(i, n + m);
    ph2.basis[r] = tab.basis[i];
    ++r;
  }
  for (Eigen::Index j = 0; j < n; ++j) ph2.t(kept, j) = c(j);
  // Zero out reduced costs of basic columns.
  for (Eigen::Index i = 0; i < kept; ++i) {
    const int bj = ph2.basis[i];
    if (ph2.t(kept, bj) != 0) {
      ph2.t.row(kept) -= ph2.t(kept, bj) * ph2.t.row(i);
    }
  }

  ph2.run(&unbounded);
  if (unbounded) {
    return {LpStatus::Unbounded, Rational(0), VecQ()};
  }

  VecQ x = VecQ::Zero(n);
  for (Eigen::Index i = 0; i < kept; ++i) {
    x(ph2.basis[i]) = ph2.t(i, n);
  }
  return {LpStatus::Optimal, -ph2.t(kept, n), x};
}

LpResult lp_feasible(const MatQ& a, const VecQ& b) {
  return lp_solve(a, b, VecQ::Zero(a.cols()));
}

}  // namespace convlat
