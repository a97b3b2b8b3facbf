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

// Exact rational linear algebra on Eigen matrices.
//
// Everything here is plain Gauss-Jordan elimination over Q.  The reduced
// row echelon form doubles as a canonical representative for row spaces,
// which downstream code uses to compare subspaces for equality.

#pragma once

#include <optional>
#include <vector>

#include "convlat/rational.hpp"

namespace convlat {

/// Result of a Gauss-Jordan pass: the reduced row echelon form, the pivot
/// column of each nonzero row, and the rank.
struct Rref {
  MatQ mat;                 // rank many nonzero rows, each with leading 1
  std::vector<int> pivots;  // pivot column per row, strictly increasing
  int rank = 0;
};

/// Reduced row echelon form with leading coefficients normalized to 1.
/// Zero rows are dropped, so rref(A).mat has exactly rank(A) rows; two
/// matrices have equal row space iff their Rref::mat compare equal.
Rref rref(const MatQ& a);

int rank(const MatQ& a);

/// Basis of the null space {x : Ax = 0}, one column per basis vector
/// (kernel dimension = cols - rank; the matrix is cols x kerdim).
MatQ kernel_basis(const MatQ& a);

/// Exact solution of Ax = b, or nullopt when the system is inconsistent.
/// For underdetermined systems an arbitrary particular solution is returned
/// (free variables set to zero).
std::optional<VecQ> solve(const MatQ& a, const VecQ& b);

/// True iff v lies in the row space of Rref r (i.e. reduces to zero).
bool in_row_space(const Rref& r, const RowVecQ& v);

}  // namespace convlat
