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

#include "convlat/linalg.hpp"
#include "convlat/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace convlat {
namespace {

MatQ random_mat(Rng& rng, int rows, int cols) {
  MatQ m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.rational(3, 3);
  }
  return m;
}

TEST_SUITE("linalg") {

TEST_CASE("rref of a small system matches the hand computation") {
  MatQ a(2, 3);
  a << make_rational(2), make_rational(4), make_rational(6),
      make_rational(1), make_rational(1), make_rational(1);
  Rref r = rref(a);
  CHECK(r.rank == 2);
  REQUIRE(r.pivots.size() == 2);
  CHECK(r.pivots[0] == 0);
  CHECK(r.pivots[1] == 1);
  // Row-reduce by hand: [[1,0,-1],[0,1,2]].
  CHECK(r.mat(0, 0) == 1);
  CHECK(r.mat(0, 1) == 0);
  CHECK(r.mat(0, 2) == -1);
  CHECK(r.mat(1, 0) == 0);
  CHECK(r.mat(1, 1) == 1);
  CHECK(r.mat(1, 2) == 2);
}

TEST_CASE("rank of rank-deficient and full-rank examples") {
  MatQ a(2, 2);
  a << make_rational(1), make_rational(2), make_rational(2),
      make_rational(4);
  CHECK(rank(a) == 1);
  MatQ b(2, 2);
  b << make_rational(1), make_rational(2), make_rational(3),
      make_rational(4);
  CHECK(rank(b) == 2);
  MatQ z = MatQ::Zero(3, 3);
  CHECK(rank(z) == 0);
}

TEST_CASE("kernel_basis spans the exact null space") {
  MatQ a(1, 3);
  a << make_rational(1), make_rational(1), make_rational(1);
  MatQ k = kernel_basis(a);
  REQUIRE(k.cols() == 2);
  REQUIRE(k.rows() == 3);
  for (int j = 0; j < k.cols(); ++j) {
    VecQ prod = a * k.col(j);
    CHECK(prod(0) == 0);
  }
  CHECK(rank(k) == 2);
  // Full-rank square matrix has a trivial kernel.
  MatQ b(2, 2);
  b << make_rational(1), make_rational(2), make_rational(3),
      make_rational(4);
  CHECK(kernel_basis(b).cols() == 0);
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
  MatQ a(2, 2);
  a << make_rational(1), make_rational(1), make_rational(1),
      make_rational(-1);
  VecQ b(2);
  b << make_rational(1), make_rational(0);
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == make_rational(1, 2));
  CHECK((*x)(1) == make_rational(1, 2));

  MatQ c(2, 1);
  c << make_rational(1), make_rational(1);
  VecQ d(2);
  d << make_rational(0), make_rational(1);
  CHECK(!solve(c, d).has_value());
}

TEST_CASE("in_row_space separates members from non-members") {
  MatQ a(2, 3);
  a << make_rational(1), make_rational(0), make_rational(1),
      make_rational(0), make_rational(1), make_rational(1);
  Rref r = rref(a);
  RowVecQ member(3);
  member << make_rational(2), make_rational(3), make_rational(5);
  CHECK(in_row_space(r, member));
  RowVecQ outside(3);
  outside << make_rational(1), make_rational(0), make_rational(0);
  CHECK(!in_row_space(r, outside));
}

TEST_CASE("seeded property loop: rref/kernel/solve are mutually consistent") {
  Rng rng(501);
  for (int iter = 0; iter < 100; ++iter) {
    const int rows = static_cast<int>(rng.range(1, 4));
    const int cols = static_cast<int>(rng.range(1, 4));
    MatQ a = random_mat(rng, rows, cols);

    Rref r = rref(a);
    CHECK(r.rank == rank(a));
    CHECK(r.mat.rows() == r.rank);
    // Idempotence: reducing the reduced form changes nothing.
    if (r.rank > 0) {
      Rref r2 = rref(r.mat);
      CHECK(r2.mat == r.mat);
    }
    // Every row of A lies in the row space of its rref.
    for (int i = 0; i < rows; ++i) {
      CHECK(in_row_space(r, a.row(i)));
    }

    MatQ k = kernel_basis(a);
    CHECK(k.cols() == cols - r.rank);
    for (int j = 0; j < k.cols(); ++j) {
      VecQ prod = a * k.col(j);
      for (int i = 0; i < rows; ++i) CHECK(prod(i) == 0);
    }

    // Solve a consistent system built from a known solution.
    VecQ x0(cols);
    for (int j = 0; j < cols; ++j) x0(j) = rng.rational(2, 3);
    VecQ b = a * x0;
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    VecQ back = a * *x;
    for (int i = 0; i < rows; ++i) CHECK(back(i) == b(i));
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace convlat
