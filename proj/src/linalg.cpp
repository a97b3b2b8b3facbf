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

namespace convlat {

Rref rref(const MatQ& a) {
  MatQ m = a;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    // Any nonzero pivot works; arithmetic is exact.
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r != row && m(r, col) != 0) {
        m.row(r) -= m(r, col) * m.row(row);
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  Rref out;
  out.rank = static_cast<int>(row);
  out.mat = m.topRows(row);
  out.pivots = std::move(pivots);
  return out;
}

int rank(const MatQ& a) { return rref(a).rank; }

MatQ kernel_basis(const MatQ& a) {
  const Rref r = rref(a);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivots) is_pivot[p] = true;

  const Eigen::Index kerdim = cols - r.rank;
  MatQ basis = MatQ::Zero(cols, kerdim);
  Eigen::Index k = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(free_col, k) = 1;
    for (int row = 0; row < r.rank; ++row) {
      basis(r.pivots[row], k) = -r.mat(row, free_col);
    }
    ++k;
  }
  return basis;
}

std::optional<VecQ> solve(const MatQ& a, const VecQ& b) {
  MatQ aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const Rref r = rref(aug);
  VecQ x = VecQ::Zero(a.cols());
  for (int row = 0; row < r.rank; ++row) {
    if (r.pivots[row] == static_cast<int>(a.cols())) {
      return std::nullopt;  // a row reduced to 0 = 1: inconsistent
    }
    x(r.pivots[row]) = r.mat(row, a.cols());
  }
  return x;
}

bool in_row_space(const Rref& r, const RowVecQ& v) {
  RowVecQ w = v;
  for (int row = 0; row < r.rank; ++row) {
    const int p = r.pivots[row];
    if (w(p) != 0) w -= w(p) * r.mat.row(row);
  }
  return w.isZero(0);
}

}  // namespace convlat
