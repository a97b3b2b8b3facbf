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

#include "convlat/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

#include "convlat/linalg.hpp"
#include "convlat/lp.hpp"

namespace convlat {
namespace {

// Feasibility of {x : ineqs hold, eqs hold} with free variables, via the
// split x = x+ - x- plus one slack per inequality.
bool h_feasible(const std::vector<std::pair<VecQ, Rational>>& ineqs,
                const std::vector<std::pair<VecQ, Rational>>& eqs, int d) {
  const int ni = static_cast<int>(ineqs.size());
  const int ne = static_cast<int>(eqs.size());
  MatQ a = MatQ::Zero(ni + ne, 2 * d + ni);
  VecQ b(ni + ne);
  for (int i = 0; i < ni; ++i) {
    a.row(i).segment(0, d) = ineqs[i].first.transpose();
    a.row(i).segment(d, d) = -ineqs[i].first.transpose();
    a(i, 2 * d + i) = 1;
    b(i) = ineqs[i].second;
  }
  for (int i = 0; i < ne; ++i) {
    a.row(ni + i).segment(0, d) = eqs[i].first.transpose();
    a.row(ni + i).segment(d, d) = -eqs[i].first.transpose();
    b(ni + i) = eqs[i].second;
  }
  return lp_feasible(a, b).status == LpStatus::Optimal;
}

// Nonemptiness of the meet of the selected family members, decided on
// their concatenated H-representations.
bool submeet_nonempty(const std::vector<HPolytope>& hs,
                      const std::vector<int>& pick, int d) {
  std::vector<std::pair<VecQ, Rational>> ineqs, eqs;
  for (int i : pick) {
    ineqs.insert(ineqs.end(), hs[i].inequalities.begin(),
                 hs[i].inequalities.end());
    eqs.insert(eqs.end(), hs[i].equalities.begin(), hs[i].equalities.end());
  }
  return h_feasible(ineqs, eqs, d);
}

}  // namespace

CaraWitness caratheodory_witness(const std::vector<VecQ>& points,
                                 const VecQ& q,
                                 const std::optional<VecQ>& anchor) {
  if (points.empty()) {
    throw std::domain_error("caratheodory_witness: point is not in the hull");
  }
  const int d = static_cast<int>(q.size());
  const int m = static_cast<int>(points.size());
  for (const VecQ& v : points) {
    if (v.size() != q.size()) {
      throw std::invalid_argument("caratheodory_witness: dimension mismatch");
    }
  }

  if (!anchor) {
    // A basic feasible solution of {sum l_i v_i = q, sum l_i = 1, l >= 0}
    // has at most d+1 positive coordinates.
    MatQ a(d + 1, m);
    for (int j = 0; j < m; ++j) {
      a.col(j).head(d) = points[j];
      a(d, j) = 1;
    }
    VecQ b(d + 1);
    b.head(d) = q;
    b(d) = 1;
    LpResult r = lp_feasible(a, b);
    if (r.status != LpStatus::Optimal) {
      throw std::domain_error(
          "caratheodory_witness: point is not in the hull");
    }
    CaraWitness w;
    for (int j = 0; j < m; ++j) {
      if (r.x(j) != 0) {
        w.indices.push_back(j);
        w.coeffs.push_back(r.x(j));
      }
    }
    return w;
  }

  int anchor_idx = -1;
  for (int j = 0; j < m && anchor_idx < 0; ++j) {
    if (points[j] == *anchor) anchor_idx = j;
  }
  if (anchor_idx < 0) {
    throw std::invalid_argument(
        "caratheodory_witness: anchor is not one of the points");
  }
  const VecQ& s0 = points[anchor_idx];
  if (q == s0) {
    return CaraWitness{{anchor_idx}, {Rational(1)}};
  }

  // Shoot the ray from the anchor through q as far as it stays in the
  // hull: maximize t subject to sum l_i v_i = s0 + t(q - s0), sum l_i = 1,
  // l, t >= 0.  The optimum t* satisfies t* >= 1 iff q is in the hull, and
  // an optimal basic solution spends one basic slot on t, leaving at most
  // d positive l_i; folding the ray back yields
  //   q = (1 - 1/t*) s0 + sum (l_i / t*) v_i.
  MatQ a(d + 1, m + 1);
  for (int j = 0; j < m; ++j) {
    a.col(j).head(d) = points[j];
    a(d, j) = 1;
  }
  a.col(m).head(d) = s0 - q;
  a(d, m) = 0;
  VecQ b(d + 1);
  b.head(d) = s0;
  b(d) = 1;
  VecQ c = VecQ::Zero(m + 1);
  c(m) = 1;
  LpResult r = lp_solve(a, b, c);
  if (r.status != LpStatus::Optimal || r.value < 1) {
    throw std::domain_error("caratheodory_witness: point is not in the hull");
  }
  const Rational t = r.value;
  CaraWitness w;
  w.indices.push_back(anchor_idx);
  w.coeffs.push_back(1 - 1 / t);
  for (int j = 0; j < m; ++j) {
    if (r.x(j) == 0) continue;
    Rational coeff = r.x(j) / t;
    if (j == anchor_idx) {
      w.coeffs[0] += coeff;
    } else {
      w.indices.push_back(j);
      w.coeffs.push_back(coeff);
    }
  }
  return w;
}

RadonPartition radon_partition(const std::vector<VecQ>& points, int dim) {
  if (static_cast<int>(points.size()) != dim + 2) {
    throw std::invalid_argument("radon_partition: need exactly dim+2 points");
  }
  for (const VecQ& v : points) {
    if (static_cast<int>(v.size()) != dim) {
      throw std::invalid_argument("radon_partition: dimension mismatch");
    }
  }
  // A nonzero affine dependence sum c_i v_i = 0, sum c_i = 0 splits the
  // points by the sign of c_i; both weighted averages coincide.
  MatQ a(dim + 1, dim + 2);
  for (int j = 0; j < dim + 2; ++j) {
    a.col(j).head(dim) = points[j];
    a(dim, j) = 1;
  }
  MatQ ker = kernel_basis(a);
  if (ker.cols() == 0) {
    throw std::logic_error("radon_partition: no affine dependence found");
  }
  VecQ c = ker.col(0);
  RadonPartition out;
  Rational total = 0;
  VecQ common = VecQ::Zero(dim);
  for (int j = 0; j < dim + 2; ++j) {
    if (c(j) > 0) {
      out.i1.push_back(j);
      total += c(j);
      common += c(j) * points[j];
    } else {
      out.i2.push_back(j);
    }
  }
  out.common = common / total;
  return out;
}

bool helly_verify(const std::vector<Polytope>& family, int dim) {
  const int n = static_cast<int>(family.size());
  std::vector<HPolytope> hs(n);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) {
    all[i] = i;
    if (family[i].is_empty()) {
      // Some subfamily meet is empty, so the premise fails.
      return true;
    }
    if (family[i].dim() != dim) {
      throw std::invalid_argument("helly_verify: dimension mismatch");
    }
    hs[i] = to_h_rep(family[i]);
  }
  const int k = std::min(dim + 1, n);
  // Premise: every k-subfamily has a common point.
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    if (!submeet_nonempty(hs, pick, dim)) return true;
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  // Conclusion: the whole family has a common point.
  return submeet_nonempty(hs, all, dim);
}

VisibilityCone visibility_cone(const Polytope& x, const VecQ& p) {
  if (x.is_empty()) {
    throw std::domain_error("visibility_cone: empty polytope");
  }
  if (static_cast<int>(p.size()) != x.dim()) {
    throw std::invalid_argument("visibility_cone: dimension mismatch");
  }
  VisibilityCone w;
  w.apex = p;
  if (contains(x, p)) {
    w.whole_space = true;
    return w;
  }
  for (const VecQ& v : x.vertices()) {
    w.generators.push_back(p - v);
  }
  return w;
}

bool cone_meets(const VisibilityCone& w, const Polytope& y) {
  if (w.whole_space) return true;
  if (y.is_empty()) return false;
  if (y.dim() != static_cast<int>(w.apex.size())) {
    throw std::invalid_argument("cone_meets: dimension mismatch");
  }
  // Feasibility of  sum l_j u_j - sum t_i g_i = apex,  sum l_j = 1,
  // l, t >= 0: a point of y that the cone reaches from its apex.
  const int d = y.dim();
  const int m = static_cast<int>(y.vertices().size());
  const int k = static_cast<int>(w.generators.size());
  MatQ a = MatQ::Zero(d + 1, m + k);
  for (int j = 0; j < m; ++j) {
    a.col(j).head(d) = y.vertices()[j];
    a(d, j) = 1;
  }
  for (int i = 0; i < k; ++i) {
    a.col(m + i).head(d) = -w.generators[i];
  }
  VecQ b(d + 1);
  b.head(d) = w.apex;
  b(d) = 1;
  return lp_feasible(a, b).status == LpStatus::Optimal;
}

}  // namespace convlat
