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

#include "convlat/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "convlat/linalg.hpp"
#include "convlat/lp.hpp"

namespace convlat {
namespace {

// Dynamic bitset used for the incidence ("tight row") sets of the
// double-description computation.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(int i) const {
    return (w[i / 64] >> (i % 64)) & std::uint64_t{1};
  }
  int count() const {
    int c = 0;
    for (std::uint64_t x : w) {
      while (x) {
        x &= x - 1;
        ++c;
      }
    }
    return c;
  }
};

Bits intersect(const Bits& a, const Bits& b) {
  Bits r;
  r.w.resize(a.w.size());
  for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
  return r;
}

bool is_subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.w.size(); ++i) {
    if (a.w[i] & ~b.w[i]) return false;
  }
  return true;
}

// Scales a nonzero rational vector to coprime integer entries, preserving
// its direction; the zero vector is returned unchanged.
VecQ primitive(const VecQ& v) {
  mpz_class l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v(i).get_den_mpz_t());
  }
  VecQ w = v * Rational(l);
  mpz_class g = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    w(i).canonicalize();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w(i).get_num_mpz_t());
  }
  if (g == 0) return w;
  w /= Rational(g);
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i).canonicalize();
  return w;
}

// Extreme rays of the pointed cone {y : my <= 0}; requires
// rank(m) == cols(m).  Incremental double description with the
// combinatorial adjacency test on incidence sets.
std::vector<VecQ> dd_pointed(const MatQ& m) {
  const int rows = static_cast<int>(m.rows());
  const int d = static_cast<int>(m.cols());
  if (d == 0) return {};

  // Greedily pick d linearly independent rows for the simplicial start.
  std::vector<int> chosen;
  MatQ sel(0, d);
  for (int i = 0; i < rows && static_cast<int>(chosen.size()) < d; ++i) {
    MatQ cand(sel.rows() + 1, d);
    cand << sel, m.row(i);
    if (rank(cand) > sel.rows()) {
      sel = std::move(cand);
      chosen.push_back(i);
    }
  }
  if (static_cast<int>(chosen.size()) < d) {
    throw std::logic_error("dd_pointed: cone is not pointed");
  }

  std::vector<bool> processed(rows, false);
  for (int i : chosen) processed[i] = true;

  auto tight_set = [&](const VecQ& ray) {
    Bits b(rows);
    for (int i = 0; i < rows; ++i) {
      if (processed[i] && m.row(i).dot(ray) == 0) b.set(i);
    }
    return b;
  };

  std::vector<VecQ> rays;
  std::vector<Bits> tight;
  for (int j = 0; j < d; ++j) {
    VecQ e = VecQ::Zero(d);
    e(j) = -1;
    auto r = solve(sel, e);
    if (!r) throw std::logic_error("dd_pointed: singular start basis");
    rays.push_back(primitive(*r));
    tight.push_back(tight_set(rays.back()));
  }

  for (int i = 0; i < rows; ++i) {
    if (processed[i]) continue;
    processed[i] = true;

    const int nrays = static_cast<int>(rays.size());
    std::vector<Rational> val(nrays);
    std::vector<int> pos, neg;
    for (int j = 0; j < nrays; ++j) {
      val[j] = m.row(i).dot(rays[j]);
      int s = sgn(val[j]);
      if (s > 0) {
        pos.push_back(j);
      } else if (s < 0) {
        neg.push_back(j);
      }
    }
    if (pos.empty()) {
      for (int j = 0; j < nrays; ++j) {
        if (val[j] == 0) tight[j].set(i);
      }
      continue;
    }
    if (static_cast<int>(pos.size()) == nrays) {
      // Every ray is cut off; the cone collapses to {0}.
      return {};
    }

    std::vector<VecQ> new_rays;
    for (int jn : neg) {
      for (int jp : pos) {
        Bits common = intersect(tight[jn], tight[jp]);
        if (common.count() < d - 2) continue;
        bool adjacent = true;
        for (int k = 0; k < nrays && adjacent; ++k) {
          if (k == jn || k == jp) continue;
          if (is_subset(common, tight[k])) adjacent = false;
        }
        if (!adjacent) continue;
        VecQ w = val[jp] * rays[jn] - val[jn] * rays[jp];
        if (w.isZero(0)) continue;
        new_rays.push_back(primitive(w));
      }
    }

    std::vector<VecQ> kept;
    std::vector<Bits> kept_tight;
    for (int j = 0; j < nrays; ++j) {
      if (sgn(val[j]) > 0) continue;
      if (val[j] == 0) tight[j].set(i);
      kept.push_back(std::move(rays[j]));
      kept_tight.push_back(std::move(tight[j]));
    }
    for (auto& w : new_rays) {
      kept_tight.push_back(tight_set(w));
      kept.push_back(std::move(w));
    }
    rays = std::move(kept);
    tight = std::move(kept_tight);
  }
  return rays;
}

bool pair_lex_less(const std::pair<VecQ, Rational>& a,
                   const std::pair<VecQ, Rational>& b) {
  if (lex_less(a.first, b.first)) return true;
  if (lex_less(b.first, a.first)) return false;
  return a.second < b.second;
}

void check_same_dim(const Polytope& p, const Polytope& q, const char* op) {
  if (p.dim() != q.dim()) {
    throw std::invalid_argument(std::string(op) +
                                ": ambient dimensions differ");
  }
}

}  // namespace

bool lex_less(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    int c = cmp(a(i), b(i));
    if (c != 0) return c < 0;
  }
  return false;
}

bool Polytope::operator==(const Polytope& o) const {
  if (dim_ != o.dim_ || verts_.size() != o.verts_.size()) return false;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (verts_[i] != o.verts_[i]) return false;
  }
  return true;
}

std::string Polytope::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i > 0) out << ", ";
    out << format_point(verts_[i]);
  }
  out << "]";
  return out.str();
}

Polytope Polytope::from_extreme_points(int dim, std::vector<VecQ> verts) {
  for (const VecQ& v : verts) {
    if (static_cast<int>(v.size()) != dim) {
      throw std::invalid_argument("vertex dimension mismatch");
    }
  }
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  Polytope p(dim);
  p.verts_ = std::move(verts);
  return p;
}

ConeRays dd_extreme_rays(const MatQ& m) {
  ConeRays out;
  MatQ ker = kernel_basis(m);
  for (Eigen::Index j = 0; j < ker.cols(); ++j) {
    out.lineality.push_back(primitive(ker.col(j)));
  }
  if (ker.cols() == 0) {
    out.rays = dd_pointed(m);
    return out;
  }
  // Substitute y = b.u where b spans the orthogonal complement of the
  // lineality space; the reduced cone is pointed.
  MatQ b = kernel_basis(MatQ(ker.transpose()));
  std::vector<VecQ> reduced = dd_pointed(m * b);
  for (const VecQ& u : reduced) out.rays.push_back(primitive(b * u));
  return out;
}

Polytope hull(const std::vector<VecQ>& points, int dim) {
  std::vector<VecQ> pts = points;
  for (const VecQ& v : pts) {
    if (static_cast<int>(v.size()) != dim) {
      throw std::invalid_argument("hull: point dimension mismatch");
    }
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());
  if (n <= 1) return Polytope::from_extreme_points(dim, std::move(pts));

  // A point is extreme iff it is not a convex combination of the others.
  std::vector<VecQ> extreme;
  for (int i = 0; i < n; ++i) {
    MatQ a(dim + 1, n - 1);
    int col = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      a.col(col).head(dim) = pts[j];
      a(dim, col) = 1;
      ++col;
    }
    VecQ b(dim + 1);
    b.head(dim) = pts[i];
    b(dim) = 1;
    if (lp_feasible(a, b).status != LpStatus::Optimal) {
      extreme.push_back(pts[i]);
    }
  }
  return Polytope::from_extreme_points(dim, std::move(extreme));
}

bool contains(const Polytope& p, const VecQ& q) {
  if (static_cast<int>(q.size()) != p.dim()) {
    throw std::invalid_argument("contains: point dimension mismatch");
  }
  if (p.is_empty()) return false;
  const int d = p.dim();
  const int n = static_cast<int>(p.vertices().size());
  MatQ a(d + 1, n);
  for (int j = 0; j < n; ++j) {
    a.col(j).head(d) = p.vertices()[j];
    a(d, j) = 1;
  }
  VecQ b(d + 1);
  b.head(d) = q;
  b(d) = 1;
  return lp_feasible(a, b).status == LpStatus::Optimal;
}

HPolytope to_h_rep(const Polytope& p) {
  if (p.is_empty()) {
    throw std::domain_error("to_h_rep: empty polytope");
  }
  const int d = p.dim();
  const int n = static_cast<int>(p.vertices().size());
  // Valid inequalities a.x <= beta correspond to the cone
  // {(a, beta) : a.v - beta <= 0 for every vertex v}; its extreme rays are
  // the facets and its lineality space the affine-hull equalities.
  MatQ m(n, d + 1);
  for (int i = 0; i < n; ++i) {
    m.row(i).head(d) = p.vertices()[i].transpose();
    m(i, d) = -1;
  }
  ConeRays cone = dd_extreme_rays(m);

  HPolytope h;
  h.dim = d;
  for (const VecQ& r : cone.rays) {
    VecQ a = r.head(d);
    if (a.isZero(0)) continue;  // the trivial inequality 0 <= beta
    h.inequalities.emplace_back(std::move(a), r(d));
  }
  for (const VecQ& l : cone.lineality) {
    VecQ a = l.head(d);
    Rational beta = l(d);
    // Normalize the sign: first nonzero coefficient positive.
    int s = 0;
    for (Eigen::Index i = 0; i < a.size() && s == 0; ++i) s = sgn(a(i));
    if (s == 0) s = sgn(beta);
    if (s < 0) {
      a = -a;
      beta = -beta;
    }
    h.equalities.emplace_back(std::move(a), std::move(beta));
  }
  std::sort(h.inequalities.begin(), h.inequalities.end(), pair_lex_less);
  std::sort(h.equalities.begin(), h.equalities.end(), pair_lex_less);
  return h;
}

Polytope from_h_rep(const HPolytope& h) {
  const int d = h.dim;
  const int rows =
      static_cast<int>(h.inequalities.size() + 2 * h.equalities.size()) + 1;
  // Homogenize: a.x <= beta t with t >= 0; vertices are the rays with
  // t > 0, anything else witnesses unboundedness.
  MatQ m = MatQ::Zero(rows, d + 1);
  int r = 0;
  for (const auto& [a, beta] : h.inequalities) {
    m.row(r).head(d) = a.transpose();
    m(r, d) = -beta;
    ++r;
  }
  for (const auto& [a, beta] : h.equalities) {
    m.row(r).head(d) = a.transpose();
    m(r, d) = -beta;
    ++r;
    m.row(r).head(d) = -a.transpose();
    m(r, d) = beta;
    ++r;
  }
  m(r, d) = -1;  // -t <= 0

  ConeRays cone = dd_extreme_rays(m);
  std::vector<VecQ> verts;
  bool has_direction = !cone.lineality.empty();
  for (const VecQ& ray : cone.rays) {
    if (ray(d) > 0) {
      verts.push_back(ray.head(d) / ray(d));
    } else {
      has_direction = true;
    }
  }
  if (verts.empty()) return Polytope(d);
  if (has_direction) {
    throw std::domain_error("from_h_rep: system is unbounded");
  }
  return Polytope::from_extreme_points(d, std::move(verts));
}

Polytope meet(const Polytope& p, const Polytope& q) {
  check_same_dim(p, q, "meet");
  if (p.is_empty() || q.is_empty()) return Polytope(p.dim());
  HPolytope hp = to_h_rep(p);
  HPolytope hq = to_h_rep(q);
  hp.inequalities.insert(hp.inequalities.end(), hq.inequalities.begin(),
                         hq.inequalities.end());
  hp.equalities.insert(hp.equalities.end(), hq.equalities.begin(),
                       hq.equalities.end());
  return from_h_rep(hp);
}

Polytope join(const Polytope& p, const Polytope& q) {
  check_same_dim(p, q, "join");
  std::vector<VecQ> pts = p.vertices();
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  return hull(pts, p.dim());
}

Polytope polar_dual(const Polytope& p) {
  if (p.is_empty()) {
    throw std::domain_error("polar_dual: empty polytope");
  }
  HPolytope h = to_h_rep(p);
  if (!h.equalities.empty()) {
    throw std::domain_error("polar_dual: polytope is not full-dimensional");
  }
  std::vector<VecQ> verts;
  for (const auto& [a, beta] : h.inequalities) {
    if (beta <= 0) {
      throw std::domain_error(
          "polar_dual: origin is not strictly interior");
    }
    verts.push_back(a / beta);
  }
  return Polytope::from_extreme_points(p.dim(), std::move(verts));
}

}  // namespace convlat
