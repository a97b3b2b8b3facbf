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

#include "convlat/relconv.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "convlat/polytope.hpp"

namespace convlat {
namespace {

void check_indices(const GroundSet& ground, const std::vector<int>& a,
                   const char* what) {
  for (int i : a) {
    if (i < 0 || i >= static_cast<int>(ground.points.size())) {
      throw std::invalid_argument(std::string(what) +
                                  ": ground index out of range");
    }
  }
}

std::vector<int> sorted_unique(std::vector<int> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

std::vector<int> rel_closure(const GroundSet& ground,
                             const std::vector<int>& a) {
  check_indices(ground, a, "rel_closure");
  std::vector<int> in = sorted_unique(a);
  if (in.empty()) return in;
  std::vector<VecQ> pts;
  for (int i : in) pts.push_back(ground.points[i]);
  Polytope h = hull(pts, ground.dim);
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(ground.points.size()); ++s) {
    if (contains(h, ground.points[s])) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<int>> enumerate_closed_sets(
    const GroundSet& ground) {
  const int n = static_cast<int>(ground.points.size());
  if (n > 20) {
    throw std::invalid_argument(
        "enumerate_closed_sets: ground set larger than the guard (20)");
  }
  std::set<std::vector<int>> seen;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> a;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1ul) a.push_back(i);
    }
    seen.insert(rel_closure(ground, a));
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

bool hull_lattice_R1_meet_check(const GroundSet& ground,
                                const std::vector<int>& x,
                                const std::vector<int>& y) {
  if (ground.dim != 1) {
    throw std::invalid_argument("hull_lattice_R1_meet_check: dim must be 1");
  }
  check_indices(ground, x, "hull_lattice_R1_meet_check");
  check_indices(ground, y, "hull_lattice_R1_meet_check");

  auto interval = [&](const std::vector<int>& a)
      -> std::optional<std::pair<Rational, Rational>> {
    if (a.empty()) return std::nullopt;
    Rational lo = ground.points[a[0]](0), hi = lo;
    for (int i : a) {
      const Rational& v = ground.points[i](0);
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    return std::make_pair(lo, hi);
  };

  // hull(x) ∩ hull(y) as an interval.
  auto ix = interval(x), iy = interval(y);
  std::optional<std::pair<Rational, Rational>> lhs;
  if (ix && iy) {
    Rational lo = std::max(ix->first, iy->first);
    Rational hi = std::min(ix->second, iy->second);
    if (lo <= hi) lhs = std::make_pair(lo, hi);
  }

  std::vector<int> common;
  std::vector<int> sx = sorted_unique(x), sy = sorted_unique(y);
  std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                        std::back_inserter(common));
  auto rhs = interval(common);

  if (!lhs && !rhs) return true;
  if (!lhs || !rhs) return false;
  return lhs->first == rhs->first && lhs->second == rhs->second;
}

RelConvLattice::RelConvLattice(GroundSet ground, std::string label,
                               int base_point)
    : ground_(std::move(ground)),
      label_(std::move(label)),
      base_point_(base_point) {
  if (ground_.dim < 1) {
    throw std::invalid_argument("RelConvLattice: dim must be >= 1");
  }
  if (ground_.points.empty()) {
    throw std::invalid_argument("RelConvLattice: empty ground set");
  }
  for (std::size_t i = 0; i < ground_.points.size(); ++i) {
    for (std::size_t j = i + 1; j < ground_.points.size(); ++j) {
      if (ground_.points[i] == ground_.points[j]) {
        throw std::invalid_argument(
            "RelConvLattice: duplicate ground point");
      }
    }
  }
  if (base_point_ < -1 ||
      base_point_ >= static_cast<int>(ground_.points.size())) {
    throw std::invalid_argument(
        "RelConvLattice: base point index out of range");
  }
  if (label_.empty()) {
    label_ = (base_point_ >= 0 ? "relconv-pointed(" : "relconv(") +
             std::to_string(ground_.points.size()) + "pts,dim=" +
             std::to_string(ground_.dim) + ")";
  }
}

std::string RelConvLattice::name() const { return label_; }

const std::vector<int>& RelConvLattice::as_indices(const Elem& e) const {
  const auto* v = std::any_cast<std::vector<int>>(&e);
  if (!v) throw std::invalid_argument(name() + ": foreign element");
  return *v;
}

LatticeHandle::Elem RelConvLattice::make_element(
    std::vector<int> indices) const {
  if (base_point_ >= 0) indices.push_back(base_point_);
  return Elem(rel_closure(ground_, indices));
}

LatticeHandle::Elem RelConvLattice::meet(const Elem& a,
                                         const Elem& b) const {
  const auto& va = as_indices(a);
  const auto& vb = as_indices(b);
  std::vector<int> out;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                        std::back_inserter(out));
  return Elem(std::move(out));
}

LatticeHandle::Elem RelConvLattice::join(const Elem& a,
                                         const Elem& b) const {
  const auto& va = as_indices(a);
  const auto& vb = as_indices(b);
  std::vector<int> u = va;
  u.insert(u.end(), vb.begin(), vb.end());
  return Elem(rel_closure(ground_, u));
}

bool RelConvLattice::equal(const Elem& a, const Elem& b) const {
  return as_indices(a) == as_indices(b);
}

bool RelConvLattice::leq(const Elem& a, const Elem& b) const {
  const auto& va = as_indices(a);
  const auto& vb = as_indices(b);
  return std::includes(vb.begin(), vb.end(), va.begin(), va.end());
}

std::string RelConvLattice::describe(const Elem& e) const {
  std::ostringstream out;
  out << "{";
  const auto& v = as_indices(e);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    out << format_point(ground_.points[v[i]]);
  }
  out << "}";
  return out.str();
}

std::string RelConvLattice::elem_json(const Elem& e) const {
  std::vector<VecQ> pts;
  for (int i : as_indices(e)) pts.push_back(ground_.points[i]);
  return points_to_json(pts);
}

LatticeHandle::Elem RelConvLattice::elem_from_json(
    const std::string& text) const {
  std::vector<VecQ> pts = parse_points_json(text, ground_.dim);
  std::vector<int> indices;
  for (const VecQ& p : pts) {
    int found = -1;
    for (std::size_t s = 0; s < ground_.points.size(); ++s) {
      if (ground_.points[s] == p) {
        found = static_cast<int>(s);
        break;
      }
    }
    if (found < 0) {
      throw std::invalid_argument(name() + ": point " + format_point(p) +
                                  " is not in the ground set");
    }
    indices.push_back(found);
  }
  std::vector<int> sorted = sorted_unique(indices);
  if (rel_closure(ground_, sorted) != sorted) {
    throw std::invalid_argument(name() +
                                ": set is not relatively convex");
  }
  if (base_point_ >= 0 &&
      !std::binary_search(sorted.begin(), sorted.end(), base_point_)) {
    throw std::invalid_argument(name() +
                                ": element misses the base point");
  }
  return Elem(std::move(sorted));
}

LatticeHandle::Elem RelConvLattice::sample(
    Rng& rng, const SamplerConfig& config) const {
  if (config.points_per_set < 1) {
    throw std::invalid_argument(name() + ": points_per_set must be >= 1");
  }
  long count = rng.range(1, config.points_per_set);
  std::vector<int> indices;
  for (long i = 0; i < count; ++i) {
    indices.push_back(static_cast<int>(
        rng.below(static_cast<std::uint64_t>(ground_.points.size()))));
  }
  return make_element(std::move(indices));
}

std::optional<VecQ> RelConvLattice::point_witness(const Elem& a,
                                                 const Elem& b) const {
  const auto& va = as_indices(a);
  const auto& vb = as_indices(b);
  for (int i : va) {
    if (!std::binary_search(vb.begin(), vb.end(), i)) {
      return ground_.points[i];
    }
  }
  return std::nullopt;
}

std::optional<bool> RelConvLattice::contains_point(const Elem& e,
                                                   const VecQ& p) const {
  if (p.size() != ground_.dim) {
    throw std::invalid_argument(name() + ": point dimension mismatch");
  }
  for (int i : as_indices(e)) {
    if (ground_.points[i] == p) return true;
  }
  return false;
}

namespace {

class RelativizedLattice : public LatticeHandle {
 public:
  RelativizedLattice(std::shared_ptr<const LatticeHandle> base,
                     std::vector<Elem> pieces)
      : base_(std::move(base)), pieces_(std::move(pieces)) {
    if (!base_) {
      throw std::invalid_argument("relativize: null base lattice");
    }
    if (pieces_.empty()) {
      throw std::invalid_argument("relativize: need at least one piece");
    }
  }

  std::string name() const override {
    return "relativized(" + base_->name() + ")";
  }

  /// int(x) = V_i (x ^ pieces[i]); its fixed points are the elements.
  Elem interior(const Elem& x) const {
    std::optional<Elem> acc;
    for (const Elem& s : pieces_) {
      Elem m = base_->meet(x, s);
      acc = acc ? base_->join(*acc, m) : m;
    }
    return *acc;
  }

  Elem meet(const Elem& a, const Elem& b) const override {
    return interior(base_->meet(a, b));
  }
  Elem join(const Elem& a, const Elem& b) const override {
    return base_->join(a, b);
  }
  bool equal(const Elem& a, const Elem& b) const override {
    return base_->equal(a, b);
  }
  bool leq(const Elem& a, const Elem& b) const override {
    return base_->leq(a, b);
  }
  std::string describe(const Elem& e) const override {
    return base_->describe(e);
  }
  std::string elem_json(const Elem& e) const override {
    return base_->elem_json(e);
  }
  Elem elem_from_json(const std::string& text) const override {
    Elem e = base_->elem_from_json(text);
    if (!base_->equal(e, interior(e))) {
      throw std::invalid_argument(
          name() + ": element is not fixed by the interior operator");
    }
    return e;
  }
  Elem sample(Rng& rng, const SamplerConfig& config) const override {
    return interior(base_->sample(rng, config));
  }
  std::optional<VecQ> point_witness(const Elem& a,
                                    const Elem& b) const override {
    return base_->point_witness(a, b);
  }

  std::optional<bool> contains_point(const Elem& e,
                                     const VecQ& p) const override {
    return base_->contains_point(e, p);
  }

 private:
  std::shared_ptr<const LatticeHandle> base_;
  std::vector<Elem> pieces_;
};

}  // namespace

std::shared_ptr<LatticeHandle> relativize(
    std::shared_ptr<const LatticeHandle> base,
    std::vector<LatticeHandle::Elem> pieces) {
  return std::make_shared<RelativizedLattice>(std::move(base),
                                              std::move(pieces));
}

}  // namespace convlat
