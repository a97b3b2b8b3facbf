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

#include "convlat/convex_lattices.hpp"

#include <stdexcept>

#include "convlat/jsonio.hpp"

namespace convlat {
namespace {

VecQ random_point(Rng& rng, int dim, const SamplerConfig& config) {
  VecQ v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = rng.rational(config.magnitude, config.den_bound);
  }
  return v;
}

std::vector<VecQ> random_points(Rng& rng, int dim,
                                const SamplerConfig& config,
                                bool force_origin) {
  if (config.points_per_set < 1) {
    throw std::invalid_argument("sampler: points_per_set must be >= 1");
  }
  long count = rng.range(1, config.points_per_set);
  std::vector<VecQ> pts;
  for (long i = 0; i < count; ++i) {
    pts.push_back(random_point(rng, dim, config));
  }
  if (force_origin || config.include_origin) {
    pts.push_back(VecQ::Zero(dim));
  }
  return pts;
}

}  // namespace

ConvLattice::ConvLattice(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("ConvLattice: dim must be >= 1");
}

std::string ConvLattice::name() const {
  return "conv:" + std::to_string(dim_);
}

const Polytope& ConvLattice::as_polytope(const Elem& e) const {
  const Polytope* p = std::any_cast<Polytope>(&e);
  if (!p) {
    throw std::invalid_argument(name() + ": foreign element");
  }
  if (p->dim() != dim_) {
    throw std::invalid_argument(name() + ": element dimension mismatch");
  }
  return *p;
}

LatticeHandle::Elem ConvLattice::make_element(Polytope p) const {
  if (p.dim() != dim_) {
    throw std::invalid_argument(name() + ": element dimension mismatch");
  }
  return Elem(std::move(p));
}

LatticeHandle::Elem ConvLattice::meet(const Elem& a, const Elem& b) const {
  return Elem(convlat::meet(as_polytope(a), as_polytope(b)));
}

LatticeHandle::Elem ConvLattice::join(const Elem& a, const Elem& b) const {
  return Elem(convlat::join(as_polytope(a), as_polytope(b)));
}

bool ConvLattice::equal(const Elem& a, const Elem& b) const {
  return as_polytope(a) == as_polytope(b);
}

bool ConvLattice::leq(const Elem& a, const Elem& b) const {
  const Polytope& pa = as_polytope(a);
  const Polytope& pb = as_polytope(b);
  for (const VecQ& v : pa.vertices()) {
    if (!contains(pb, v)) return false;
  }
  return true;
}

std::string ConvLattice::describe(const Elem& e) const {
  return as_polytope(e).to_string();
}

std::string ConvLattice::elem_json(const Elem& e) const {
  return polytope_to_json(as_polytope(e));
}

LatticeHandle::Elem ConvLattice::elem_from_json(
    const std::string& text) const {
  return make_element(parse_polytope_json(text));
}

LatticeHandle::Elem ConvLattice::sample(Rng& rng,
                                        const SamplerConfig& config) const {
  return Elem(hull(random_points(rng, dim_, config, false), dim_));
}

std::optional<VecQ> ConvLattice::point_witness(const Elem& a,
                                               const Elem& b) const {
  const Polytope& pa = as_polytope(a);
  const Polytope& pb = as_polytope(b);
  for (const VecQ& v : pa.vertices()) {
    if (!contains(pb, v)) return v;
  }
  return std::nullopt;
}

std::optional<bool> ConvLattice::contains_point(const Elem& e,
                                                const VecQ& p) const {
  if (p.size() != dim_) {
    throw std::invalid_argument(name() + ": point dimension mismatch");
  }
  return contains(as_polytope(e), p);
}

PointedConvLattice::PointedConvLattice(int dim) : ConvLattice(dim) {}

std::string PointedConvLattice::name() const {
  return "pointed:" + std::to_string(dim_);
}

LatticeHandle::Elem PointedConvLattice::make_element(Polytope p) const {
  if (p.dim() != dim_) {
    throw std::invalid_argument(name() + ": element dimension mismatch");
  }
  if (!contains(p, VecQ::Zero(dim_))) {
    throw std::invalid_argument(name() +
                                ": element must contain the origin");
  }
  return Elem(std::move(p));
}

LatticeHandle::Elem PointedConvLattice::elem_from_json(
    const std::string& text) const {
  return make_element(parse_polytope_json(text));
}

LatticeHandle::Elem PointedConvLattice::sample(
    Rng& rng, const SamplerConfig& config) const {
  return Elem(hull(random_points(rng, dim_, config, true), dim_));
}

JsdTriple jsd_premise_sampler(int dim, Rng& rng,
                              const SamplerConfig& config) {
  JsdTriple out;
  out.x = hull(random_points(rng, dim, config, false), dim);
  out.y1 = hull(random_points(rng, dim, config, false), dim);
  Polytope v = join(out.x, out.y1);

  // y2 keeps every extreme point of v that x does not cover, so
  // x v y2 >= every vertex of v; y2's generators all lie in v, so
  // x v y2 = v = x v y1 exactly.
  std::vector<VecQ> gens;
  for (const VecQ& p : v.vertices()) {
    if (!contains(out.x, p)) gens.push_back(p);
  }
  for (const VecQ& p : v.vertices()) {
    if (rng.coin()) gens.push_back(p);
  }
  if (gens.empty() || rng.coin()) {
    // Blend in an interior point: the average of all vertices of v.
    VecQ avg = VecQ::Zero(dim);
    for (const VecQ& p : v.vertices()) avg += p;
    avg /= Rational(static_cast<long>(v.vertices().size()));
    gens.push_back(avg);
  }
  out.y2 = hull(gens, dim);
  return out;
}

}  // namespace convlat
