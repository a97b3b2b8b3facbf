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

#include "convlat/check.hpp"

#include <stdexcept>

namespace convlat {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Vacuous:
      return "vacuous";
  }
  return "unknown";
}

LatticeHandle::Elem eval_term(const TermPtr& t, const LatticeHandle& lat,
                              const Assignment& assignment) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = assignment.find(t->var);
      if (it == assignment.end()) {
        throw std::invalid_argument("eval_term: unbound variable " + t->var);
      }
      return it->second;
    }
    case Term::Kind::Meet:
      return lat.meet(eval_term(t->left, lat, assignment),
                      eval_term(t->right, lat, assignment));
    case Term::Kind::Join:
      return lat.join(eval_term(t->left, lat, assignment),
                      eval_term(t->right, lat, assignment));
  }
  throw std::logic_error("eval_term: bad node");
}

CheckReport check(const Identity& id, const LatticeHandle& lat,
                  const Assignment& assignment) {
  CheckReport report;
  report.identity = id;
  report.lattice_name = lat.name();
  for (const std::string& v : id.free_vars) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw std::invalid_argument("check: assignment misses variable " + v);
    }
    report.assignment_json[v] = lat.elem_json(it->second);
  }

  LatticeHandle::Elem lhs = eval_term(id.lhs, lat, assignment);
  LatticeHandle::Elem rhs = eval_term(id.rhs, lat, assignment);
  bool ok = id.mode == IdentityMode::Equation ? lat.equal(lhs, rhs)
                                              : lat.leq(lhs, rhs);
  report.verdict = ok ? Verdict::Holds : Verdict::Fails;
  if (!ok) {
    report.witness = lat.point_witness(lhs, rhs);
    if (!report.witness && id.mode == IdentityMode::Equation) {
      report.witness = lat.point_witness(rhs, lhs);
    }
  }
  return report;
}

std::optional<CheckReport> falsify(const Identity& id,
                                   const LatticeHandle& lat,
                                   const SamplerConfig& config, long trials,
                                   std::uint64_t seed) {
  if (trials < 0) throw std::invalid_argument("falsify: negative trials");
  for (long t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
    Assignment assignment;
    for (const std::string& v : id.free_vars) {
      assignment.emplace(v, lat.sample(rng, config));
    }
    CheckReport report = check(id, lat, assignment);
    if (report.verdict == Verdict::Fails) {
      report.seed = seed;
      report.trials = t + 1;
      report.failing_trial = t;
      return report;
    }
  }
  return std::nullopt;
}

Verdict check_jsd(const LatticeHandle& lat, const LatticeHandle::Elem& x,
                  const LatticeHandle::Elem& y1,
                  const LatticeHandle::Elem& y2) {
  LatticeHandle::Elem j1 = lat.join(x, y1);
  if (!lat.equal(j1, lat.join(x, y2))) return Verdict::Vacuous;
  return lat.equal(j1, lat.join(x, lat.meet(y1, y2))) ? Verdict::Holds
                                                      : Verdict::Fails;
}

Verdict check_njsd(const LatticeHandle& lat, int n,
                   const LatticeHandle::Elem& x,
                   const std::vector<LatticeHandle::Elem>& ys) {
  if (n < 1) throw std::invalid_argument("check_njsd: n must be >= 1");
  if (static_cast<int>(ys.size()) != n + 1) {
    throw std::invalid_argument("check_njsd: need n+1 joinands");
  }
  LatticeHandle::Elem j = lat.join(x, ys[0]);
  for (std::size_t i = 1; i < ys.size(); ++i) {
    if (!lat.equal(j, lat.join(x, ys[i]))) return Verdict::Vacuous;
  }
  std::optional<LatticeHandle::Elem> pairs;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t k = i + 1; k < ys.size(); ++k) {
      LatticeHandle::Elem m = lat.meet(ys[i], ys[k]);
      pairs = pairs ? lat.join(*pairs, m) : m;
    }
  }
  // n >= 1 guarantees at least the pair (y1, y2).
  return lat.equal(j, lat.join(x, *pairs)) ? Verdict::Holds : Verdict::Fails;
}

}  // namespace convlat
