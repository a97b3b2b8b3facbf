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

#include "convlat/closure_system.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace convlat {

ClosureSystem::ClosureSystem(std::vector<std::string> ground,
                             std::vector<ClosureRule> rules)
    : ground_(std::move(ground)), rules_(std::move(rules)) {
  const int n = ground_size();
  if (n < 1 || n > 10) {
    throw std::invalid_argument("ClosureSystem: 1 to 10 ground points");
  }
  std::set<std::string> distinct;
  for (const std::string& name : ground_) {
    if (name.empty() || !distinct.insert(name).second) {
      throw std::invalid_argument(
          "ClosureSystem: ground names must be nonempty and distinct");
    }
  }
  for (ClosureRule& rule : rules_) {
    if (rule.conclusion < 0 || rule.conclusion >= n) {
      throw std::invalid_argument("ClosureSystem: rule conclusion range");
    }
    for (int p : rule.premise) {
      if (p < 0 || p >= n) {
        throw std::invalid_argument("ClosureSystem: rule premise range");
      }
    }
    std::sort(rule.premise.begin(), rule.premise.end());
    rule.premise.erase(
        std::unique(rule.premise.begin(), rule.premise.end()),
        rule.premise.end());
  }

  // Precompute the closure of every subset by iterating the rules to a
  // fixpoint; the ground set is small enough to do this eagerly.
  std::vector<std::uint32_t> rule_mask(rules_.size(), 0);
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    for (int p : rules_[r].premise) rule_mask[r] |= 1u << p;
  }
  closure_.resize(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < closure_.size(); ++mask) {
    std::uint32_t cur = mask;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        const std::uint32_t want = 1u << rules_[r].conclusion;
        if ((cur & rule_mask[r]) == rule_mask[r] && (cur & want) == 0) {
          cur |= want;
          changed = true;
        }
      }
    }
    closure_[mask] = cur;
  }
}

std::uint32_t ClosureSystem::close(std::uint32_t mask) const {
  if (mask >= closure_.size()) {
    throw std::invalid_argument("ClosureSystem::close: mask out of range");
  }
  return closure_[mask];
}

std::vector<std::uint32_t> ClosureSystem::closed_sets() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < closure_.size(); ++mask) {
    if (closure_[mask] == mask) out.push_back(mask);
  }
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::string ClosureSystem::format_subset(std::uint32_t mask) const {
  std::string s = "{";
  for (int i = 0; i < ground_size(); ++i) {
    if (mask & (1u << i)) {
      if (s.size() > 1) s += ",";
      s += ground_[i];
    }
  }
  return s + "}";
}

FiniteLattice closed_set_lattice(const ClosureSystem& system) {
  const std::vector<std::uint32_t> closed = system.closed_sets();
  const int n = static_cast<int>(closed.size());
  if (n > 64) {
    throw std::invalid_argument(
        "closed_set_lattice: more than 64 closed sets");
  }
  std::vector<std::string> names;
  for (std::uint32_t mask : closed) names.push_back(system.format_subset(mask));
  auto index_of = [&](std::uint32_t mask) {
    for (int i = 0; i < n; ++i) {
      if (closed[i] == mask) return i;
    }
    throw std::logic_error("closed_set_lattice: missing closed set");
  };
  std::vector<std::vector<int>> meet(n, std::vector<int>(n));
  std::vector<std::vector<int>> join(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      meet[i][j] = index_of(closed[i] & closed[j]);
      join[i][j] = index_of(system.close(closed[i] | closed[j]));
    }
  }
  return FiniteLattice::from_tables(std::move(names), std::move(meet),
                                    std::move(join));
}

bool caratheodory_property(const ClosureSystem& system, int n) {
  if (n < 1) throw std::invalid_argument("caratheodory_property: n >= 1");
  const std::uint32_t all = (1u << system.ground_size()) - 1;
  for (std::uint32_t a = 0; a <= all; ++a) {
    const std::uint32_t target = system.close(a);
    std::uint32_t covered = 0;
    std::uint32_t b = a;
    while (true) {
      if (std::popcount(b) <= n) covered |= system.close(b);
      if (b == 0) break;
      b = (b - 1) & a;
    }
    if (covered != target) return false;
  }
  return true;
}

ClosureLawReport check_caratheodory_distributivity(
    const ClosureSystem& system, int n) {
  ClosureLawReport report;
  report.n = n;

  const FiniteLattice lattice = closed_set_lattice(system);
  const std::vector<std::uint32_t> closed = system.closed_sets();
  for (int x = 0; x < system.ground_size(); ++x) {
    const std::uint32_t singleton = system.close(1u << x);
    int index = -1;
    for (std::size_t i = 0; i < closed.size(); ++i) {
      if (closed[i] == singleton) index = static_cast<int>(i);
    }
    if (index < 0 || !lattice.is_join_irreducible(index)) {
      report.skipped_reason = "closure of {" + system.ground()[x] +
                              "} is not join-irreducible";
      return report;
    }
  }

  report.checked = true;
  report.dn_holds = is_dn(lattice, n);
  report.caratheodory_holds = caratheodory_property(system, n);
  report.biconditional_holds =
      report.dn_holds == report.caratheodory_holds;
  return report;
}

ClosureSystem random_closure_system(Rng& rng) {
  const int ground = static_cast<int>(rng.range(3, 6));
  std::vector<std::string> names;
  for (int i = 0; i < ground; ++i) names.push_back("p" + std::to_string(i));
  const int nrules = static_cast<int>(rng.range(2, 6));
  std::vector<ClosureRule> rules;
  for (int r = 0; r < nrules; ++r) {
    ClosureRule rule;
    const int premise_size =
        static_cast<int>(rng.range(2, std::min(3, ground - 1)));
    while (static_cast<int>(rule.premise.size()) < premise_size) {
      const int p = static_cast<int>(rng.below(ground));
      if (std::find(rule.premise.begin(), rule.premise.end(), p) ==
          rule.premise.end()) {
        rule.premise.push_back(p);
      }
    }
    do {
      rule.conclusion = static_cast<int>(rng.below(ground));
    } while (std::find(rule.premise.begin(), rule.premise.end(),
                       rule.conclusion) != rule.premise.end());
    rules.push_back(std::move(rule));
  }
  return ClosureSystem(std::move(names), std::move(rules));
}

}  // namespace convlat
