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

#include "convlat/starlat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "convlat/linalg.hpp"

namespace convlat {
namespace {

bool ext_lex_less(const ExtQ& a, const ExtQ& b) {
  if (a == b) return false;
  return a < b;
}

struct StarLess {
  bool operator()(const StarElement& a, const StarElement& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return ext_lex_less(a[i], b[i]);
    }
    return a.size() < b.size();
  }
};

struct SnowLess {
  bool operator()(const SnowflakeElement& a,
                  const SnowflakeElement& b) const {
    for (int i = 0; i < 3; ++i) {
      if (a[i] != b[i]) return ext_lex_less(a[i], b[i]);
    }
    return false;
  }
};

}  // namespace

ExtQ ext_min(const ExtQ& a, const ExtQ& b) { return a < b ? a : b; }
ExtQ ext_max(const ExtQ& a, const ExtQ& b) { return a < b ? b : a; }

ExtQ ext_add(const ExtQ& a, const ExtQ& b) {
  if (a.is_inf || b.is_inf) return ExtQ::inf();
  return ExtQ::of(a.value + b.value);
}

ExtQ ext_scale(const Rational& w, const ExtQ& a) {
  if (w <= 0) throw std::invalid_argument("ext_scale: weight must be > 0");
  if (a.is_inf) return ExtQ::inf();
  return ExtQ::of(w * a.value);
}

std::string format_ext(const ExtQ& a) {
  return a.is_inf ? "inf" : format_rational(a.value);
}

ExtQ parse_ext(const std::string& text) {
  if (text == "inf" || text == "∞") return ExtQ::inf();
  return ExtQ::of(parse_rational(text));
}

bool snow_valid(const SnowflakeElement& u) {
  for (int i = 0; i < 3; ++i) {
    if (!u[i].is_inf && u[i].value < 1) return false;
    if (!(u[i] <= ext_add(u[(i + 1) % 3], u[(i + 2) % 3]))) return false;
  }
  return true;
}

SnowflakeElement make_snowflake(ExtQ a1, ExtQ a2, ExtQ a3) {
  SnowflakeElement u = {std::move(a1), std::move(a2), std::move(a3)};
  if (!snow_valid(u)) {
    throw std::invalid_argument("make_snowflake: " + format_snowflake(u) +
                                " violates the element conditions");
  }
  return u;
}

std::string format_snowflake(const SnowflakeElement& u) {
  return "[" + format_ext(u[0]) + "," + format_ext(u[1]) + "," +
         format_ext(u[2]) + "]";
}

SnowflakeElement snow_meet(const SnowflakeElement& u,
                           const SnowflakeElement& v) {
  return {ext_max(u[0], v[0]), ext_max(u[1], v[1]), ext_max(u[2], v[2])};
}

SnowflakeElement snow_join(const SnowflakeElement& u,
                           const SnowflakeElement& v) {
  SnowflakeElement w = {ext_min(u[0], v[0]), ext_min(u[1], v[1]),
                        ext_min(u[2], v[2])};
  // At most one entry can exceed the sum of the other two (two
  // simultaneous violations would contradict each other), so one repair
  // restores validity.
  for (int i = 0; i < 3; ++i) {
    ExtQ sum = ext_add(w[(i + 1) % 3], w[(i + 2) % 3]);
    if (!(w[i] <= sum)) {
      w[i] = sum;
      break;
    }
  }
  return w;
}

bool snow_leq(const SnowflakeElement& u, const SnowflakeElement& v) {
  for (int i = 0; i < 3; ++i) {
    if (!(v[i] <= u[i])) return false;
  }
  return true;
}

std::array<SnowflakeElement, 3> snow_generators() {
  ExtQ one = ExtQ::of(1);
  return {SnowflakeElement{one, ExtQ::inf(), ExtQ::inf()},
          SnowflakeElement{ExtQ::inf(), one, ExtQ::inf()},
          SnowflakeElement{ExtQ::inf(), ExtQ::inf(), one}};
}

std::vector<SnowflakeElement> snow_generate(int bound) {
  if (bound < 1) throw std::invalid_argument("snow_generate: bound >= 1");
  auto within = [&](const SnowflakeElement& u) {
    for (int i = 0; i < 3; ++i) {
      if (!u[i].is_inf && u[i].value > bound) return false;
    }
    return true;
  };
  std::set<SnowflakeElement, SnowLess> seen;
  std::vector<SnowflakeElement> work;
  for (const SnowflakeElement& g : snow_generators()) {
    seen.insert(g);
    work.push_back(g);
  }
  // Closure under both operations; elements growing past the bound are
  // discarded, which keeps the search finite.
  for (std::size_t next = 0; next < work.size(); ++next) {
    SnowflakeElement a = work[next];
    for (std::size_t i = 0; i <= next; ++i) {
      for (SnowflakeElement c : {snow_meet(a, work[i]),
                                 snow_join(a, work[i])}) {
        if (!within(c)) continue;
        if (seen.insert(c).second) work.push_back(c);
      }
    }
  }
  std::vector<SnowflakeElement> out(seen.begin(), seen.end());
  return out;
}

std::vector<SnowflakeElement> snow_descending_chain(int steps) {
  if (steps < 0) throw std::invalid_argument("snow_descending_chain");
  auto [a, b, c] = snow_generators();
  std::vector<SnowflakeElement> out = {a};
  for (int k = 0; k < steps; ++k) {
    SnowflakeElement a2 = snow_meet(snow_join(b, c), a);
    SnowflakeElement b2 = snow_meet(snow_join(c, a), b);
    SnowflakeElement c2 = snow_meet(snow_join(a, b), c);
    a = a2;
    b = b2;
    c = c2;
    out.push_back(a);
  }
  return out;
}

StarConfig StarConfig::build(int dim, std::vector<VecQ> rays) {
  if (dim < 1) throw std::invalid_argument("StarConfig: dim must be >= 1");
  const int m = static_cast<int>(rays.size());
  if (m > 12) throw std::invalid_argument("StarConfig: more than 12 rays");
  for (const VecQ& r : rays) {
    if (static_cast<int>(r.size()) != dim) {
      throw std::invalid_argument("StarConfig: ray dimension mismatch");
    }
    if (r.isZero(0)) throw std::invalid_argument("StarConfig: zero ray");
  }
  // No ray may be a nonnegative multiple of another: for parallel pairs
  // the shared direction must be opposite.
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      MatQ pair(static_cast<Eigen::Index>(dim), 2);
      pair.col(0) = rays[i];
      pair.col(1) = rays[j];
      if (rank(pair) == 2) continue;
      // Parallel: find the scale rays[j] = t * rays[i].
      Rational t;
      for (int k = 0; k < dim; ++k) {
        if (rays[i](k) != 0) {
          t = rays[j](k) / rays[i](k);
          break;
        }
      }
      if (t > 0) {
        throw std::invalid_argument(
            "StarConfig: ray " + std::to_string(j) +
            " is a nonnegative multiple of ray " + std::to_string(i));
      }
    }
  }

  StarConfig config;
  config.dim_ = dim;
  config.rays_ = std::move(rays);

  // Circuits: subsets whose dependence space is one-dimensional with all
  // coefficients nonzero (minimality), sizes 2..dim+1.
  for (int size = 2; size <= dim + 1 && size <= m; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      MatQ sub(static_cast<Eigen::Index>(dim), size);
      for (int i = 0; i < size; ++i) sub.col(i) = config.rays_[pick[i]];
      MatQ ker = kernel_basis(sub);
      if (ker.cols() == 1) {
        bool all_nonzero = true;
        for (int i = 0; i < size; ++i) {
          if (ker(i, 0) == 0) {
            all_nonzero = false;
            break;
          }
        }
        if (all_nonzero) {
          Circuit circuit;
          circuit.indices = pick;
          VecQ c = ker.col(0) / ker(0, 0);  // first coefficient = +1
          int pos = 0, neg = 0;
          for (int i = 0; i < size; ++i) {
            circuit.coeffs.push_back(c(i));
            (c(i) > 0 ? pos : neg)++;
          }
          // A sign pattern of one against the rest needs a rest of at
          // least two, so pairs (which are antipodal here) never flag.
          circuit.flagged = size >= 3 && (pos == 1 || neg == 1);
          if (circuit.flagged) {
            int minority_sign = pos == 1 ? 1 : -1;
            for (int i = 0; i < size; ++i) {
              if (sgn(c(i)) == minority_sign) circuit.special = i;
            }
          }
          config.circuits_.push_back(std::move(circuit));
        }
      }
      int posn = size - 1;
      while (posn >= 0 && pick[posn] == m - size + posn) --posn;
      if (posn < 0) break;
      ++pick[posn];
      for (int i = posn + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }

  // Repairs lower a_j to sum_i w_i a_i with w_i = -c_i / c_j > 0; the
  // result stays >= 1 for all inputs iff the weights sum to >= 1.
  for (const Circuit& circuit : config.circuits_) {
    if (!circuit.flagged) continue;
    Rational wsum = 0;
    const Rational& cj = circuit.coeffs[circuit.special];
    for (std::size_t i = 0; i < circuit.coeffs.size(); ++i) {
      if (static_cast<int>(i) == circuit.special) continue;
      wsum += -circuit.coeffs[i] / cj;
    }
    if (wsum < 1) {
      throw std::invalid_argument(
          "StarConfig: flagged circuit with repair weights summing below 1 "
          "(closure could leave [1, inf])");
    }
  }
  return config;
}

bool star_in_range(const StarConfig& config, const StarElement& a) {
  if (a.size() != config.rays().size()) return false;
  for (const ExtQ& x : a) {
    if (!x.is_inf && x.value < 1) return false;
  }
  return true;
}

namespace {

// The flagged-circuit upper bound on a_j: sum of -c_i/c_j * a_i.
ExtQ circuit_bound(const Circuit& circuit, const StarElement& a) {
  const Rational& cj = circuit.coeffs[circuit.special];
  ExtQ bound = ExtQ::of(0);
  for (std::size_t i = 0; i < circuit.indices.size(); ++i) {
    if (static_cast<int>(i) == circuit.special) continue;
    Rational w = -circuit.coeffs[i] / cj;
    bound = ext_add(bound, ext_scale(w, a[circuit.indices[i]]));
  }
  return bound;
}

}  // namespace

bool star_valid(const StarConfig& config, const StarElement& a) {
  if (!star_in_range(config, a)) return false;
  for (const Circuit& circuit : config.circuits()) {
    if (!circuit.flagged) continue;
    if (!(a[circuit.indices[circuit.special]] <= circuit_bound(circuit, a))) {
      return false;
    }
  }
  return true;
}

StarElement star_closure(const StarConfig& config, StarElement a) {
  if (!star_in_range(config, a)) {
    throw std::invalid_argument("star_closure: components must be in [1, inf]");
  }
  long flagged = 0;
  for (const Circuit& c : config.circuits()) flagged += c.flagged ? 1 : 0;
  const long cap = flagged * static_cast<long>(config.rays().size()) * 16;
  long repairs = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Circuit& circuit : config.circuits()) {
      if (!circuit.flagged) continue;
      int j = circuit.indices[circuit.special];
      ExtQ bound = circuit_bound(circuit, a);
      if (!(a[j] <= bound)) {
        a[j] = bound;
        changed = true;
        if (++repairs > cap) {
          throw std::runtime_error(
              "star_closure: repair iteration cap exceeded (" +
              std::to_string(cap) + ") — possible non-convergent config");
        }
      }
    }
  }
  return a;
}

StarElement star_meet(const StarConfig& config, const StarElement& u,
                      const StarElement& v) {
  StarElement w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = ext_max(u[i], v[i]);
  (void)config;
  return w;
}

StarElement star_join(const StarConfig& config, const StarElement& u,
                      const StarElement& v) {
  StarElement w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = ext_min(u[i], v[i]);
  return star_closure(config, std::move(w));
}

bool star_leq(const StarElement& u, const StarElement& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(v[i] <= u[i])) return false;
  }
  return true;
}

std::string format_star(const StarElement& a) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out << ",";
    out << format_ext(a[i]);
  }
  out << "]";
  return out.str();
}

namespace {

VecQ ray2(long x, long y) {
  VecQ v(2);
  v(0) = x;
  v(1) = y;
  return v;
}

}  // namespace

StarConfig hexagon_config() {
  return StarConfig::build(2, {ray2(1, 0), ray2(1, 1), ray2(0, 1),
                               ray2(-1, 0), ray2(-1, -1), ray2(0, -1)});
}

StarConfig octagon_config() {
  return StarConfig::build(
      2, {ray2(2, 1), ray2(1, 2), ray2(-1, 2), ray2(-2, 1), ray2(-2, -1),
          ray2(-1, -2), ray2(1, -2), ray2(2, -1)});
}

StarConfig chain_config() {
  return StarConfig::build(2,
                           {ray2(0, 3), ray2(1, 2), ray2(2, 1), ray2(3, 0)});
}

StarElement snow_to_hexagon(const SnowflakeElement& u) {
  return {u[0], u[1], u[2], u[0], u[1], u[2]};
}

ChainReport ascending_chain_experiment(int steps) {
  if (steps < 1) {
    throw std::invalid_argument("ascending_chain_experiment: steps >= 1");
  }
  StarConfig config = chain_config();
  ExtQ one = ExtQ::of(1), two = ExtQ::of(2), inf = ExtQ::inf();
  StarElement x1 = {one, two, inf, inf};
  StarElement y = {inf, one, one, inf};
  StarElement x2 = {inf, inf, two, one};

  ChainReport report;
  report.all_valid =
      star_valid(config, x1) && star_valid(config, y) &&
      star_valid(config, x2);
  StarElement c = star_meet(config, x1, y);
  report.all_valid = report.all_valid && star_valid(config, c);
  report.elements.push_back(c);
  report.strictly_ascending = true;
  for (int k = 1; k <= steps; ++k) {
    const StarElement& other = (k % 2 == 1) ? x2 : x1;
    StarElement next =
        star_meet(config, star_join(config, c, other), y);
    report.all_valid = report.all_valid && star_valid(config, next);
    if (!(star_leq(c, next) && !(c == next))) {
      report.strictly_ascending = false;
    }
    c = std::move(next);
    report.elements.push_back(c);
  }
  return report;
}

OctagonReport octagon_exploration(long max_elements) {
  if (max_elements < 1) {
    throw std::invalid_argument("octagon_exploration: max_elements >= 1");
  }
  StarConfig config = octagon_config();
  const int m = static_cast<int>(config.rays().size());

  std::set<StarElement, StarLess> seen;
  std::vector<StarElement> work;
  for (int d = 0; d < 4; ++d) {
    StarElement g(m, ExtQ::inf());
    g[d] = ExtQ::of(1);
    g[d + 4] = ExtQ::of(1);
    g = star_closure(config, std::move(g));
    if (seen.insert(g).second) work.push_back(g);
  }

  OctagonReport report;
  for (std::size_t next = 0; next < work.size(); ++next) {
    if (static_cast<long>(work.size()) >= max_elements) {
      report.reached_cap = true;
      break;
    }
    StarElement a = work[next];
    for (std::size_t i = 0; i <= next; ++i) {
      for (StarElement c : {star_meet(config, a, work[i]),
                            star_join(config, a, work[i])}) {
        if (static_cast<long>(work.size()) >= max_elements) {
          report.reached_cap = true;
          break;
        }
        if (seen.insert(c).second) work.push_back(std::move(c));
      }
      if (report.reached_cap) break;
    }
    if (report.reached_cap) break;
  }
  report.element_count = static_cast<long>(work.size());

  // Height of each element: longest chain strictly below it.  Elements
  // are distinct (set-deduped), so the comparison needs no equality test.
  const int n = static_cast<int>(work.size());
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      below[i][j] = i != j && star_leq(work[j], work[i]);
    }
  }
  std::vector<int> height(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (below[i][j] && height[i] < height[j] + 1) {
          height[i] = height[j] + 1;
          changed = true;
        }
      }
    }
  }
  std::map<int, int> level_sizes;
  for (int i = 0; i < n; ++i) {
    report.longest_chain = std::max(report.longest_chain, height[i] + 1);
    level_sizes[height[i]]++;
  }
  for (const auto& [level, count] : level_sizes) {
    report.largest_antichain = std::max(report.largest_antichain, count);
  }
  return report;
}

}  // namespace convlat
