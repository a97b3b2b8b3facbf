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

// Command-line front end.  Every command prints a JSON report on stdout
// (and to --out when given); diagnostics go to stderr.  Exit codes:
// 0 = success / expectation met, 1 = expectation mismatch or failing
// gallery entries, 2 = usage or data error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "convlat/check.hpp"
#include "convlat/closure_system.hpp"
#include "convlat/convex_lattices.hpp"
#include "convlat/finite_lattice.hpp"
#include "convlat/gallery.hpp"
#include "convlat/jsonio.hpp"
#include "convlat/polytope.hpp"
#include "convlat/relconv.hpp"
#include "convlat/starlat.hpp"
#include "convlat/term.hpp"

namespace {

using namespace convlat;
using nlohmann::json;

// ---------------------------------------------------------------------
// Small shared helpers.

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Prints the report on stdout and mirrors it into --out when set.
void emit(const std::string& report, const std::string& out_path) {
  std::cout << report << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << report << "\n";
  }
}

using Timing = std::optional<std::pair<std::int64_t, double>>;

/// Wall-clock timing attachment, opt-in: reports stay byte-identical
/// across runs unless --timing is requested.
class Stopwatch {
 public:
  Timing sample(bool enabled) const {
    if (!enabled) return std::nullopt;
    auto now = std::chrono::system_clock::now();
    std::int64_t unix_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            now.time_since_epoch())
            .count();
    double elapsed =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start_)
            .count();
    return std::make_pair(unix_ms, elapsed);
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

bool numeric(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// ---------------------------------------------------------------------
// Identity and lattice resolution.

/// Builtin identity names "D:n", "Dop:n", "radon:n", "wrapped-D:n" (and
/// the wrapped variants); anything else is read as a DSL file.
Identity resolve_identity(const std::string& spec) {
  auto colon = spec.rfind(':');
  if (colon != std::string::npos && numeric(spec.substr(colon + 1))) {
    const std::string base = spec.substr(0, colon);
    const int n = std::stoi(spec.substr(colon + 1));
    if (base == "D") return build_Dn(n);
    if (base == "Dop") return build_Dn_op(n);
    if (base == "radon") return build_radon_identity(n);
    if (base == "wrapped-D") return build_wrapped_Dn(n);
    if (base == "wrapped-Dop") return build_wrapped_Dn_op(n);
    if (base == "wrapped-D-pairs") return build_wrapped_Dn_pairs(n);
    if (base == "wrapped-D-covers") return build_wrapped_Dn_covers(n);
  }
  return parse_identity(slurp(spec));
}

/// Lattice selectors: "conv:<n>", "pointed:<n>", "relconv:<path>",
/// "relconv-pointed:<path>:<point-index>".
std::shared_ptr<const LatticeHandle> make_lattice(
    const std::string& selector) {
  auto dim_of = [&](const std::string& tail) {
    if (!numeric(tail)) {
      throw std::invalid_argument("lattice selector needs a numeric "
                                  "dimension: " +
                                  selector);
    }
    int n = std::stoi(tail);
    if (n < 1 || n > 6) {
      throw std::invalid_argument("lattice dimension out of range 1..6: " +
                                  selector);
    }
    return n;
  };
  if (selector.rfind("conv:", 0) == 0) {
    return std::make_shared<ConvLattice>(dim_of(selector.substr(5)));
  }
  if (selector.rfind("pointed:", 0) == 0) {
    return std::make_shared<PointedConvLattice>(dim_of(selector.substr(8)));
  }
  if (selector.rfind("relconv-pointed:", 0) == 0) {
    const std::string rest = selector.substr(16);
    auto colon = rest.rfind(':');
    if (colon == std::string::npos || !numeric(rest.substr(colon + 1))) {
      throw std::invalid_argument(
          "relconv-pointed selector needs <path>:<point-index>");
    }
    GroundSet ground = parse_ground_json(slurp(rest.substr(0, colon)));
    return std::make_shared<RelConvLattice>(std::move(ground), selector,
                                            std::stoi(rest.substr(colon + 1)));
  }
  if (selector.rfind("relconv:", 0) == 0) {
    GroundSet ground = parse_ground_json(slurp(selector.substr(8)));
    return std::make_shared<RelConvLattice>(std::move(ground), selector, -1);
  }
  throw std::invalid_argument("unknown lattice selector: " + selector);
}

/// Assignment file {"lattice": selector, "vars": {name: element, ...}};
/// the declared lattice must match --lattice, and the variables must
/// cover the identity's free variables exactly.
Assignment load_assignment(const std::string& path,
                           const std::string& selector,
                           const LatticeHandle& lat, const Identity& id) {
  json j = json::parse(slurp(path), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw std::invalid_argument("assignment file: malformed JSON");
  }
  if (!j.contains("lattice") || !j["lattice"].is_string()) {
    throw std::invalid_argument("assignment file: missing \"lattice\"");
  }
  if (j["lattice"].get<std::string>() != selector) {
    throw std::invalid_argument(
        "assignment file targets lattice \"" +
        j["lattice"].get<std::string>() + "\" but --lattice is \"" +
        selector + "\"");
  }
  if (!j.contains("vars") || !j["vars"].is_object()) {
    throw std::invalid_argument("assignment file: missing \"vars\" object");
  }
  Assignment assignment;
  for (const auto& [name, value] : j["vars"].items()) {
    try {
      assignment[name] = lat.elem_from_json(value.dump());
    } catch (const std::exception& e) {
      throw std::invalid_argument("assignment file, variable \"" + name +
                                  "\": " + e.what());
    }
  }
  for (const std::string& var : id.free_vars) {
    if (!assignment.count(var)) {
      throw std::invalid_argument("assignment file: missing variable \"" +
                                  var + "\"");
    }
  }
  for (const auto& [name, elem] : assignment) {
    (void)elem;
    if (std::find(id.free_vars.begin(), id.free_vars.end(), name) ==
        id.free_vars.end()) {
      throw std::invalid_argument(
          "assignment file: variable \"" + name +
          "\" does not occur in the identity");
    }
  }
  return assignment;
}

/// Resolves a gallery entry from a family name and optional parameter;
/// accepts "dn_fail_conv" + --n 2 as well as the full "dn_fail_conv:2".
GalleryEntry gallery_entry_by(std::string base, std::optional<int> n) {
  auto colon = base.rfind(':');
  if (colon != std::string::npos && numeric(base.substr(colon + 1))) {
    n = std::stoi(base.substr(colon + 1));
    base = base.substr(0, colon);
  }
  auto need = [&]() {
    if (!n) {
      throw std::invalid_argument("gallery entry \"" + base +
                                  "\" needs a parameter (--n)");
    }
    return *n;
  };
  if (base == "dn_fail_conv") return dn_fail_conv(need());
  if (base == "wrapped_dn_fail_pointed") return wrapped_dn_fail_pointed(need());
  if (base == "dnop_fail_conv") return dnop_fail_conv(need());
  if (base == "wrapped_dnop_fail_pointed") {
    return wrapped_dnop_fail_pointed(need());
  }
  if (base == "radon_fail") return radon_fail(need());
  if (base == "relconv_d1op_fail") return relconv_d1op_fail();
  if (base == "relconv_wrapped_fail") return relconv_wrapped_fail(need());
  throw std::invalid_argument("unknown gallery entry: " + base);
}

int expectation_exit(const std::string& expect, const std::string& observed) {
  if (expect.empty()) return 0;
  return expect == observed ? 0 : 1;
}

// ---------------------------------------------------------------------
// Generic meet/join expression evaluator for element literals, shared by
// `snowflake op` and `star op`.  Grammar mirrors the identity DSL:
//   expr := factor { "|" factor } ; factor := atom { "&" atom }
//   atom := "[" ... "]" | "(" expr ")"
template <typename T>
class ElementExprParser {
 public:
  ElementExprParser(std::string text, std::function<T(std::string)> literal,
                    std::function<T(const T&, const T&)> meet,
                    std::function<T(const T&, const T&)> join)
      : text_(std::move(text)),
        literal_(std::move(literal)),
        meet_(std::move(meet)),
        join_(std::move(join)) {}

  T parse() {
    T value = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw std::invalid_argument("expression: trailing input at byte " +
                                  std::to_string(pos_));
    }
    return value;
  }

 private:
  T expr() {
    T value = factor();
    while (peek() == '|') {
      ++pos_;
      value = join_(value, factor());
    }
    return value;
  }

  T factor() {
    T value = atom();
    while (peek() == '&') {
      ++pos_;
      value = meet_(value, atom());
    }
    return value;
  }

  T atom() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      T value = expr();
      if (peek() != ')') {
        throw std::invalid_argument("expression: expected ')' at byte " +
                                    std::to_string(pos_));
      }
      ++pos_;
      return value;
    }
    if (peek() == '[') {
      auto close = text_.find(']', pos_);
      if (close == std::string::npos) {
        throw std::invalid_argument("expression: unterminated '[' at byte " +
                                    std::to_string(pos_));
      }
      std::string lit = text_.substr(pos_, close - pos_ + 1);
      pos_ = close + 1;
      return literal_(lit);
    }
    throw std::invalid_argument("expression: expected an element at byte " +
                                std::to_string(pos_));
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  std::string text_;
  std::function<T(std::string)> literal_;
  std::function<T(const T&, const T&)> meet_;
  std::function<T(const T&, const T&)> join_;
  std::size_t pos_ = 0;
};

/// Splits "[a1,a2,...]" into trimmed entry strings.
std::vector<std::string> split_literal(const std::string& lit) {
  if (lit.size() < 2 || lit.front() != '[' || lit.back() != ']') {
    throw std::invalid_argument("element literal must be bracketed: " + lit);
  }
  std::vector<std::string> parts;
  std::string current;
  for (std::size_t i = 1; i + 1 < lit.size(); ++i) {
    if (lit[i] == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += lit[i];
    }
  }
  parts.push_back(current);
  for (std::string& p : parts) {
    auto b = p.find_first_not_of(" \t");
    auto e = p.find_last_not_of(" \t");
    p = (b == std::string::npos) ? "" : p.substr(b, e - b + 1);
  }
  return parts;
}

SnowflakeElement parse_snowflake_literal(const std::string& lit) {
  std::vector<std::string> parts = split_literal(lit);
  if (parts.size() != 3) {
    throw std::invalid_argument("snowflake element needs 3 components: " +
                                lit);
  }
  return make_snowflake(parse_ext(parts[0]), parse_ext(parts[1]),
                        parse_ext(parts[2]));
}

StarElement parse_star_literal(const StarConfig& config,
                               const std::string& lit) {
  std::vector<std::string> parts = split_literal(lit);
  if (static_cast<int>(parts.size()) !=
      static_cast<int>(config.rays().size())) {
    throw std::invalid_argument(
        "star element needs one component per ray: " + lit);
  }
  StarElement a;
  for (const std::string& p : parts) a.push_back(parse_ext(p));
  if (!star_in_range(config, a)) {
    throw std::invalid_argument(
        "star element components must lie in [1, inf]: " + lit);
  }
  return a;
}

StarConfig resolve_star_config(const std::string& spec) {
  if (spec == "hexagon") return hexagon_config();
  if (spec == "octagon") return octagon_config();
  if (spec == "chain") return chain_config();
  return parse_star_config_json(slurp(spec));
}

std::vector<int> parse_index_list(const std::string& text, int bound) {
  std::vector<int> out;
  std::string current;
  auto flush = [&]() {
    if (current.empty()) {
      throw std::invalid_argument("index list: empty entry");
    }
    if (!numeric(current)) {
      throw std::invalid_argument("index list: not a number: " + current);
    }
    int i = std::stoi(current);
    if (i >= bound) {
      throw std::invalid_argument("index list: index out of range: " +
                                  current);
    }
    out.push_back(i);
    current.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != ' ') {
      current += c;
    }
  }
  flush();
  return out;
}

json indices_to_json(const std::vector<int>& v) {
  json arr = json::array();
  for (int i : v) arr.push_back(i);
  return arr;
}

json point_json(const VecQ& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    arr.push_back(format_rational(v(i)));
  }
  return arr;
}

FiniteLattice resolve_finite_lattice(int equiv_size,
                                     const std::string& path,
                                     std::string* label) {
  if (equiv_size > 0 && !path.empty()) {
    throw std::invalid_argument("give either --equiv or --lattice, not both");
  }
  if (equiv_size > 0) {
    *label = "equiv:" + std::to_string(equiv_size);
    return partition_lattice(equiv_size);
  }
  if (!path.empty()) {
    *label = path;
    return parse_finite_lattice_json(slurp(path));
  }
  throw std::invalid_argument("need --equiv <m> or --lattice <file>");
}

// ---------------------------------------------------------------------
// Command handlers.  Each returns the process exit code.

struct CheckArgs {
  std::string lattice, identity, assignment, gallery, expect, out;
  int n = -1;
  bool timing = false;
};

int cmd_check(const CheckArgs& a) {
  Stopwatch watch;
  std::shared_ptr<const LatticeHandle> lat;
  Identity id;
  Assignment assignment;
  if (!a.gallery.empty()) {
    std::optional<int> n;
    if (a.n >= 0) {
      n = a.n;
    } else if (!a.lattice.empty()) {
      auto colon = a.lattice.rfind(':');
      if (colon != std::string::npos &&
          numeric(a.lattice.substr(colon + 1))) {
        n = std::stoi(a.lattice.substr(colon + 1));
      }
    }
    GalleryEntry entry = gallery_entry_by(a.gallery, n);
    if (!a.lattice.empty() && entry.lattice->name() != a.lattice) {
      throw std::invalid_argument(
          "--lattice " + a.lattice + " does not match gallery entry's " +
          entry.lattice->name());
    }
    if (!a.identity.empty() &&
        print_identity(resolve_identity(a.identity)) !=
            print_identity(entry.identity)) {
      throw std::invalid_argument(
          "--identity does not match the gallery entry's identity " +
          print_identity(entry.identity));
    }
    lat = entry.lattice;
    id = entry.identity;
    assignment = entry.assignment;
  } else {
    if (a.lattice.empty() || a.identity.empty() || a.assignment.empty()) {
      throw std::invalid_argument(
          "check needs --lattice, --identity, and --assignment "
          "(or --gallery)");
    }
    lat = make_lattice(a.lattice);
    id = resolve_identity(a.identity);
    assignment = load_assignment(a.assignment, a.lattice, *lat, id);
  }
  CheckReport report = check(id, *lat, assignment);
  emit(check_report_to_json(report, watch.sample(a.timing)), a.out);
  return expectation_exit(a.expect, verdict_name(report.verdict));
}

struct FalsifyArgs {
  std::string lattice, identity, expect, out;
  long trials = 1000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int points_per_set = 4;
  long magnitude = 2;
  long den_bound = 4;
  bool include_origin = false;
  bool timing = false;
};

int cmd_falsify(const FalsifyArgs& a) {
  Stopwatch watch;
  if (!a.seed_given) {
    throw std::invalid_argument("falsify needs an explicit --seed");
  }
  auto lat = make_lattice(a.lattice);
  Identity id = resolve_identity(a.identity);
  SamplerConfig config;
  config.points_per_set = a.points_per_set;
  config.magnitude = a.magnitude;
  config.den_bound = a.den_bound;
  config.include_origin = a.include_origin;
  std::optional<CheckReport> found =
      falsify(id, *lat, config, a.trials, a.seed);
  std::string observed = found ? "fails" : "holds";
  if (found) {
    emit(check_report_to_json(*found, watch.sample(a.timing)), a.out);
  } else {
    emit(no_failure_report_json(id, lat->name(), a.trials, a.seed,
                                watch.sample(a.timing)),
         a.out);
  }
  return expectation_exit(a.expect, observed);
}

struct GalleryArgs {
  std::string name, filter, out;
  int n = -1;
  bool timing = false;
};

int cmd_gallery(const GalleryArgs& a) {
  Stopwatch watch;
  std::vector<GalleryResult> results;
  if (a.name == "all") {
    results = run_gallery(a.filter);
  } else if (a.n >= 0 || a.name.find(':') != std::string::npos) {
    std::optional<int> n;
    if (a.n >= 0) n = a.n;
    results.push_back(run_gallery_entry(gallery_entry_by(a.name, n)));
  } else {
    // Family mode: every catalogue entry named "<family>" or
    // "<family>:<k>".
    for (const GalleryEntry& e : all_gallery_entries()) {
      if (e.name == a.name || e.name.rfind(a.name + ":", 0) == 0) {
        results.push_back(run_gallery_entry(e));
      }
    }
    if (results.empty()) {
      throw std::invalid_argument("unknown gallery entry: " + a.name);
    }
  }
  emit(gallery_results_to_json(results, watch.sample(a.timing)), a.out);
  for (const GalleryResult& r : results) {
    if (!r.pass) return 1;
  }
  return 0;
}

int cmd_snowflake_op(const std::string& expr, const std::string& out) {
  ElementExprParser<SnowflakeElement> parser(
      expr, parse_snowflake_literal,
      [](const SnowflakeElement& u, const SnowflakeElement& v) {
        return snow_meet(u, v);
      },
      [](const SnowflakeElement& u, const SnowflakeElement& v) {
        return snow_join(u, v);
      });
  SnowflakeElement result = parser.parse();
  json j;
  j["expr"] = expr;
  j["result"] = format_snowflake(result);
  emit(j.dump(2), out);
  return 0;
}

int cmd_snowflake_generate(int bound, const std::string& out) {
  std::vector<SnowflakeElement> elements = snow_generate(bound);
  std::vector<bool> seen(static_cast<std::size_t>(bound) + 1, false);
  bool integral = true;
  json comps = json::array();
  {
    std::vector<Rational> finite;
    for (const SnowflakeElement& e : elements) {
      for (const ExtQ& a : e) {
        if (a.is_inf) continue;
        if (a.value.get_den() != 1) integral = false;
        finite.push_back(a.value);
      }
    }
    std::sort(finite.begin(), finite.end());
    finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
    for (const Rational& v : finite) {
      comps.push_back(format_rational(v));
      if (v.get_den() == 1 && v >= 1 && v <= bound) {
        seen[v.get_num().get_si()] = true;
      }
    }
  }
  bool covered = true;
  for (int i = 1; i <= bound; ++i) covered = covered && seen[i];
  json j;
  j["bound"] = bound;
  j["count"] = elements.size();
  j["components"] = comps;
  j["all_components_integral"] = integral;
  j["covers_all_integers_to_bound"] = covered;
  emit(j.dump(2), out);
  return 0;
}

int cmd_snowflake_chain(int steps, const std::string& out) {
  std::vector<SnowflakeElement> chain = snow_descending_chain(steps);
  bool strict = true;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    strict = strict && snow_leq(chain[i], chain[i - 1]) &&
             !(chain[i] == chain[i - 1]);
  }
  json j;
  j["steps"] = steps;
  json arr = json::array();
  for (const SnowflakeElement& e : chain) arr.push_back(format_snowflake(e));
  j["elements"] = arr;
  j["strictly_descending"] = strict;
  emit(j.dump(2), out);
  return 0;
}

int cmd_star_circuits(const std::string& config_spec,
                      const std::string& out) {
  StarConfig config = resolve_star_config(config_spec);
  json j;
  j["dim"] = config.dim();
  json rays = json::array();
  for (const VecQ& r : config.rays()) rays.push_back(point_json(r));
  j["rays"] = rays;
  json circuits = json::array();
  for (const Circuit& c : config.circuits()) {
    json e;
    e["indices"] = indices_to_json(c.indices);
    json coeffs = json::array();
    for (const Rational& q : c.coeffs) coeffs.push_back(format_rational(q));
    e["coeffs"] = coeffs;
    e["flagged"] = c.flagged;
    if (c.special >= 0) {
      e["special"] = c.special;
    } else {
      e["special"] = nullptr;
    }
    circuits.push_back(e);
  }
  j["circuits"] = circuits;
  emit(j.dump(2), out);
  return 0;
}

int cmd_star_closure(const std::string& config_spec,
                     const std::string& element, const std::string& out) {
  StarConfig config = resolve_star_config(config_spec);
  std::vector<std::string> parts = split_literal(element);
  if (static_cast<int>(parts.size()) !=
      static_cast<int>(config.rays().size())) {
    throw std::invalid_argument(
        "star element needs one component per ray: " + element);
  }
  StarElement a;
  for (const std::string& p : parts) a.push_back(parse_ext(p));
  if (!star_in_range(config, a)) {
    throw std::invalid_argument(
        "star element components must lie in [1, inf]: " + element);
  }
  StarElement closed = star_closure(config, a);
  json j;
  j["input"] = format_star(a);
  j["result"] = format_star(closed);
  j["valid"] = star_valid(config, closed);
  emit(j.dump(2), out);
  return 0;
}

int cmd_star_op(const std::string& config_spec, const std::string& expr,
                const std::string& out) {
  StarConfig config = resolve_star_config(config_spec);
  ElementExprParser<StarElement> parser(
      expr,
      [&](std::string lit) {
        StarElement a = parse_star_literal(config, lit);
        if (!star_valid(config, a)) {
          throw std::invalid_argument(
              "star element is not relatively convex (use `star closure`): " +
              lit);
        }
        return a;
      },
      [&](const StarElement& u, const StarElement& v) {
        return star_meet(config, u, v);
      },
      [&](const StarElement& u, const StarElement& v) {
        return star_join(config, u, v);
      });
  StarElement result = parser.parse();
  json j;
  j["expr"] = expr;
  j["result"] = format_star(result);
  emit(j.dump(2), out);
  return 0;
}

int cmd_star_ascend(int steps, const std::string& out) {
  ChainReport report = ascending_chain_experiment(steps);
  json j;
  j["steps"] = steps;
  json arr = json::array();
  for (const StarElement& e : report.elements) {
    arr.push_back(format_star(e));
  }
  j["elements"] = arr;
  j["strictly_ascending"] = report.strictly_ascending;
  j["all_valid"] = report.all_valid;
  emit(j.dump(2), out);
  return 0;
}

int cmd_star_octagon(long max_elements, const std::string& out) {
  OctagonReport report = octagon_exploration(max_elements);
  json j;
  j["max_elements"] = max_elements;
  j["element_count"] = report.element_count;
  j["longest_chain"] = report.longest_chain;
  j["largest_antichain"] = report.largest_antichain;
  j["reached_cap"] = report.reached_cap;
  emit(j.dump(2), out);
  return 0;
}

int cmd_relconv_closure(const std::string& ground_path,
                        const std::string& indices,
                        const std::string& out) {
  GroundSet ground = parse_ground_json(slurp(ground_path));
  std::vector<int> input =
      parse_index_list(indices, static_cast<int>(ground.points.size()));
  std::vector<int> closed = rel_closure(ground, input);
  json j;
  j["input"] = indices_to_json(input);
  j["closed"] = indices_to_json(closed);
  json pts = json::array();
  for (int i : closed) pts.push_back(point_json(ground.points[i]));
  j["points"] = pts;
  emit(j.dump(2), out);
  return 0;
}

int cmd_relconv_closed_sets(const std::string& ground_path,
                            const std::string& out) {
  GroundSet ground = parse_ground_json(slurp(ground_path));
  std::vector<std::vector<int>> sets = enumerate_closed_sets(ground);
  json j;
  j["count"] = sets.size();
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(indices_to_json(s));
  j["closed_sets"] = arr;
  emit(j.dump(2), out);
  return 0;
}

int cmd_abstract_equiv(int size, bool verify_iso, const std::string& out) {
  json j;
  j["size"] = size;
  if (verify_iso) {
    IsoReport report = equiv_subspace_isomorphism(size);
    j["elements"] = report.partition_count;
    j["subspace_elements"] = report.subspace_count;
    j["maps_mutually_inverse"] = report.maps_mutually_inverse;
    j["order_preserved"] = report.order_preserved;
    j["tables_transported"] = report.tables_transported;
    j["isomorphic"] = report.isomorphic;
  } else {
    j["elements"] = partition_lattice(size).size();
  }
  emit(j.dump(2), out);
  return 0;
}

int cmd_abstract_mk(int k, int equiv_size, const std::string& lattice_path,
                    const std::string& out) {
  std::string label;
  FiniteLattice lattice =
      resolve_finite_lattice(equiv_size, lattice_path, &label);
  std::optional<MkEmbedding> found = find_Mk(lattice, k);
  json j;
  j["lattice"] = label;
  j["k"] = k;
  j["found"] = found.has_value();
  if (found) {
    j["bottom"] = lattice.names()[found->bottom];
    j["top"] = lattice.names()[found->top];
    json mids = json::array();
    for (int m : found->middles) mids.push_back(lattice.names()[m]);
    j["middles"] = mids;
  }
  emit(j.dump(2), out);
  return 0;
}

int cmd_abstract_laws(int equiv_size, const std::string& lattice_path,
                      int n, const std::string& out) {
  std::string label;
  FiniteLattice lattice =
      resolve_finite_lattice(equiv_size, lattice_path, &label);
  json j;
  j["lattice"] = label;
  j["n"] = n;
  auto witness_json = [&](const std::optional<TupleWitness>& w) -> json {
    if (!w) return nullptr;
    json e;
    e["x"] = lattice.names()[w->x];
    json ys = json::array();
    for (int y : w->ys) ys.push_back(lattice.names()[y]);
    e["ys"] = ys;
    return e;
  };
  std::optional<TupleWitness> njsd = njsd_violation(lattice, n);
  std::optional<TupleWitness> nmsd = nmsd_violation(lattice, n);
  std::optional<TupleWitness> dn = dn_violation(lattice, n);
  j["njsd"] = !njsd.has_value();
  j["njsd_violation"] = witness_json(njsd);
  j["nmsd"] = !nmsd.has_value();
  j["nmsd_violation"] = witness_json(nmsd);
  j["dn"] = !dn.has_value();
  j["dn_violation"] = witness_json(dn);
  emit(j.dump(2), out);
  return 0;
}

int cmd_abstract_closure_law(const std::string& system_path, int n,
                             const std::string& out) {
  ClosureSystem system = parse_closure_system_json(slurp(system_path));
  ClosureLawReport report = check_caratheodory_distributivity(system, n);
  json j;
  j["system"] = json::parse(closure_system_to_json(system));
  j["n"] = report.n;
  j["checked"] = report.checked;
  if (!report.checked) {
    j["skipped_reason"] = report.skipped_reason;
  } else {
    j["dn_holds"] = report.dn_holds;
    j["caratheodory_holds"] = report.caratheodory_holds;
    j["biconditional_holds"] = report.biconditional_holds;
  }
  emit(j.dump(2), out);
  return 0;
}

int cmd_dual(const std::string& path, const std::string& out) {
  Polytope p = parse_polytope_json(slurp(path));
  emit(polytope_to_json(polar_dual(p)), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-rational laboratory for lattices of convex sets"};
  app.require_subcommand(1);

  // ---- check ----
  CheckArgs check_args;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "Check one identity on one explicit assignment");
  check_cmd->add_option("--lattice", check_args.lattice,
                        "Lattice selector (conv:<n>, pointed:<n>, "
                        "relconv:<path>, relconv-pointed:<path>:<idx>)");
  check_cmd->add_option("--identity", check_args.identity,
                        "Builtin name (D:2, Dop:2, radon:2, wrapped-D:2, "
                        "...) or DSL file");
  check_cmd->add_option("--assignment", check_args.assignment,
                        "Assignment JSON file");
  check_cmd->add_option("--gallery", check_args.gallery,
                        "Use a gallery entry's assignment instead");
  check_cmd->add_option("--n", check_args.n, "Gallery entry parameter");
  check_cmd->add_option("--expect", check_args.expect,
                        "holds|fails|vacuous: exit 1 on mismatch");
  check_cmd->add_option("--out", check_args.out, "Also write report here");
  check_cmd->add_flag("--timing", check_args.timing,
                      "Attach a timing object to the report");

  // ---- falsify ----
  FalsifyArgs falsify_args;
  CLI::App* falsify_cmd = app.add_subcommand(
      "falsify", "Seeded random search for a failing assignment");
  falsify_cmd->add_option("--lattice", falsify_args.lattice,
                          "Lattice selector")
      ->required();
  falsify_cmd->add_option("--identity", falsify_args.identity,
                          "Builtin name or DSL file")
      ->required();
  falsify_cmd->add_option("--trials", falsify_args.trials, "Trial count");
  CLI::Option* seed_opt =
      falsify_cmd->add_option("--seed", falsify_args.seed, "Master seed");
  falsify_cmd->add_option("--points-per-set", falsify_args.points_per_set,
                          "Sampler: generators per element");
  falsify_cmd->add_option("--magnitude", falsify_args.magnitude,
                          "Sampler: coordinate magnitude bound");
  falsify_cmd->add_option("--den-bound", falsify_args.den_bound,
                          "Sampler: denominator bound");
  falsify_cmd->add_flag("--include-origin", falsify_args.include_origin,
                        "Sampler: force the origin into every element");
  falsify_cmd->add_option("--expect", falsify_args.expect,
                          "holds|fails: exit 1 on mismatch");
  falsify_cmd->add_option("--out", falsify_args.out,
                          "Also write report here");
  falsify_cmd->add_flag("--timing", falsify_args.timing,
                        "Attach a timing object to the report");

  // ---- gallery ----
  GalleryArgs gallery_args;
  CLI::App* gallery_cmd = app.add_subcommand(
      "gallery", "Run counterexample gallery entries");
  gallery_cmd
      ->add_option("name", gallery_args.name,
                   "Entry, family, or \"all\"")
      ->required();
  gallery_cmd->add_option("--n", gallery_args.n, "Entry parameter");
  gallery_cmd->add_option("--filter", gallery_args.filter,
                          "Substring filter for \"all\"");
  gallery_cmd->add_option("--out", gallery_args.out,
                          "Also write report here");
  gallery_cmd->add_flag("--timing", gallery_args.timing,
                        "Attach a timing object to the report");

  // ---- snowflake ----
  CLI::App* snow_cmd = app.add_subcommand(
      "snowflake", "Three-segment star arithmetic model");
  snow_cmd->require_subcommand(1);
  std::string snow_expr, snow_out;
  CLI::App* snow_op = snow_cmd->add_subcommand(
      "op", "Evaluate a meet/join expression over [a1,a2,a3] literals");
  snow_op->add_option("expr", snow_expr, "Expression, e.g. \"[1,inf,inf] | "
                                         "[inf,1,inf]\"")
      ->required();
  snow_op->add_option("--out", snow_out, "Also write report here");
  int snow_bound = 6;
  std::string snow_gen_out;
  CLI::App* snow_gen = snow_cmd->add_subcommand(
      "generate", "Close the three generators under meet and join");
  snow_gen->add_option("--bound", snow_bound,
                       "Discard finite components above this bound");
  snow_gen->add_option("--out", snow_gen_out, "Also write report here");
  int snow_steps = 10;
  std::string snow_chain_out;
  CLI::App* snow_chain = snow_cmd->add_subcommand(
      "chain", "Strictly descending chain from the first generator");
  snow_chain->add_option("--steps", snow_steps, "Chain length");
  snow_chain->add_option("--out", snow_chain_out, "Also write report here");

  // ---- star ----
  CLI::App* star_cmd = app.add_subcommand(
      "star", "General ray-configuration star model");
  star_cmd->require_subcommand(1);
  std::string star_config_spec = "hexagon";
  std::string star_element, star_expr, star_out;
  CLI::App* star_circ = star_cmd->add_subcommand(
      "circuits", "List the configuration's circuits");
  star_circ->add_option("--config", star_config_spec,
                        "Config file or builtin hexagon|octagon|chain");
  star_circ->add_option("--out", star_out, "Also write report here");
  std::string star_clo_config = "hexagon", star_clo_out;
  CLI::App* star_clo = star_cmd->add_subcommand(
      "closure", "Relative-convexity closure of raw per-ray lengths");
  star_clo->add_option("--config", star_clo_config,
                       "Config file or builtin name");
  star_clo->add_option("--element", star_element,
                       "Element literal [a1,...,am]")
      ->required();
  star_clo->add_option("--out", star_clo_out, "Also write report here");
  std::string star_op_config = "hexagon", star_op_out;
  CLI::App* star_op = star_cmd->add_subcommand(
      "op", "Evaluate a meet/join expression over element literals");
  star_op->add_option("--config", star_op_config,
                      "Config file or builtin name");
  star_op->add_option("expr", star_expr, "Expression")->required();
  star_op->add_option("--out", star_op_out, "Also write report here");
  int star_steps = 10;
  std::string star_asc_out;
  CLI::App* star_asc = star_cmd->add_subcommand(
      "ascend", "Strictly ascending chain experiment on the 4-ray config");
  star_asc->add_option("--steps", star_steps, "Ascent count");
  star_asc->add_option("--out", star_asc_out, "Also write report here");
  long star_max = 200;
  std::string star_oct_out;
  CLI::App* star_oct = star_cmd->add_subcommand(
      "octagon", "Breadth-first growth report on the octagon diameters");
  star_oct->add_option("--max", star_max, "Element cap");
  star_oct->add_option("--out", star_oct_out, "Also write report here");

  // ---- relconv ----
  CLI::App* relconv_cmd = app.add_subcommand(
      "relconv", "Relative convexity over a finite ground set");
  relconv_cmd->require_subcommand(1);
  std::string rc_ground, rc_indices, rc_out;
  CLI::App* rc_closure = relconv_cmd->add_subcommand(
      "closure", "Close an index set relative to the ground set");
  rc_closure->add_option("--ground", rc_ground, "Ground-set JSON file")
      ->required();
  rc_closure->add_option("--indices", rc_indices,
                         "Comma-separated point indices")
      ->required();
  rc_closure->add_option("--out", rc_out, "Also write report here");
  std::string rc_cs_ground, rc_cs_out;
  CLI::App* rc_closed = relconv_cmd->add_subcommand(
      "closed-sets", "Enumerate all relatively convex subsets");
  rc_closed->add_option("--ground", rc_cs_ground, "Ground-set JSON file")
      ->required();
  rc_closed->add_option("--out", rc_cs_out, "Also write report here");

  // ---- abstract ----
  CLI::App* abstract_cmd = app.add_subcommand(
      "abstract", "Finite abstract lattices and closure systems");
  abstract_cmd->require_subcommand(1);
  int eq_size = 4;
  bool eq_verify = false;
  std::string eq_out;
  CLI::App* ab_equiv = abstract_cmd->add_subcommand(
      "equiv", "Equivalence-relation lattice on an m-element set");
  ab_equiv->add_option("--size", eq_size, "Base-set size m")->required();
  ab_equiv->add_flag("--verify-iso", eq_verify,
                     "Verify the difference-subspace isomorphism");
  ab_equiv->add_option("--out", eq_out, "Also write report here");
  int mk_k = 3, mk_equiv = 0;
  std::string mk_lattice, mk_out;
  CLI::App* ab_mk = abstract_cmd->add_subcommand(
      "mk", "Search for a k-atom diamond sublattice");
  ab_mk->add_option("--k", mk_k, "Number of atoms (>= 3)");
  ab_mk->add_option("--equiv", mk_equiv, "Use equiv lattice of this size");
  ab_mk->add_option("--lattice", mk_lattice, "Finite-lattice JSON file");
  ab_mk->add_option("--out", mk_out, "Also write report here");
  int laws_equiv = 0, laws_n = 1;
  std::string laws_lattice, laws_out;
  CLI::App* ab_laws = abstract_cmd->add_subcommand(
      "laws", "Exhaustive n-ary semidistributivity / distribution checks");
  ab_laws->add_option("--equiv", laws_equiv, "Use equiv lattice of size m");
  ab_laws->add_option("--lattice", laws_lattice,
                      "Finite-lattice JSON file");
  ab_laws->add_option("--n", laws_n, "Law arity parameter");
  ab_laws->add_option("--out", laws_out, "Also write report here");
  std::string cl_system, cl_out;
  int cl_n = 1;
  CLI::App* ab_closure = abstract_cmd->add_subcommand(
      "closure-law", "Distribution law vs. bounded-generation closure "
                     "property on a closure system");
  ab_closure->add_option("--system", cl_system, "Closure-system JSON file")
      ->required();
  ab_closure->add_option("--n", cl_n, "Law arity parameter");
  ab_closure->add_option("--out", cl_out, "Also write report here");

  // ---- dual ----
  std::string dual_file, dual_out;
  CLI::App* dual_cmd = app.add_subcommand(
      "dual", "Polar dual of a polytope file");
  dual_cmd->add_option("file", dual_file, "Polytope JSON file")->required();
  dual_cmd->add_option("--out", dual_out, "Also write report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every real usage error is exit 2 by contract.
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(check_args);
    if (falsify_cmd->parsed()) {
      falsify_args.seed_given = seed_opt->count() > 0;
      return cmd_falsify(falsify_args);
    }
    if (gallery_cmd->parsed()) return cmd_gallery(gallery_args);
    if (snow_cmd->parsed()) {
      if (snow_op->parsed()) return cmd_snowflake_op(snow_expr, snow_out);
      if (snow_gen->parsed()) {
        return cmd_snowflake_generate(snow_bound, snow_gen_out);
      }
      if (snow_chain->parsed()) {
        return cmd_snowflake_chain(snow_steps, snow_chain_out);
      }
    }
    if (star_cmd->parsed()) {
      if (star_circ->parsed()) {
        return cmd_star_circuits(star_config_spec, star_out);
      }
      if (star_clo->parsed()) {
        return cmd_star_closure(star_clo_config, star_element, star_clo_out);
      }
      if (star_op->parsed()) {
        return cmd_star_op(star_op_config, star_expr, star_op_out);
      }
      if (star_asc->parsed()) return cmd_star_ascend(star_steps, star_asc_out);
      if (star_oct->parsed()) return cmd_star_octagon(star_max, star_oct_out);
    }
    if (relconv_cmd->parsed()) {
      if (rc_closure->parsed()) {
        return cmd_relconv_closure(rc_ground, rc_indices, rc_out);
      }
      if (rc_closed->parsed()) {
        return cmd_relconv_closed_sets(rc_cs_ground, rc_cs_out);
      }
    }
    if (abstract_cmd->parsed()) {
      if (ab_equiv->parsed()) {
        return cmd_abstract_equiv(eq_size, eq_verify, eq_out);
      }
      if (ab_mk->parsed()) {
        return cmd_abstract_mk(mk_k, mk_equiv, mk_lattice, mk_out);
      }
      if (ab_laws->parsed()) {
        return cmd_abstract_laws(laws_equiv, laws_lattice, laws_n, laws_out);
      }
      if (ab_closure->parsed()) {
        return cmd_abstract_closure_law(cl_system, cl_n, cl_out);
      }
    }
    if (dual_cmd->parsed()) return cmd_dual(dual_file, dual_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (at byte " << e.position
              << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command dispatched\n";
  return 2;
}
