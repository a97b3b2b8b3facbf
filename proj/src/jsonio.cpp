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

#include "convlat/jsonio.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace convlat {
namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument("malformed JSON input");
  }
  return j;
}

VecQ point_from_json(const json& arr, int dim, const std::string& what) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim) {
    throw std::invalid_argument(what + ": point has wrong dimension");
  }
  VecQ v(dim);
  for (int i = 0; i < dim; ++i) {
    if (!arr[i].is_string()) {
      throw std::invalid_argument(what + ", coordinate " + std::to_string(i) +
                                  ": coordinates must be rational strings");
    }
    try {
      v(i) = parse_rational(arr[i].get<std::string>());
    } catch (const std::exception& e) {
      throw std::invalid_argument(what + ", coordinate " + std::to_string(i) +
                                  ": " + e.what());
    }
  }
  return v;
}

json point_to_json(const VecQ& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    arr.push_back(format_rational(v(i)));
  }
  return arr;
}

std::vector<VecQ> point_list(const json& arr, int dim, const char* what) {
  if (!arr.is_array()) {
    throw std::invalid_argument(std::string(what) + ": expected an array");
  }
  std::vector<VecQ> out;
  for (const json& p : arr) {
    out.push_back(point_from_json(
        p, dim,
        std::string(what) + ": point " + std::to_string(out.size())));
  }
  return out;
}

int dim_field(const json& j, const char* what) {
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw std::invalid_argument(std::string(what) +
                                ": missing integer \"dim\"");
  }
  int dim = j["dim"].get<int>();
  if (dim < 0) {
    throw std::invalid_argument(std::string(what) + ": negative dimension");
  }
  return dim;
}

}  // namespace

Polytope parse_polytope_json(const std::string& text) {
  json j = parse_or_throw(text);
  int dim = dim_field(j, "polytope");
  if (!j.contains("vertices")) {
    throw std::invalid_argument("polytope: missing \"vertices\"");
  }
  return hull(point_list(j["vertices"], dim, "polytope"), dim);
}

std::string polytope_to_json(const Polytope& p) {
  json j;
  j["dim"] = p.dim();
  json verts = json::array();
  for (const VecQ& v : p.vertices()) verts.push_back(point_to_json(v));
  j["vertices"] = verts;
  return j.dump();
}

GroundSet parse_ground_json(const std::string& text) {
  json j = parse_or_throw(text);
  GroundSet g;
  g.dim = dim_field(j, "ground set");
  if (!j.contains("points")) {
    throw std::invalid_argument("ground set: missing \"points\"");
  }
  g.points = point_list(j["points"], g.dim, "ground set");
  return g;
}

std::string ground_to_json(const GroundSet& g) {
  json j;
  j["dim"] = g.dim;
  json pts = json::array();
  for (const VecQ& v : g.points) pts.push_back(point_to_json(v));
  j["points"] = pts;
  return j.dump();
}

std::vector<VecQ> parse_points_json(const std::string& text, int dim) {
  json j = parse_or_throw(text);
  if (!j.contains("points")) {
    throw std::invalid_argument("point list: missing \"points\"");
  }
  return point_list(j["points"], dim, "point list");
}

std::string points_to_json(const std::vector<VecQ>& points) {
  json j;
  json pts = json::array();
  for (const VecQ& v : points) pts.push_back(point_to_json(v));
  j["points"] = pts;
  return j.dump();
}

std::string check_report_to_json(
    const CheckReport& report,
    std::optional<std::pair<std::int64_t, double>> timing) {
  json j;
  j["identity"] = print_identity(report.identity);
  j["lattice"] = report.lattice_name;
  j["verdict"] = verdict_name(report.verdict);
  json vars = json::object();
  for (const auto& [name, fragment] : report.assignment_json) {
    vars[name] = parse_or_throw(fragment);
  }
  j["assignment"] = vars;
  if (report.witness) {
    j["witness"] = point_to_json(*report.witness);
  } else {
    j["witness"] = nullptr;
  }
  if (report.failing_trial >= 0) {
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["failing_trial"] = report.failing_trial;
  }
  if (timing) {
    j["timing"] = {{"unix_ms", timing->first},
                   {"elapsed_ms", timing->second}};
  }
  return j.dump(2);
}

std::string no_failure_report_json(
    const Identity& id, const std::string& lattice_name, long trials,
    std::uint64_t seed,
    std::optional<std::pair<std::int64_t, double>> timing) {
  json j;
  j["identity"] = print_identity(id);
  j["lattice"] = lattice_name;
  j["verdict"] = "no-failure";
  j["trials"] = trials;
  j["seed"] = seed;
  j["failing_trial"] = nullptr;
  if (timing) {
    j["timing"] = {{"unix_ms", timing->first},
                   {"elapsed_ms", timing->second}};
  }
  return j.dump(2);
}

ClosureSystem parse_closure_system_json(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.contains("ground") || !j["ground"].is_array()) {
    throw std::invalid_argument("closure system: missing \"ground\" array");
  }
  std::vector<std::string> ground;
  std::map<std::string, int> index;
  for (const json& name : j["ground"]) {
    if (!name.is_string()) {
      throw std::invalid_argument(
          "closure system: ground names must be strings");
    }
    index.emplace(name.get<std::string>(),
                  static_cast<int>(ground.size()));
    ground.push_back(name.get<std::string>());
  }
  auto lookup = [&](const json& name) {
    if (!name.is_string() ||
        index.find(name.get<std::string>()) == index.end()) {
      throw std::invalid_argument(
          "closure system: rule member is not a ground point");
    }
    return index.at(name.get<std::string>());
  };
  std::vector<ClosureRule> rules;
  if (j.contains("rules")) {
    if (!j["rules"].is_array()) {
      throw std::invalid_argument("closure system: \"rules\" must be an "
                                  "array");
    }
    for (const json& r : j["rules"]) {
      if (!r.is_object() || !r.contains("if") || !r["if"].is_array() ||
          !r.contains("then")) {
        throw std::invalid_argument(
            "closure system: each rule needs \"if\" and \"then\"");
      }
      ClosureRule rule;
      for (const json& name : r["if"]) rule.premise.push_back(lookup(name));
      rule.conclusion = lookup(r["then"]);
      rules.push_back(std::move(rule));
    }
  }
  return ClosureSystem(std::move(ground), std::move(rules));
}

std::string closure_system_to_json(const ClosureSystem& system) {
  json j;
  j["ground"] = system.ground();
  json rules = json::array();
  for (const ClosureRule& r : system.rules()) {
    json rule;
    json premise = json::array();
    for (int i : r.premise) premise.push_back(system.ground()[i]);
    rule["if"] = premise;
    rule["then"] = system.ground()[r.conclusion];
    rules.push_back(rule);
  }
  j["rules"] = rules;
  return j.dump();
}

FiniteLattice parse_finite_lattice_json(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.contains("names") || !j["names"].is_array()) {
    throw std::invalid_argument("finite lattice: missing \"names\" array");
  }
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (const json& name : j["names"]) {
    if (!name.is_string()) {
      throw std::invalid_argument("finite lattice: names must be strings");
    }
    index.emplace(name.get<std::string>(),
                  static_cast<int>(names.size()));
    names.push_back(name.get<std::string>());
  }
  const int n = static_cast<int>(names.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  if (!j.contains("leq") || !j["leq"].is_array()) {
    throw std::invalid_argument("finite lattice: missing \"leq\" array");
  }
  for (const json& pair : j["leq"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string()) {
      throw std::invalid_argument(
          "finite lattice: leq entries must be [name, name] pairs");
    }
    auto a = index.find(pair[0].get<std::string>());
    auto b = index.find(pair[1].get<std::string>());
    if (a == index.end() || b == index.end()) {
      throw std::invalid_argument(
          "finite lattice: leq pair names an unknown element");
    }
    leq[a->second][b->second] = true;
  }
  // Transitive closure of the declared pairs; from_leq then verifies the
  // result is an honest lattice order (antisymmetry included).
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (int m = 0; m < n; ++m) {
        if (leq[k][m]) leq[i][m] = true;
      }
    }
  }
  return FiniteLattice::from_leq(std::move(names), std::move(leq));
}

StarConfig parse_star_config_json(const std::string& text) {
  json j = parse_or_throw(text);
  int dim = dim_field(j, "star config");
  if (!j.contains("rays")) {
    throw std::invalid_argument("star config: missing \"rays\"");
  }
  return StarConfig::build(dim, point_list(j["rays"], dim, "star config"));
}

std::string star_config_to_json(const StarConfig& config) {
  json j;
  j["dim"] = config.dim();
  json rays = json::array();
  for (const VecQ& r : config.rays()) rays.push_back(point_to_json(r));
  j["rays"] = rays;
  return j.dump();
}

std::string gallery_results_to_json(
    const std::vector<GalleryResult>& results,
    std::optional<std::pair<std::int64_t, double>> timing) {
  json arr = json::array();
  for (const GalleryResult& r : results) {
    json e;
    e["entry"] = r.entry;
    e["expected"] = r.expected;
    e["observed"] = r.observed;
    if (r.witness) {
      e["witness"] = point_to_json(*r.witness);
    } else {
      e["witness"] = nullptr;
    }
    e["pass"] = r.pass;
    arr.push_back(e);
  }
  if (!timing) return arr.dump(2);
  json j;
  j["entries"] = arr;
  j["timing"] = {{"unix_ms", timing->first},
                 {"elapsed_ms", timing->second}};
  return j.dump(2);
}

}  // namespace convlat
