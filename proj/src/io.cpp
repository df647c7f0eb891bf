// Copyright 2026 The pkr Authors.
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

#include "pkr/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "pkr/error.hpp"

namespace pkr::io {

namespace {

[[noreturn]] void schema(const std::string& detail) {
  throw Error(ErrorKind::kSchemaError, detail);
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    schema(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

double number(const Json& v, const std::string& where) {
  if (!v.is_number()) schema(where + " must be a number");
  return v.get<double>();
}

std::vector<double> number_array(const Json& v, const std::string& where) {
  if (!v.is_array()) schema(where + " must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<double>> number_matrix(const Json& v,
                                               const std::string& where) {
  if (!v.is_array()) schema(where + " must be an array of arrays");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(number_array(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::size_t label_index(const SpacePtr& space, const Json& v,
                        const std::string& where) {
  if (!v.is_string()) schema(where + " must be a point label");
  const auto idx = space->index_of(v.get<std::string>());
  if (!idx) schema(where + ": unknown point '" + v.get<std::string>() + "'");
  return *idx;
}

// Keeps -0.0 out of the output.
double clean(double x) { return x == 0.0 ? 0.0 : x; }

Json clean_array(std::span<const double> values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(clean(v));
  return arr;
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    schema("'" + path + "' is not valid JSON: " + e.what());
  }
}

SpacePtr parse_space(const Json& doc, const ValidationOptions& options) {
  const Json& points = field(doc, "points");
  if (!points.is_array()) schema("'points' must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (!p.is_string()) schema("'points' must be an array of strings");
    labels.push_back(p.get<std::string>());
  }
  const Json& metric = field(doc, "metric");
  const Json& type = field(metric, "type");
  if (!type.is_string()) schema("'metric.type' must be a string");
  const std::string kind = type.get<std::string>();
  if (kind == "matrix") {
    return validate_space(std::move(labels),
                          number_matrix(field(metric, "d"), "metric.d"), options);
  }
  if (kind == "euclidean") {
    const auto coords = number_matrix(field(metric, "coords"), "metric.coords");
    if (coords.size() != labels.size()) {
      throw Error(ErrorKind::kDimensionMismatch,
                  std::to_string(coords.size()) + " coordinates for " +
                      std::to_string(labels.size()) + " points");
    }
    return from_euclidean(coords, std::move(labels));
  }
  schema("unknown metric type '" + kind + "'");
}

std::vector<double> parse_weight_array(const Json& doc) {
  return number_array(field(doc, "weights"), "weights");
}

SignedMeasure parse_measure(const Json& doc, const SpacePtr& space) {
  const Json& weights = field(doc, "weights");
  if (weights.is_array()) {
    return SignedMeasure(space, number_array(weights, "weights"));
  }
  if (!weights.is_object()) schema("'weights' must be an array or an object");
  std::vector<double> w(space->size(), 0.0);
  for (const auto& [label, value] : weights.items()) {
    const auto idx = space->index_of(label);
    if (!idx) schema("weights: unknown point '" + label + "'");
    w[*idx] = number(value, "weights." + label);
  }
  return SignedMeasure(space, std::move(w));
}

LipschitzFunction parse_function(const Json& doc, const SpacePtr& space) {
  return LipschitzFunction(space, number_array(field(doc, "values"), "values"));
}

TransportPlan parse_plan(const Json& doc, const SpacePtr& space) {
  const Json& entries = field(doc, "entries");
  if (!entries.is_array()) schema("'entries' must be an array");
  std::vector<PlanEntry> out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string where = "entries[" + std::to_string(k) + "]";
    const Json& e = entries[k];
    const double mass = number(field(e, "mass"), where + ".mass");
    if (!(mass >= 0.0) || !std::isfinite(mass)) {
      schema(where + ".mass must be finite and >= 0");
    }
    out.push_back({label_index(space, field(e, "from"), where + ".from"),
                   label_index(space, field(e, "to"), where + ".to"), mass});
  }
  return normalize_plan(space, std::move(out));
}

double parse_exponent(const std::string& text, ErrorKind kind) {
  if (text == "inf" || text == "Inf" || text == "infinity") return kInfinity;
  double value = 0.0;
  std::size_t used = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !(value >= 1.0) || std::isnan(value)) {
    throw Error(kind, "'" + text + "' is not a number >= 1 or \"inf\"");
  }
  return value;
}

Json exponent_to_json(double p) {
  if (std::isinf(p)) return "inf";
  if (p == 1.0) return "1";
  return p;
}

double exponent_from_json(const Json& value, ErrorKind kind) {
  if (value.is_string()) return parse_exponent(value.get<std::string>(), kind);
  if (value.is_number()) {
    const double v = value.get<double>();
    if (!(v >= 1.0)) throw Error(kind, "exponent must be >= 1");
    return v;
  }
  throw Error(kind, "exponent must be a number or a string");
}

Json plan_to_json(const TransportPlan& plan) {
  Json entries = Json::array();
  for (const auto& e : plan.entries) {
    entries.push_back({{"from", plan.space->labels()[e.from]},
                       {"to", plan.space->labels()[e.to]},
                       {"mass", clean(e.mass)}});
  }
  return {{"cost", clean(plan_cost(plan))}, {"entries", std::move(entries)}};
}

Json flow_to_json(const FlowResult& result) {
  Json out = plan_to_json(result.plan);
  out["cost"] = clean(result.cost);
  out["potentials"] = clean_array(result.potentials);
  return out;
}

Json frontier_to_json(const std::vector<FrontierPoint>& frontier) {
  Json arr = Json::array();
  for (const auto& pt : frontier) {
    arr.push_back(Json::array({clean(pt.lambda), clean(pt.a), clean(pt.b)}));
  }
  return arr;
}

Json pk_to_json(const PkSolution& sol) {
  return {{"p", exponent_to_json(sol.exponents.p)},
          {"value", clean(sol.value)},
          {"a", clean(sol.a)},
          {"b", clean(sol.b)},
          {"xi", clean_array(sol.xi.weights())},
          {"plan", plan_to_json(sol.plan)},
          {"dual_f", clean_array(sol.dual_f.values())},
          {"gap", clean(sol.gap)},
          {"frontier", frontier_to_json(sol.frontier)}};
}

Json dual_to_json(const DualSolution& sol) {
  return {{"q", exponent_to_json(sol.q)},
          {"value", clean(sol.value)},
          {"f", clean_array(sol.f.values())},
          {"budget", Json::array({clean(sol.budget_lipschitz),
                                  clean(sol.budget_sup)})}};
}

Json certificate_to_json(const Certificate& cert) {
  auto cond = [](const ConditionResult& c) {
    return Json{{"residual", clean(c.residual)}, {"pass", c.pass}};
  };
  return {{"conditions",
           {{"i", cond(cert.cond_i)},
            {"ii", cond(cert.cond_ii)},
            {"iii", cond(cert.cond_iii)},
            {"iv", cond(cert.cond_iv)}}},
          {"gap", clean(cert.gap)},
          {"pairing", clean(cert.pairing)},
          {"pass", cert.passed()}};
}

Json equivalence_to_json(const EquivalenceReport& r) {
  return {{"p1", exponent_to_json(r.p1)},
          {"p2", exponent_to_json(r.p2)},
          {"norm_p1", clean(r.norm_p1)},
          {"norm_p2", clean(r.norm_p2)},
          {"constant", clean(r.constant)},
          {"lower_ok", r.lower_ok},
          {"upper_ok", r.upper_ok}};
}

std::string dump(const Json& doc) { return doc.dump(); }

}  // namespace pkr::io
