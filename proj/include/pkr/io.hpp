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

#ifndef PKR_IO_HPP_
#define PKR_IO_HPP_

// JSON file formats.
//
//   space     {"points": [label...],
//              "metric": {"type": "matrix", "d": [[...]]}
//                      | {"type": "euclidean", "coords": [[...]]}}
//   measure   {"weights": [w...]} in point order, or
//             {"weights": {"label": w, ...}} with omitted labels = 0
//   function  {"values": [v...]}
//
// Every parse failure is reported as pkr::Error(SchemaError) or IoError.

#include <string>

#include "json.hpp"
#include "pkr/certify.hpp"
#include "pkr/lipschitz.hpp"
#include "pkr/pknorm.hpp"
#include "pkr/space.hpp"
#include "pkr/transport.hpp"

namespace pkr::io {

using Json = nlohmann::json;

Json load_json(const std::string& path);

SpacePtr parse_space(const Json& doc, const ValidationOptions& options = {});
SignedMeasure parse_measure(const Json& doc, const SpacePtr& space);
// Array-form weights only; used where no space is at hand.
std::vector<double> parse_weight_array(const Json& doc);
LipschitzFunction parse_function(const Json& doc, const SpacePtr& space);
// Reads {"entries": [{"from", "to", "mass"}...]}; endpoints are labels.
TransportPlan parse_plan(const Json& doc, const SpacePtr& space);

// "1", "inf" or a decimal string. Throws InvalidP / InvalidQ via `kind`.
double parse_exponent(const std::string& text, ErrorKind kind);
Json exponent_to_json(double p);
double exponent_from_json(const Json& value, ErrorKind kind);

Json plan_to_json(const TransportPlan& plan);
Json flow_to_json(const FlowResult& result);
Json frontier_to_json(const std::vector<FrontierPoint>& frontier);
Json pk_to_json(const PkSolution& sol);
Json dual_to_json(const DualSolution& sol);
Json certificate_to_json(const Certificate& cert);
Json equivalence_to_json(const EquivalenceReport& report);

// Compact single-line output with shortest round-trip floats.
std::string dump(const Json& doc);

}  // namespace pkr::io

#endif  // PKR_IO_HPP_
