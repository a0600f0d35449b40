// Copyright 2026 The dirp Authors
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

#pragma once

// JSON forms of the library's values. Numbers are written as decimal
// strings so files carry exact values.

#include <json.hpp>

#include <string>

#include "dirp/certified.hpp"
#include "dirp/config.hpp"
#include "dirp/continued_fraction.hpp"
#include "dirp/diffusion.hpp"
#include "dirp/diophantine.hpp"
#include "dirp/extremizers.hpp"
#include "dirp/lattice.hpp"
#include "dirp/spectral.hpp"

namespace dirp {

using Json = nlohmann::ordered_json;

/// {"value": "...", "radius": "...", "digits": n}
Json to_json(const CertifiedReal& x, int digits);
/// Shortest round-trip decimal text of a double.
std::string double_text(double x);

/// {"dim": d, "terms": [{"k": [..], "re": "..", "im": ".."}]}. Entries of k
/// beyond 64 bits are written as strings.
Json to_json(const TrigPoly& f);
TrigPoly trig_poly_from_json(const Json& j);
/// Parses JSON text; syntax errors report line and column.
TrigPoly parse_trig_poly(const std::string& text);
Json parse_json_text(const std::string& text);

Json to_json(const FreqVector& k);
Json to_json(const LatticeSearchResult& r, int digits);
Json to_json(const SystemSearchResult& r, int digits);
Json to_json(const CFExpansion& cf);
Json to_json(const BoundedQuotientReport& r);
Json to_json(const HurwitzReport& r, int digits);
Json to_json(const SharpnessTable& t, int digits);
Json to_json(const ContractionEstimate& e);

/// Tool name, version, configuration, seed and precision.
Json run_header(const RunConfig& config);

}  // namespace dirp
