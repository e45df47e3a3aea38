/*
   Copyright 2026 hermw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermw/identities.hpp"
#include "hermw/index_set.hpp"
#include "hermw/polynomial.hpp"
#include "hermw/zeros.hpp"

namespace hermw {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "1";

/// Parses "1,2,5" or segment syntax "S(p,q)" into a validated IndexSet.
/// Malformed text, duplicates, and non-positive entries each raise
/// std::invalid_argument with a distinct message.
IndexSet parse_set(const std::string& text);

/// Polynomials serialize as ascending decimal-string coefficient lists so
/// that arbitrary-size integers survive JSON exactly; the zero polynomial is
/// {"degree": -1, "coefficients": []}.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json to_json(const IndexSet& f);
IndexSet index_set_from_json(const Json& j);

Json to_json(const IdentityVerdict& v);
Json to_json(const ZeroCertificate& c);
Json to_json(const SegmentCertificate& c);
Json to_json(const SegmentRootCount& c);
Json to_json(const OrthogonalityResult& r);
Json to_json(const std::complex<double>& z);

/// Report envelope: schema_version, command, inputs, results, then timing
/// (the only non-deterministic section, kept last).
Json make_report(const std::string& command, Json inputs, Json results,
                 const std::vector<double>& per_item_seconds);

/// CSV rendering of a root cloud: header "re,im", one row per root,
/// shortest round-trip formatting.
std::string root_cloud_csv(const std::vector<std::complex<double>>& roots);

}  // namespace hermw
