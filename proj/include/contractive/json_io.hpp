// Copyright 2026 The contractive Authors. All Rights Reserved.
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

#ifndef CONTRACTIVE_JSON_IO_HPP_
#define CONTRACTIVE_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "contractive/core_matrix.hpp"
#include "contractive/model_space.hpp"
#include "contractive/parrott.hpp"
#include "contractive/theorem_verifier.hpp"

namespace contractive {

using Json = nlohmann::ordered_json;

/// Top-level "schema" tag of every document written.
inline constexpr std::string_view kSchemaVersion = "v1";

/// Parses text, throwing InputError("<source>:<line>:<column>: ...") on
/// malformed JSON.
Json parse_json_text(std::string_view text, std::string_view source);
Json read_json_file(const std::string& path);

/// Doubles are emitted in shortest round-trip form, so parsing the output
/// gives back bit-identical values.
std::string dump(const Json& j);

Json complex_to_json(Complex z);
/// Expects [re, im]; `field` names the value in error messages.
Complex complex_from_json(const Json& j, std::string_view field);

/// {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order.
Json matrix_to_json(const ComplexMatrix& m);
/// Unknown keys are ignored; errors name the offending field.
ComplexMatrix matrix_from_json(const Json& j, std::string_view field = "matrix");

/// {"omegas": [[re, im], ...]}
std::vector<Complex> omegas_from_json(const Json& j);
/// [[re, im], ...]
Json complex_list_to_json(std::span<const Complex> values);

Json tolerances_to_json(const Tolerances& tol);
Json certificate_to_json(const ContractionCertificate& cert);
Json disk_to_json(const FeasibilityDisk& disk);
Json uniqueness_report_to_json(const UniquenessReport& report, const Tolerances& tol);
Json truncation_report_to_json(const TruncationReport& report);
Json tmw_verification_to_json(const TmwVerification& v);

}  // namespace contractive

#endif  // CONTRACTIVE_JSON_IO_HPP_
