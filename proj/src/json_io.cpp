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

#include "contractive/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "contractive/errors.hpp"

namespace contractive {

namespace {

[[noreturn]] void schema_error(std::string_view field, std::string_view problem) {
  throw InputError("field '" + std::string(field) + "': " + std::string(problem));
}

const Json& require_key(const Json& j, std::string_view key, std::string_view field) {
  if (!j.is_object()) schema_error(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) {
    schema_error(std::string(field) + "." + std::string(key), "missing");
  }
  return *it;
}

Index require_positive_int(const Json& j, std::string_view field) {
  if (!j.is_number_integer()) schema_error(field, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v <= 0) schema_error(field, "must be positive");
  return static_cast<Index>(v);
}

}  // namespace

Json parse_json_text(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << source << ":" << line << ":" << column << ": malformed JSON: " << e.what();
    throw InputError(msg.str());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, std::string_view field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    schema_error(field, "expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (const Complex& z : m.row_major_entries()) entries.push_back(complex_to_json(z));
  Json out = Json::object();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

ComplexMatrix matrix_from_json(const Json& j, std::string_view field) {
  const std::string prefix(field);
  const Index rows = require_positive_int(require_key(j, "rows", field), prefix + ".rows");
  const Index cols = require_positive_int(require_key(j, "cols", field), prefix + ".cols");
  const Json& entries = require_key(j, "entries", field);
  if (!entries.is_array()) schema_error(prefix + ".entries", "expected an array");
  if (static_cast<Index>(entries.size()) != rows * cols) {
    std::ostringstream msg;
    msg << "expected " << rows * cols << " entries, got " << entries.size();
    schema_error(prefix + ".entries", msg.str());
  }
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    values.push_back(
        complex_from_json(entries[k], prefix + ".entries[" + std::to_string(k) + "]"));
  }
  try {
    return ComplexMatrix::from_row_major(rows, cols, values);
  } catch (const InputError& e) {
    schema_error(prefix, e.what());
  }
}

std::vector<Complex> omegas_from_json(const Json& j) {
  const Json& list = require_key(j, "omegas", "document");
  if (!list.is_array() || list.empty()) schema_error("omegas", "expected a non-empty array");
  std::vector<Complex> out;
  out.reserve(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) {
    out.push_back(complex_from_json(list[k], "omegas[" + std::to_string(k) + "]"));
  }
  return out;
}

Json complex_list_to_json(std::span<const Complex> values) {
  Json list = Json::array();
  for (const Complex& w : values) list.push_back(complex_to_json(w));
  return list;
}

Json tolerances_to_json(const Tolerances& tol) {
  return Json{{"eig_tol", tol.eig_tol},
              {"rank_tol", tol.rank_tol},
              {"cert_tol", tol.cert_tol},
              {"solve_tol", tol.solve_tol}};
}

Json certificate_to_json(const ContractionCertificate& cert) {
  Json out{{"verdict", std::string(to_string(cert.verdict))},
           {"norm", cert.norm},
           {"defect_rank", cert.defect_rank}};
  if (cert.witness) {
    out["witness"] = complex_list_to_json(*cert.witness);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json disk_to_json(const FeasibilityDisk& disk) {
  return Json{{"center", complex_to_json(disk.center)}, {"radius", disk.radius}};
}

Json uniqueness_report_to_json(const UniquenessReport& report, const Tolerances& tol) {
  Json perturbations = Json::array();
  for (const PerturbationResult& r : report.perturbations) {
    perturbations.push_back(Json{{"position", Json::array({r.row + 1, r.col + 1})},
                                 {"epsilon", r.epsilon},
                                 {"phase", r.phase},
                                 {"resulting_norm", r.norm},
                                 {"verdict", std::string(to_string(r.verdict))}});
  }
  return Json{{"solved_matrix", matrix_to_json(report.solved_matrix)},
              {"max_disk_radius", report.max_disk_radius},
              {"max_deviation_from_model", report.max_deviation_from_model},
              {"advisory", report.advisory},
              {"perturbation_results", std::move(perturbations)},
              {"contracts_hold", report.contracts_hold(tol)}};
}

Json truncation_report_to_json(const TruncationReport& report) {
  Json out{{"sizes", report.sizes},
           {"norms", report.norms},
           {"blaschke_partial", report.blaschke_partial}};
  if (report.tamper) {
    out["tamper"] = Json{{"position", Json::array({report.tamper->row + 1, report.tamper->col + 1})},
                         {"delta", complex_to_json(report.tamper->delta)}};
  } else {
    out["tamper"] = nullptr;
  }
  if (report.violation_onset) {
    out["violation_onset"] = *report.violation_onset;
  } else {
    out["violation_onset"] = nullptr;
  }
  out["monotone"] = report.monotone;
  out["contracts_hold"] = report.contracts_hold;
  return out;
}

Json tmw_verification_to_json(const TmwVerification& v) {
  return Json{{"gram_defect", v.gram_defect},
              {"entry_defect", v.entry_defect},
              {"N", v.nodes},
              {"max_omega", v.max_omega},
              {"low_accuracy", v.low_accuracy}};
}

}  // namespace contractive
