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

#include "contractive/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/logger.h>
#include <spdlog/sinks/ostream_sink.h>

#include "contractive/complex_text.hpp"
#include "contractive/errors.hpp"
#include "contractive/json_io.hpp"
#include "contractive/model_matrix.hpp"
#include "contractive/model_space.hpp"
#include "contractive/moebius.hpp"
#include "contractive/parrott.hpp"
#include "contractive/random.hpp"

namespace contractive::cli {

namespace {

std::string_view subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::kGenerate:
      return "generate";
    case Subcommand::kCheck:
      return "check";
    case Subcommand::kComplete:
      return "complete";
    case Subcommand::kVerifyTheorem:
      return "verify-theorem";
    case Subcommand::kTmwVerify:
      return "tmw-verify";
    case Subcommand::kMoebius:
      return "moebius";
    case Subcommand::kTruncate:
      return "truncate";
  }
  return "unknown";
}

spdlog::logger make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  spdlog::logger log("contractive", std::move(sink));
  log.set_pattern("[%l] %v");
  const char* env = std::getenv("CONTRACTIVE_LOG");
  const std::string level = env ? env : "error";
  if (level == "debug") {
    log.set_level(spdlog::level::debug);
  } else if (level == "info") {
    log.set_level(spdlog::level::info);
  } else {
    log.set_level(spdlog::level::err);
  }
  return log;
}

Json envelope(const RunConfig& config) {
  return Json{{"schema", kSchemaVersion},
              {"version", CONTRACTIVE_VERSION},
              {"subcommand", subcommand_name(config.subcommand)},
              {"seed", config.seed},
              {"tolerances", tolerances_to_json(config.tol)}};
}

Json generator_info() {
  auto hex = [](std::uint64_t v) {
    std::ostringstream s;
    s << "0x" << std::hex << std::uppercase << v;
    return s.str();
  };
  return Json{{"engine", "mt19937_64"},
              {"seeding", "splitmix64(seed + (draw + 1) * increment)"},
              {"splitmix64_constants",
               Json::array({hex(kSplitMixIncrement), hex(kSplitMixMul1), hex(kSplitMixMul2)})},
              {"uniform", "(engine() >> 11) * 2^-53"},
              {"disk_sampling", "rejection from [-r, r]^2, real part drawn first"}};
}

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

int run_generate(const RunConfig& config, Json& doc) {
  const ModelParameters p(omegas_from_json(read_json_file(config.input_path)));
  merge(doc, matrix_to_json(build_model_matrix(p)));
  return kExitOk;
}

int run_check(const RunConfig& config, Json& doc) {
  const ComplexMatrix m = matrix_from_json(read_json_file(config.input_path));
  const ContractionCertificate cert = is_contraction(m, config.tol);
  merge(doc, certificate_to_json(cert));
  if (m.is_square()) {
    const SnClassReport sn = is_sn_class(m, config.tol);
    doc["sn_class"] = Json{{"member", sn.member()},
                           {"contraction", sn.contraction},
                           {"spectrum_in_disk", sn.spectrum_in_disk},
                           {"defect_rank", sn.defect_rank},
                           {"spectral_radius", sn.spectral_radius}};
  } else {
    doc["sn_class"] = nullptr;
  }
  return cert.is_contraction() ? kExitOk : kExitContractViolation;
}

int run_complete(const RunConfig& config, Json& doc) {
  const Json in = read_json_file(config.input_path);
  const auto block = [&](const char* key) {
    if (!in.is_object() || !in.contains(key)) {
      throw InputError(std::string("field '") + key + "': missing");
    }
    return matrix_from_json(in.at(key), key);
  };
  ComplexMatrix a = block("A");
  ComplexMatrix c = block("C");
  ComplexMatrix d = block("D");
  const ParrottBlocks blocks(std::move(a), std::move(c), std::move(d), config.tol);
  const FactorPair factors = solve_factors(blocks, config.tol);
  const ComplexMatrix b = central_completion(blocks, config.tol);
  const double norm = spectral_norm(assemble(blocks, b));
  doc["B_central"] = matrix_to_json(b);
  if (blocks.scalar_corner()) {
    doc["disk"] = disk_to_json(scalar_feasibility_disk(blocks, config.tol));
  } else {
    doc["disk"] = nullptr;
  }
  doc["assembled_norm"] = norm;
  doc["factor_residuals"] = Json{{"A", factors.residual_a}, {"D", factors.residual_d}};
  return norm <= 1.0 + config.tol.cert_tol ? kExitOk : kExitContractViolation;
}

int run_verify_theorem(const RunConfig& config, Json& doc, spdlog::logger& log) {
  if (config.n < 2) throw InputError("--n must be at least 2");
  if (config.draws < 1) throw InputError("--draws must be positive");
  if (!(config.radius >= 0.0 && config.radius < 1.0)) {
    throw InputError("--radius must lie in [0, 1)");
  }
  doc["generator"] = generator_info();
  doc["n"] = config.n;
  doc["draws"] = config.draws;
  doc["radius"] = config.radius;
  doc["epsilon"] = config.epsilon;
  doc["phases"] = config.phases;

  Json reports = Json::array();
  bool all_hold = true;
  double max_radius = 0.0;
  double max_deviation = 0.0;
  for (int draw = 0; draw < config.draws; ++draw) {
    Rng rng(config.seed, static_cast<std::uint64_t>(draw));
    const ModelParameters p(rng.disk_points(config.n, config.radius));
    const UniquenessReport report =
        config.n >= 3 ? uniqueness_sweep(p, config.epsilon, config.phases, config.tol)
                      : unique_completion_solver(p, config.tol);
    const bool hold = report.contracts_hold(config.tol);
    log.debug("draw {}: max radius {:.3e}, deviation {:.3e}, contracts {}", draw,
              report.max_disk_radius, report.max_deviation_from_model, hold);
    all_hold = all_hold && (hold || report.advisory);
    max_radius = std::max(max_radius, report.max_disk_radius);
    max_deviation = std::max(max_deviation, report.max_deviation_from_model);
    Json entry{{"draw", draw}, {"omegas", complex_list_to_json(p.omegas())}};
    merge(entry, uniqueness_report_to_json(report, config.tol));
    reports.push_back(std::move(entry));
  }
  doc["summary"] = Json{{"max_disk_radius", max_radius},
                        {"max_deviation_from_model", max_deviation},
                        {"all_contracts_hold", all_hold}};
  doc["reports"] = std::move(reports);
  return all_hold ? kExitOk : kExitContractViolation;
}

int run_tmw_verify(const RunConfig& config, Json& doc) {
  const ModelParameters p(omegas_from_json(read_json_file(config.input_path)));
  const Index nodes = config.nodes.value_or(recommended_nodes(p, config.target_tol));
  const TmwVerification v = tmw_verify(p, nodes);
  merge(doc, tmw_verification_to_json(v));
  doc["target_tol"] = config.target_tol;
  const bool hold = v.gram_defect <= config.target_tol && v.entry_defect <= config.target_tol;
  doc["contracts_hold"] = hold;
  return hold || v.low_accuracy ? kExitOk : kExitContractViolation;
}

int run_moebius(const RunConfig& config, Json& doc) {
  const ComplexMatrix t = matrix_from_json(read_json_file(config.input_path));
  const MoebiusResult r = moebius_matrix_report(MoebiusParam(config.omega), t, config.tol);
  doc["omega"] = complex_to_json(config.omega);
  merge(doc, matrix_to_json(r.matrix));
  doc["condition"] = r.condition;
  doc["near_boundary"] = r.near_boundary;
  return kExitOk;
}

int run_truncate(const RunConfig& config, Json& doc) {
  const TruncationReport report = truncation_check(parse_omega_rule(config.omegas_rule),
                                                   config.n_max, config.tamper, config.tol);
  doc["omegas_rule"] = config.omegas_rule;
  doc["n_max"] = config.n_max;
  merge(doc, truncation_report_to_json(report));
  return report.contracts_hold ? kExitOk : kExitContractViolation;
}

int dispatch(const RunConfig& config, Json& doc, spdlog::logger& log) {
  switch (config.subcommand) {
    case Subcommand::kGenerate:
      return run_generate(config, doc);
    case Subcommand::kCheck:
      return run_check(config, doc);
    case Subcommand::kComplete:
      return run_complete(config, doc);
    case Subcommand::kVerifyTheorem:
      return run_verify_theorem(config, doc, log);
    case Subcommand::kTmwVerify:
      return run_tmw_verify(config, doc);
    case Subcommand::kMoebius:
      return run_moebius(config, doc);
    case Subcommand::kTruncate:
      return run_truncate(config, doc);
  }
  throw InputError("unknown subcommand");
}

void emit(const RunConfig& config, const Json& doc, std::ostream& out) {
  if (!config.output_path) {
    out << dump(doc);
    return;
  }
  std::ofstream file(*config.output_path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + *config.output_path + "'");
  file << dump(doc);
}

}  // namespace

TruncationTamper parse_tamper(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string piece; std::getline(ss, piece, ',');) parts.push_back(piece);
  if (parts.size() != 4) throw InputError("--tamper expects i,j,re,im");
  const auto as_index = [&](const std::string& s) {
    Index v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
      throw InputError("--tamper indices must be positive integers");
    }
    return v - 1;
  };
  TruncationTamper t;
  t.row = as_index(parts[0]);
  t.col = as_index(parts[1]);
  if (t.col < t.row) throw InputError("--tamper needs i <= j");
  t.delta = Complex(parse_complex(parts[2]).real(), parse_complex(parts[3]).real());
  return t;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  spdlog::logger log = make_logger(err);
  Json doc = envelope(config);
  int code = kExitOk;
  try {
    config.tol.validate();
    log.info("running {}", subcommand_name(config.subcommand));
    code = dispatch(config, doc, log);
  } catch (const Error& e) {
    const bool input_side = dynamic_cast<const InputError*>(&e) != nullptr ||
                            dynamic_cast<const DomainError*>(&e) != nullptr ||
                            dynamic_cast<const NotContractionError*>(&e) != nullptr;
    code = input_side ? kExitInputError : kExitContractViolation;
    log.error("{}", e.what());
    doc["error"] = Json{{"kind", input_side ? "input" : "contract"}, {"message", e.what()}};
  }
  try {
    emit(config, doc, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model matrices, contractive completions and their uniqueness checks",
               "contractive"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  RunConfig config;
  std::string output;
  std::string omega_text;
  std::string tamper_text;
  Index nodes = 0;

  app.add_option("--seed", config.seed, "Master seed for random draws")->default_val(0);
  app.add_option("--eig-tol", config.tol.eig_tol, "Hermitian eigenvalue cutoff");
  app.add_option("--rank-tol", config.tol.rank_tol, "Relative singular-value cutoff");
  app.add_option("--cert-tol", config.tol.cert_tol, "Contraction margin");
  app.add_option("--solve-tol", config.tol.solve_tol, "Residual bound for solves");
  app.add_option("-o,--output", output, "Write the report here instead of stdout");

  auto* generate = app.add_subcommand("generate", "Build the model matrix of a list of points");
  generate->add_option("--omegas", config.input_path, "Omegas JSON file")->required();

  auto* check = app.add_subcommand("check", "Certify contractivity of a matrix");
  check->add_option("--matrix", config.input_path, "Matrix JSON file")->required();

  auto* complete = app.add_subcommand("complete", "Central Parrott completion of A, C, D blocks");
  complete->add_option("--blocks", config.input_path, "Blocks JSON file")->required();

  auto* verify = app.add_subcommand("verify-theorem",
                                    "Reconstruct random model matrices and sweep perturbations");
  verify->add_option("--n", config.n, "Matrix size")->default_val(6);
  verify->add_option("--draws", config.draws, "Number of random draws")->default_val(50);
  verify->add_option("--epsilon", config.epsilon, "Perturbation size")->default_val(1e-2);
  verify->add_option("--phases", config.phases, "Perturbation phases")->default_val(8);
  verify->add_option("--radius", config.radius, "Draw radius for the points")->default_val(0.8);

  auto* tmw = app.add_subcommand("tmw-verify", "Quadrature cross-check of the model matrix");
  tmw->add_option("--omegas", config.input_path, "Omegas JSON file")->required();
  tmw->add_option("--nodes", nodes, "Quadrature nodes (default: convergence rule)");
  tmw->add_option("--target-tol", config.target_tol, "Accepted defect")->default_val(1e-9);

  auto* moebius = app.add_subcommand("moebius", "Apply the Moebius map M_omega to a matrix");
  moebius->add_option("--omega", omega_text, "Parameter, e.g. 0.3-0.2i")->required();
  moebius->add_option("--matrix", config.input_path, "Matrix JSON file")->required();

  auto* truncate = app.add_subcommand("truncate", "Norms of truncations of an infinite model matrix");
  truncate->add_option("--omegas-rule", config.omegas_rule,
                       "zero | constant:c | geometric:r | decay:r")
      ->required();
  truncate->add_option("--n-max", config.n_max, "Largest truncation")->default_val(12);
  truncate->add_option("--tamper", tamper_text, "One-based i,j,re,im added to entry (i, j)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const std::vector<std::pair<CLI::App*, Subcommand>> table = {
      {generate, Subcommand::kGenerate},   {check, Subcommand::kCheck},
      {complete, Subcommand::kComplete},   {verify, Subcommand::kVerifyTheorem},
      {tmw, Subcommand::kTmwVerify},       {moebius, Subcommand::kMoebius},
      {truncate, Subcommand::kTruncate}};
  for (const auto& [sub, kind] : table) {
    if (sub->parsed()) config.subcommand = kind;
  }
  if (!output.empty()) config.output_path = output;
  if (tmw->count("--nodes") > 0) config.nodes = nodes;

  try {
    if (!omega_text.empty()) config.omega = parse_complex(omega_text);
    if (!tamper_text.empty()) config.tamper = parse_tamper(tamper_text);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return run(config, out, err);
}

}  // namespace contractive::cli
