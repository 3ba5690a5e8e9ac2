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

#ifndef CONTRACTIVE_CLI_HPP_
#define CONTRACTIVE_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "contractive/core_matrix.hpp"
#include "contractive/theorem_verifier.hpp"

namespace contractive::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitContractViolation = 1;
inline constexpr int kExitInputError = 2;

enum class Subcommand {
  kGenerate,
  kCheck,
  kComplete,
  kVerifyTheorem,
  kTmwVerify,
  kMoebius,
  kTruncate,
};

struct RunConfig {
  Subcommand subcommand = Subcommand::kGenerate;
  /// omegas file (generate, tmw-verify), matrix file (check, moebius) or
  /// blocks file (complete).
  std::string input_path;
  std::uint64_t seed = 0;
  Tolerances tol;
  std::optional<std::string> output_path;

  // verify-theorem
  Index n = 6;
  int draws = 50;
  double epsilon = 1e-2;
  int phases = 8;
  double radius = 0.8;

  // tmw-verify
  std::optional<Index> nodes;
  double target_tol = 1e-9;

  // moebius
  Complex omega;

  // truncate
  std::string omegas_rule = "zero";
  Index n_max = 12;
  std::optional<TruncationTamper> tamper;
};

/// Runs one subcommand and writes one JSON document to `out` (or to
/// config.output_path). Returns kExitOk when every contract holds,
/// kExitContractViolation when one fails and kExitInputError on bad input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line (argv[0] is the program name) and calls run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses "i,j,re,im" with one-based i <= j.
TruncationTamper parse_tamper(const std::string& text);

}  // namespace contractive::cli

#endif  // CONTRACTIVE_CLI_HPP_
