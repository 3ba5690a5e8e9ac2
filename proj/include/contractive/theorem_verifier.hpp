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

#ifndef CONTRACTIVE_THEOREM_VERIFIER_HPP_
#define CONTRACTIVE_THEOREM_VERIFIER_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contractive/core_matrix.hpp"
#include "contractive/model_matrix.hpp"
#include "contractive/parrott.hpp"

namespace contractive {

/// Disk radii up to kRadiusFactor * cert_tol count as a collapsed disk.
inline constexpr double kRadiusFactor = 10.0;
/// Inputs with max |omega| above this only get advisory verdicts.
inline constexpr double kAdvisoryModulus = 0.9;
/// Solver precondition: max |omega| <= 1 - kSolverBoundaryMargin.
inline constexpr double kSolverBoundaryMargin = 1e-6;

/// Upper-triangular completion problem: a fixed diagonal and superdiagonal,
/// optionally some already-fixed entries with j - i >= 2 (zero-based keys).
struct CompletionProblem {
  PrescribedBand band;
  std::map<std::pair<Index, Index>, Complex> known_entries;

  Index size() const { return static_cast<Index>(band.diagonal.size()); }
  /// Throws InputError on inconsistent lengths or misplaced known entries.
  void validate() const;
};

struct BandCompletion {
  ComplexMatrix matrix;
  double max_disk_radius = 0.0;
};

/// Splits a square window around its top-right corner:
/// A = first row without the corner, C = rows 1.. over columns ..end-1,
/// D = last column without the corner.
ParrottBlocks corner_partition(const ComplexMatrix& window, const Tolerances& tol = {});

/// Fills every unknown entry antidiagonal by antidiagonal, setting each to
/// the center of its window's feasibility disk. Throws
/// NonUniqueCompletionError when a radius exceeds kRadiusFactor * cert_tol,
/// unless enforce_uniqueness is false.
BandCompletion complete_band(const CompletionProblem& problem, const Tolerances& tol = {},
                             bool enforce_uniqueness = true);

struct PerturbationResult {
  Index row = 0;  ///< zero-based
  Index col = 0;
  double epsilon = 0.0;
  double phase = 0.0;
  double norm = 0.0;
  Verdict verdict = Verdict::kStrict;
};

struct UniquenessReport {
  ComplexMatrix solved_matrix{1, 1};
  double max_disk_radius = 0.0;
  double max_deviation_from_model = 0.0;
  std::vector<PerturbationResult> perturbations;
  /// max |omega| > kAdvisoryModulus: verdicts are informational only.
  bool advisory = false;

  /// Disk radii and model deviation within kRadiusFactor * cert_tol, and
  /// every recorded perturbation a VIOLATION.
  bool contracts_hold(const Tolerances& tol = {}) const;
};

/// Reconstructs the model matrix from its diagonal and superdiagonal alone.
/// Requires n >= 2 and max |omega| <= 1 - kSolverBoundaryMargin.
UniquenessReport unique_completion_solver(const ModelParameters& p,
                                          const Tolerances& tol = {});

/// Runs the solver, then moves each entry with j - i >= 2 of the model matrix
/// by epsilon * exp(2 pi i l / phases), l < phases, and certifies the result.
UniquenessReport uniqueness_sweep(const ModelParameters& p, double epsilon, int phases,
                                  const Tolerances& tol = {});

/// Certificate of the model matrix with superdiagonal entry (index, index+1)
/// increased by epsilon.
ContractionCertificate superdiagonal_bump(const ModelParameters& p, Index index,
                                          double epsilon, const Tolerances& tol = {});

/// With omega_2 = 0 (zero-based index 1): max deviation of C*C from
/// diag(0, 0, 1, ..., 1), C taken from the full-size corner partition.
/// Requires n >= 4; throws InputError if omega_2 != 0.
double fact1_check(const ModelParameters& p, const Tolerances& tol = {});

struct Fact2Report {
  bool holds = false;
  Complex center;
  double radius = 0.0;
  Complex model_corner;  ///< top-right entry of the model matrix
};

/// With omega_2 = 0 the full-size corner disk collapses to {0}.
Fact2Report fact2_check(const ModelParameters& p, const Tolerances& tol = {});

struct PhaseNormalization {
  ComplexMatrix unitary;     ///< U = diag(exp(i theta_0), ..., exp(i theta_{n-2}), 1)
  ComplexMatrix normalized;  ///< U* T U
  std::vector<double> phases;  ///< arg of each superdiagonal entry (0 below rank_tol)
};

/// Diagonal unitary similarity making every superdiagonal entry real and
/// nonnegative. theta_i is the suffix sum phases[i] + ... + phases[n-2].
PhaseNormalization phase_normalize(const ComplexMatrix& t, const Tolerances& tol = {});

/// k -> omega_k for k = 1, 2, ...
using OmegaSequence = std::function<Complex(Index)>;

/// Named omega sequences:
///   zero            omega_k = 0
///   constant:c      omega_k = c (complex literal allowed)
///   geometric:r     omega_k = 1 - r^k     (Blaschke condition holds)
///   decay:r         omega_k = r^k
OmegaSequence parse_omega_rule(std::string_view rule);

struct TruncationTamper {
  Index row = 0;  ///< zero-based
  Index col = 0;
  Complex delta;
};

struct TruncationReport {
  std::vector<Index> sizes;
  std::vector<double> norms;
  double blaschke_partial = 0.0;
  std::optional<TruncationTamper> tamper;
  /// Smallest n such that every truncation of size >= n violates.
  std::optional<Index> violation_onset;
  bool monotone = false;
  bool contracts_hold = false;
};

/// Norms of the leading n x n truncations, n = 2..n_max, of the infinite
/// model matrix of the sequence, optionally with one entry moved.
/// Untampered contract: all norms <= 1 + cert_tol and nondecreasing.
/// Tampered contract: every truncation containing the entry violates.
TruncationReport truncation_check(const OmegaSequence& omegas, Index n_max,
                                  const std::optional<TruncationTamper>& tamper,
                                  const Tolerances& tol = {});

}  // namespace contractive

#endif  // CONTRACTIVE_THEOREM_VERIFIER_HPP_
