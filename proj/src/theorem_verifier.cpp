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

#include "contractive/theorem_verifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "contractive/complex_text.hpp"
#include "contractive/errors.hpp"
#include "contractive/model_space.hpp"

namespace contractive {

namespace {

// Slack allowed when comparing norms of nested truncations.
constexpr double kMonotoneSlack = 1e-12;

CompletionProblem band_problem(const ModelParameters& p) {
  return {prescribed_superdiagonal(p), {}};
}

void require_zero_second_point(const ModelParameters& p) {
  if (p.size() < 4) throw InputError("the omega_2 = 0 checks need n >= 4");
  if (p[1] != Complex(0.0, 0.0)) throw InputError("the omega_2 = 0 checks need omega_2 == 0");
}

double parse_rule_real(std::string_view text, std::string_view rule) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InputError("bad parameter in omega rule '" + std::string(rule) + "'");
  }
  return value;
}

}  // namespace

void CompletionProblem::validate() const {
  const Index n = size();
  if (n < 2) throw InputError("completion problem needs n >= 2");
  if (static_cast<Index>(band.superdiagonal.size()) != n - 1) {
    throw InputError("superdiagonal length must be n - 1");
  }
  for (const auto& [pos, value] : known_entries) {
    const auto [i, j] = pos;
    if (i < 0 || j >= n || j - i < 2) {
      std::ostringstream msg;
      msg << "known entry (" << i << ", " << j << ") is not strictly above the band";
      throw InputError(msg.str());
    }
  }
}

ParrottBlocks corner_partition(const ComplexMatrix& window, const Tolerances& tol) {
  if (!window.is_square() || window.rows() < 2) {
    throw DimensionError("corner partition needs a square window of size >= 2");
  }
  const Index m = window.rows() - 1;
  return ParrottBlocks(window.block(0, 0, 1, m), window.block(1, 0, m, m),
                       window.block(1, m, m, 1), tol);
}

BandCompletion complete_band(const CompletionProblem& problem, const Tolerances& tol,
                             bool enforce_uniqueness) {
  problem.validate();
  const Index n = problem.size();
  ComplexMatrix t(n, n);
  for (Index i = 0; i < n; ++i) t.set(i, i, problem.band.diagonal[static_cast<std::size_t>(i)]);
  for (Index i = 0; i + 1 < n; ++i) {
    t.set(i, i + 1, problem.band.superdiagonal[static_cast<std::size_t>(i)]);
  }
  for (const auto& [pos, value] : problem.known_entries) t.set(pos.first, pos.second, value);

  const double threshold = kRadiusFactor * tol.cert_tol;
  double max_radius = 0.0;
  // Offset by offset: every non-corner entry of a window lies on a lower
  // offset and is therefore already fixed.
  for (Index offset = 2; offset < n; ++offset) {
    for (Index i = 0; i + offset < n; ++i) {
      if (problem.known_entries.contains({i, i + offset})) continue;
      const ComplexMatrix window = t.block(i, i, offset + 1, offset + 1);
      const FeasibilityDisk disk = scalar_feasibility_disk(corner_partition(window, tol), tol);
      max_radius = std::max(max_radius, disk.radius);
      if (enforce_uniqueness && disk.radius > threshold) {
        std::ostringstream msg;
        msg << "non-unique completion detected at (" << i << ", " << i + offset
            << "): disk radius " << disk.radius;
        throw NonUniqueCompletionError(msg.str(), disk.radius);
      }
      t.set(i, i + offset, disk.center);
    }
  }
  return {std::move(t), max_radius};
}

bool UniquenessReport::contracts_hold(const Tolerances& tol) const {
  const double threshold = kRadiusFactor * tol.cert_tol;
  if (max_disk_radius > threshold || max_deviation_from_model > threshold) return false;
  return std::all_of(perturbations.begin(), perturbations.end(),
                     [](const PerturbationResult& r) { return r.verdict == Verdict::kViolation; });
}

UniquenessReport unique_completion_solver(const ModelParameters& p, const Tolerances& tol) {
  if (p.size() < 2) throw InputError("the completion solver needs n >= 2");
  if (p.max_modulus() > 1.0 - kSolverBoundaryMargin) {
    throw DomainError("the completion solver needs max |omega| <= 1 - 1e-6");
  }
  UniquenessReport report;
  report.advisory = p.max_modulus() > kAdvisoryModulus;
  BandCompletion done = complete_band(band_problem(p), tol, !report.advisory);
  report.max_deviation_from_model = done.matrix.max_abs_diff(build_model_matrix(p));
  report.max_disk_radius = done.max_disk_radius;
  report.solved_matrix = std::move(done.matrix);
  return report;
}

UniquenessReport uniqueness_sweep(const ModelParameters& p, double epsilon, int phases,
                                  const Tolerances& tol) {
  if (p.size() < 3) throw InputError("the uniqueness sweep needs n >= 3");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InputError("perturbation size must be positive");
  }
  if (phases < 1) throw InputError("the sweep needs at least one phase");

  UniquenessReport report = unique_completion_solver(p, tol);
  const ComplexMatrix model = build_model_matrix(p);
  const Index n = p.size();
  for (Index offset = 2; offset < n; ++offset) {
    for (Index i = 0; i + offset < n; ++i) {
      const Index j = i + offset;
      for (int l = 0; l < phases; ++l) {
        const double phase = 2.0 * std::numbers::pi * l / phases;
        ComplexMatrix moved = model;
        moved.set(i, j, model(i, j) + std::polar(epsilon, phase));
        const ContractionCertificate cert = is_contraction(moved, tol);
        report.perturbations.push_back({i, j, epsilon, phase, cert.norm, cert.verdict});
      }
    }
  }
  return report;
}

ContractionCertificate superdiagonal_bump(const ModelParameters& p, Index index,
                                          double epsilon, const Tolerances& tol) {
  if (index < 0 || index + 1 >= p.size()) throw InputError("superdiagonal index out of range");
  ComplexMatrix m = build_model_matrix(p);
  m.set(index, index + 1, m(index, index + 1) + epsilon);
  return is_contraction(m, tol);
}

double fact1_check(const ModelParameters& p, const Tolerances& tol) {
  require_zero_second_point(p);
  const ParrottBlocks blocks = corner_partition(build_model_matrix(p), tol);
  const Index m = blocks.h1();
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(m, m);
  expected(0, 0) = 0.0;
  expected(1, 1) = 0.0;
  const ComplexMatrix gram = blocks.c().adjoint() * blocks.c();
  return gram.max_abs_diff(ComplexMatrix(std::move(expected)));
}

Fact2Report fact2_check(const ModelParameters& p, const Tolerances& tol) {
  require_zero_second_point(p);
  const ComplexMatrix model = build_model_matrix(p);
  const FeasibilityDisk disk = scalar_feasibility_disk(corner_partition(model, tol), tol);
  Fact2Report report;
  report.center = disk.center;
  report.radius = disk.radius;
  report.model_corner = model(0, p.size() - 1);
  const double threshold = kRadiusFactor * tol.cert_tol;
  report.holds = std::abs(disk.center) <= threshold && disk.radius <= threshold &&
                 report.model_corner == Complex(0.0, 0.0);
  return report;
}

PhaseNormalization phase_normalize(const ComplexMatrix& t, const Tolerances& tol) {
  if (!t.is_square()) throw DimensionError("phase normalization needs a square matrix");
  if (!t.is_upper_triangular()) {
    throw InputError("phase normalization needs an upper-triangular matrix");
  }
  const Index n = t.rows();
  std::vector<double> phases(static_cast<std::size_t>(std::max<Index>(n - 1, 0)));
  for (Index i = 0; i + 1 < n; ++i) {
    const Complex entry = t(i, i + 1);
    // Entries at rounding level carry no usable phase.
    phases[static_cast<std::size_t>(i)] = std::abs(entry) <= tol.rank_tol ? 0.0 : std::arg(entry);
  }
  std::vector<Complex> diag(static_cast<std::size_t>(n), Complex(1.0, 0.0));
  double theta = 0.0;
  for (Index i = n - 2; i >= 0; --i) {
    theta += phases[static_cast<std::size_t>(i)];
    diag[static_cast<std::size_t>(i)] = std::polar(1.0, theta);
  }
  ComplexMatrix u = ComplexMatrix::diagonal(diag);
  ComplexMatrix normalized = u.adjoint() * t * u;
  return {std::move(u), std::move(normalized), std::move(phases)};
}

OmegaSequence parse_omega_rule(std::string_view rule) {
  const std::size_t colon = rule.find(':');
  const std::string_view name = rule.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : rule.substr(colon + 1);
  if (name == "zero" && colon == std::string_view::npos) {
    return [](Index) { return Complex(0.0, 0.0); };
  }
  if (colon == std::string_view::npos) {
    throw InputError("omega rule '" + std::string(rule) + "' needs a parameter");
  }
  if (name == "constant") {
    const Complex c = parse_complex(arg);
    return [c](Index) { return c; };
  }
  if (name == "geometric" || name == "decay") {
    const double r = parse_rule_real(arg, rule);
    if (!(r > 0.0 && r < 1.0)) {
      throw InputError("omega rule ratio must lie in (0, 1)");
    }
    if (name == "geometric") {
      return [r](Index k) { return Complex(1.0 - std::pow(r, static_cast<double>(k)), 0.0); };
    }
    return [r](Index k) { return Complex(std::pow(r, static_cast<double>(k)), 0.0); };
  }
  throw InputError("unknown omega rule '" + std::string(rule) + "'");
}

TruncationReport truncation_check(const OmegaSequence& omegas, Index n_max,
                                  const std::optional<TruncationTamper>& tamper,
                                  const Tolerances& tol) {
  if (n_max < 2) throw InputError("truncation check needs n_max >= 2");
  std::vector<Complex> points;
  points.reserve(static_cast<std::size_t>(n_max));
  for (Index k = 1; k <= n_max; ++k) points.push_back(omegas(k));
  if (tamper && (tamper->row < 0 || tamper->col < tamper->row || tamper->col >= n_max)) {
    throw InputError("tampered entry must be on or above the diagonal and inside n_max");
  }

  TruncationReport report;
  report.tamper = tamper;
  report.blaschke_partial = blaschke_condition_partial(points, n_max);
  for (Index n = 2; n <= n_max; ++n) {
    ComplexMatrix m = build_model_matrix(
        ModelParameters({points.begin(), points.begin() + static_cast<std::ptrdiff_t>(n)}));
    if (tamper && tamper->col < n) {
      m.set(tamper->row, tamper->col, m(tamper->row, tamper->col) + tamper->delta);
    }
    report.sizes.push_back(n);
    report.norms.push_back(spectral_norm(m));
  }

  report.monotone = true;
  for (std::size_t k = 1; k < report.norms.size(); ++k) {
    if (report.norms[k] < report.norms[k - 1] - kMonotoneSlack) report.monotone = false;
  }
  for (std::size_t k = report.norms.size(); k-- > 0;) {
    if (report.norms[k] <= 1.0 + tol.cert_tol) break;
    report.violation_onset = report.sizes[k];
  }

  if (tamper) {
    const Index entry_window = std::max<Index>(tamper->col + 1, 2);
    report.contracts_hold =
        report.violation_onset.has_value() && *report.violation_onset <= entry_window;
  } else {
    const bool bounded = std::all_of(report.norms.begin(), report.norms.end(),
                                     [&](double v) { return v <= 1.0 + tol.cert_tol; });
    report.contracts_hold = bounded && report.monotone;
  }
  return report;
}

}  // namespace contractive
