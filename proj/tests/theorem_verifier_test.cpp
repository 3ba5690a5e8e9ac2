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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "contractive/errors.hpp"
#include "contractive/model_matrix.hpp"
#include "contractive/moebius.hpp"
#include "contractive/random.hpp"
#include "contractive/theorem_verifier.hpp"
#include "test_support.hpp"

namespace contractive {
namespace {

using testing::to_dense;

ModelParameters with_zero_second(Rng& rng, Index n, double radius) {
  std::vector<Complex> w = rng.disk_points(n, radius);
  w[1] = 0.0;
  return ModelParameters(std::move(w));
}

TEST(CompletionProblemTest, Validation) {
  const ModelParameters p({0.1, 0.2, 0.3, 0.4});
  CompletionProblem problem{prescribed_superdiagonal(p), {}};
  EXPECT_NO_THROW(problem.validate());
  problem.known_entries[{0, 1}] = 0.5;
  EXPECT_THROW(problem.validate(), InputError);
  problem.known_entries.clear();
  problem.band.superdiagonal.pop_back();
  EXPECT_THROW(problem.validate(), InputError);
}

TEST(CompleteBandTest, KnownEntriesAreKept) {
  const ModelParameters p({0.1, 0.2, 0.3, 0.4});
  const ComplexMatrix m = build_model_matrix(p);
  CompletionProblem problem{prescribed_superdiagonal(p), {{{0, 2}, m(0, 2)}}};
  const BandCompletion done = complete_band(problem);
  EXPECT_EQ(done.matrix(0, 2), m(0, 2));
  EXPECT_LT(done.matrix.max_abs_diff(m), 1e-12);
}

TEST(UniqueCompletionTest, TwoByTwoHasNothingToSolve) {
  const ModelParameters p({0.3, Complex(0.0, 0.5)});
  const UniquenessReport r = unique_completion_solver(p);
  EXPECT_EQ(r.max_disk_radius, 0.0);
  EXPECT_LT(r.max_deviation_from_model, 1e-16);
  EXPECT_TRUE(r.contracts_hold());
}

TEST(UniqueCompletionTest, ThreeByThreeCorner) {
  const std::vector<Complex> w = {{0.3, 0.1}, {-0.2, 0.5}, {0.6, 0.0}};
  const UniquenessReport r = unique_completion_solver(ModelParameters(w));
  const Complex expected = -std::conj(w[1]) * defect_scalar(w[0]) * defect_scalar(w[2]);
  EXPECT_NEAR(std::abs(r.solved_matrix(0, 2) - expected), 0.0, 1e-10);
  EXPECT_LT(r.max_disk_radius, 1e-8);
}

TEST(UniqueCompletionTest, MatchesFormulaOnRandomDraws) {
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    Rng rng(61, trial);
    const Index n = rng.integer(2, 8);
    const ModelParameters p(rng.disk_points(n, 0.9));
    const UniquenessReport r = unique_completion_solver(p);
    EXPECT_FALSE(r.advisory);
    EXPECT_LE(r.max_disk_radius, 1e-8);
    EXPECT_LE(r.max_deviation_from_model, 1e-8);
    const oracle::Dense expected = oracle::model_matrix({p.omegas().begin(), p.omegas().end()});
    EXPECT_LE(testing::max_abs_diff(r.solved_matrix, expected), 1e-8);
  }
}

TEST(UniqueCompletionTest, AdvisoryNearBoundary) {
  const UniquenessReport r = unique_completion_solver(ModelParameters({0.95, 0.1, -0.3, 0.2}));
  EXPECT_TRUE(r.advisory);
  EXPECT_THROW(unique_completion_solver(ModelParameters({0.9999999, 0.1, 0.0})), DomainError);
}

TEST(UniquenessSweepTest, ShiftCornerMass) {
  const UniquenessReport r = uniqueness_sweep(ModelParameters({0.0, 0.0, 0.0}), 0.1, 1);
  ASSERT_EQ(r.perturbations.size(), 1u);
  EXPECT_EQ(r.perturbations[0].row, 0);
  EXPECT_EQ(r.perturbations[0].col, 2);
  EXPECT_GT(r.perturbations[0].norm, 1.0);
  EXPECT_EQ(r.perturbations[0].verdict, Verdict::kViolation);
}

TEST(UniquenessSweepTest, FourByFourAllViolate) {
  const ModelParameters p({0.3, 0.2, -0.4, Complex(0.0, 0.1)});
  const UniquenessReport r = uniqueness_sweep(p, 1e-2, 8);
  ASSERT_EQ(r.perturbations.size(), 24u);
  for (const PerturbationResult& pr : r.perturbations) {
    EXPECT_EQ(pr.verdict, Verdict::kViolation);
    ComplexMatrix moved = build_model_matrix(p);
    moved.set(pr.row, pr.col, moved(pr.row, pr.col) + std::polar(pr.epsilon, pr.phase));
    EXPECT_GT(oracle::norm2(to_dense(moved)), 1.0 + 1e-9);
  }
  EXPECT_TRUE(r.contracts_hold());
}

TEST(UniquenessSweepTest, StrictnessUpToEight) {
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    Rng rng(62, trial);
    const ModelParameters p(rng.disk_points(rng.integer(3, 8), 0.8));
    const UniquenessReport r = uniqueness_sweep(p, 1e-2, 8);
    for (const PerturbationResult& pr : r.perturbations) {
      EXPECT_GT(pr.norm, 1.0 + 1e-9) << "trial " << trial << " at " << pr.row << "," << pr.col;
    }
  }
}

TEST(UniquenessSweepTest, InputChecks) {
  EXPECT_THROW(uniqueness_sweep(ModelParameters({0.1, 0.2}), 1e-2, 8), InputError);
  EXPECT_THROW(uniqueness_sweep(ModelParameters({0.1, 0.2, 0.3}), 0.0, 8), InputError);
  EXPECT_THROW(uniqueness_sweep(ModelParameters({0.1, 0.2, 0.3}), 1e-2, 0), InputError);
}

TEST(SuperdiagonalBumpTest, UpwardBumpViolates) {
  Rng rng(63);
  const ModelParameters p(rng.disk_points(5, 0.8));
  for (Index k = 0; k < 4; ++k) {
    EXPECT_EQ(superdiagonal_bump(p, k, 1e-2).verdict, Verdict::kViolation);
  }
  EXPECT_THROW(superdiagonal_bump(p, 4, 1e-2), InputError);
}

TEST(Fact1Test, Examples) {
  EXPECT_LT(fact1_check(ModelParameters({0.5, 0.0, 0.3, 0.7})), 1e-12);
  EXPECT_LT(fact1_check(ModelParameters({0.0, 0.0, 0.0, 0.0})), 1e-15);
  Rng rng(64);
  EXPECT_LT(fact1_check(with_zero_second(rng, 6, 0.9)), 1e-10);
  EXPECT_THROW(fact1_check(ModelParameters({0.5, 0.1, 0.3, 0.7})), InputError);
  EXPECT_THROW(fact1_check(ModelParameters({0.5, 0.0, 0.3})), InputError);
}

TEST(Fact1Test, RandomDraws) {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    Rng rng(65, trial);
    EXPECT_LE(fact1_check(with_zero_second(rng, rng.integer(4, 8), 0.9)), 1e-10);
  }
}

TEST(Fact2Test, Examples) {
  EXPECT_TRUE(fact2_check(ModelParameters({0.5, 0.0, 0.3, 0.7})).holds);
  const Fact2Report zero = fact2_check(ModelParameters({0.0, 0.0, 0.0, 0.0}));
  EXPECT_TRUE(zero.holds);
  EXPECT_EQ(zero.model_corner, Complex(0.0, 0.0));
  EXPECT_TRUE(fact2_check(ModelParameters({0.9, 0.0, -0.9, Complex(0.0, 0.5)})).holds);
}

TEST(PhaseNormalizeTest, NonnegativeSuperdiagonalGivesIdentity) {
  const ComplexMatrix m = build_model_matrix(ModelParameters({0.1, 0.2, 0.3}));
  const PhaseNormalization pn = phase_normalize(m);
  EXPECT_LT(pn.unitary.max_abs_diff(ComplexMatrix::identity(3)), 1e-15);
  EXPECT_LT(pn.normalized.max_abs_diff(m), 1e-15);
}

TEST(PhaseNormalizeTest, NegativeEntry) {
  const ComplexMatrix t{{0.2, -0.5}, {0.0, 0.3}};
  const PhaseNormalization pn = phase_normalize(t);
  EXPECT_NEAR(std::abs(pn.unitary(0, 0) - Complex(-1.0, 0.0)), 0.0, 1e-15);
  EXPECT_EQ(pn.unitary(1, 1), Complex(1.0, 0.0));
  EXPECT_NEAR(std::abs(pn.normalized(0, 1) - 0.5), 0.0, 1e-15);
}

TEST(PhaseNormalizeTest, PreservesDiagonalAndNorm) {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng rng(66, trial);
    const Index n = rng.integer(2, 7);
    ComplexMatrix t(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = i; j < n; ++j) t.set(i, j, rng.in_disk(1.0));
    const PhaseNormalization pn = phase_normalize(t);
    for (Index i = 0; i < n; ++i) EXPECT_NEAR(std::abs(pn.normalized(i, i) - t(i, i)), 0.0, 1e-15);
    for (Index i = 0; i + 1 < n; ++i) {
      EXPECT_NEAR(pn.normalized(i, i + 1).imag(), 0.0, 1e-14);
      EXPECT_GE(pn.normalized(i, i + 1).real(), 0.0);
    }
    EXPECT_LT((pn.unitary.adjoint() * pn.unitary).max_abs_diff(ComplexMatrix::identity(n)), 1e-14);
    EXPECT_NEAR(spectral_norm(pn.normalized), spectral_norm(t), 1e-12);
  }
}

TEST(PhaseNormalizeTest, ZeroEntryConventionAndErrors) {
  const ComplexMatrix t{{0.2, 0.0, 0.1}, {0.0, 0.3, Complex(0.0, 1.0)}, {0.0, 0.0, 0.1}};
  const PhaseNormalization pn = phase_normalize(t);
  EXPECT_EQ(pn.phases[0], 0.0);
  EXPECT_THROW(phase_normalize(ComplexMatrix{{0.0, 0.0}, {1.0, 0.0}}), InputError);
  EXPECT_THROW(phase_normalize(ComplexMatrix(2, 3)), DimensionError);
}

TEST(PhaseNormalizeTest, MoebiusReduction) {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng rng(67, trial);
    const Index n = rng.integer(3, 8);
    const ModelParameters p(rng.disk_points(n, 0.9));
    const MoebiusParam m(p[1]);
    const PhaseNormalization pn = phase_normalize(moebius_matrix(m, build_model_matrix(p)));
    EXPECT_NEAR(std::abs(pn.normalized(1, 1)), 0.0, 1e-12);
    for (Index i = 0; i + 1 < n; ++i) {
      const double expected = defect_scalar(moebius_scalar(m, p[i])) *
                              defect_scalar(moebius_scalar(m, p[i + 1]));
      EXPECT_NEAR(std::abs(pn.normalized(i, i + 1) - expected), 0.0, 1e-10);
    }
    // The transformed matrix is again the model matrix of the mapped points.
    std::vector<Complex> mapped;
    for (const Complex w : p.omegas()) mapped.push_back(moebius_scalar(m, w));
    EXPECT_LT(pn.normalized.max_abs_diff(build_model_matrix(ModelParameters(mapped))), 1e-10);
  }
}

TEST(OmegaRuleTest, Parsing) {
  EXPECT_EQ(parse_omega_rule("zero")(3), Complex(0.0, 0.0));
  EXPECT_EQ(parse_omega_rule("constant:0.5")(7), Complex(0.5, 0.0));
  EXPECT_EQ(parse_omega_rule("constant:0.1-0.2i")(1), Complex(0.1, -0.2));
  EXPECT_DOUBLE_EQ(parse_omega_rule("geometric:0.5")(3).real(), 1.0 - 0.125);
  EXPECT_DOUBLE_EQ(parse_omega_rule("decay:0.5")(3).real(), 0.125);
  EXPECT_THROW(parse_omega_rule("geometric"), InputError);
  EXPECT_THROW(parse_omega_rule("geometric:1.5"), InputError);
  EXPECT_THROW(parse_omega_rule("spiral:0.5"), InputError);
  EXPECT_THROW(parse_omega_rule("decay:x"), InputError);
}

TEST(TruncationTest, ZeroSequenceNormsAreOne) {
  const TruncationReport r = truncation_check(parse_omega_rule("zero"), 10, std::nullopt);
  ASSERT_EQ(r.norms.size(), 9u);
  for (const double v : r.norms) EXPECT_NEAR(v, 1.0, 1e-15);
  EXPECT_TRUE(r.contracts_hold);
  EXPECT_FALSE(r.violation_onset.has_value());
}

TEST(TruncationTest, GeometricSequence) {
  const TruncationReport r = truncation_check(parse_omega_rule("geometric:0.5"), 12, std::nullopt);
  for (const double v : r.norms) EXPECT_LE(v, 1.0 + 1e-10);
  EXPECT_LT(r.blaschke_partial, 1.0);
  EXPECT_TRUE(r.monotone);
  EXPECT_TRUE(r.contracts_hold);
}

TEST(TruncationTest, TamperedEntryViolatesFromItsWindow) {
  const TruncationTamper tamper{0, 2, 0.05};
  const TruncationReport r = truncation_check(parse_omega_rule("constant:0.5"), 10, tamper);
  ASSERT_TRUE(r.violation_onset.has_value());
  EXPECT_EQ(*r.violation_onset, 3);
  for (std::size_t k = 0; k < r.sizes.size(); ++k) {
    if (r.sizes[k] >= 3) {
      EXPECT_GT(r.norms[k], 1.0 + 1e-9);
    }
  }
  EXPECT_TRUE(r.contracts_hold);
}

TEST(TruncationTest, EveryTamperPosition) {
  for (const char* rule : {"geometric:0.5", "constant:0.5", "decay:0.7"}) {
    for (Index i = 0; i < 8; ++i) {
      for (Index j = i; j < 8; ++j) {
        const TruncationReport r =
            truncation_check(parse_omega_rule(rule), 10, TruncationTamper{i, j, 0.05});
        EXPECT_TRUE(r.contracts_hold) << rule << " at " << i << "," << j;
      }
    }
  }
}

TEST(TruncationTest, InputChecks) {
  EXPECT_THROW(truncation_check(parse_omega_rule("zero"), 1, std::nullopt), InputError);
  EXPECT_THROW(truncation_check(parse_omega_rule("zero"), 5, TruncationTamper{2, 1, 0.1}),
               InputError);
  EXPECT_THROW(truncation_check(parse_omega_rule("zero"), 5, TruncationTamper{0, 5, 0.1}),
               InputError);
  EXPECT_THROW(truncation_check(parse_omega_rule("constant:1.0"), 5, std::nullopt), DomainError);
}

}  // namespace
}  // namespace contractive
