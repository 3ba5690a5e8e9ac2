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

#include <algorithm>
#include <cmath>

#include "contractive/errors.hpp"
#include "contractive/model_matrix.hpp"
#include "contractive/random.hpp"
#include "test_support.hpp"

namespace contractive {
namespace {

using testing::to_dense;

std::vector<oracle::C> as_oracle(std::span<const Complex> w) { return {w.begin(), w.end()}; }

TEST(ModelParametersTest, Validation) {
  EXPECT_THROW(ModelParameters({}), InputError);
  EXPECT_THROW(ModelParameters({Complex(1.0, 0.0)}), DomainError);
  EXPECT_THROW(ModelParameters({Complex(0.6, 0.8)}), DomainError);
  EXPECT_THROW(ModelParameters({Complex(std::nan(""), 0.0)}), InputError);
  EXPECT_NO_THROW(ModelParameters({Complex(0.999999, 0.0)}));
}

TEST(DefectScalarTest, GuardsRounding) {
  EXPECT_EQ(defect_scalar(Complex(0.0, 0.0)), 1.0);
  EXPECT_NEAR(defect_scalar(Complex(0.5, 0.0)), std::sqrt(0.75), 1e-16);
  EXPECT_EQ(defect_scalar(Complex(1.0, 0.0)), 0.0);
}

TEST(BuildModelMatrixTest, TwoByTwo) {
  const Complex w1(0.3, -0.2);
  const Complex w2(-0.1, 0.6);
  const ComplexMatrix m = build_model_matrix(ModelParameters({w1, w2}));
  EXPECT_EQ(m(0, 0), w1);
  EXPECT_EQ(m(1, 1), w2);
  EXPECT_EQ(m(1, 0), Complex(0.0, 0.0));
  EXPECT_NEAR(std::abs(m(0, 1) - defect_scalar(w1) * defect_scalar(w2)), 0.0, 1e-15);
}

TEST(BuildModelMatrixTest, ZeroPointsGiveShift) {
  const ComplexMatrix m = build_model_matrix(ModelParameters({0.0, 0.0, 0.0}));
  const ComplexMatrix shift{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}};
  EXPECT_EQ(m, shift);
}

TEST(BuildModelMatrixTest, ThreeByThreeCorner) {
  const std::vector<Complex> w = {{0.2, 0.1}, {-0.4, 0.3}, {0.5, -0.5}};
  const ComplexMatrix m = build_model_matrix(ModelParameters(w));
  const Complex expected = -std::conj(w[1]) * defect_scalar(w[0]) * defect_scalar(w[2]);
  EXPECT_NEAR(std::abs(m(0, 2) - expected), 0.0, 1e-15);
}

TEST(BuildModelMatrixTest, SinglePoint) {
  const ComplexMatrix m = build_model_matrix(ModelParameters({Complex(0.25, 0.5)}));
  ASSERT_EQ(m.rows(), 1);
  EXPECT_EQ(m(0, 0), Complex(0.25, 0.5));
}

TEST(BuildModelMatrixTest, MatchesDirectFormula) {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    Rng rng(21, trial);
    const ModelParameters p(rng.disk_points(rng.integer(1, 10), 0.95));
    const ComplexMatrix m = build_model_matrix(p);
    EXPECT_LT(testing::max_abs_diff(m, oracle::model_matrix(as_oracle(p.omegas()))), 1e-15);
    EXPECT_TRUE(m.is_upper_triangular());
  }
}

TEST(BuildModelMatrixTest, SingularValuesAndNorm) {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    Rng rng(22, trial);
    const Index n = rng.integer(2, 9);
    const ModelParameters p(rng.disk_points(n, 0.9));
    const ComplexMatrix m = build_model_matrix(p);
    double det = 1.0;
    for (const Complex w : p.omegas()) det *= std::abs(w);
    const auto s = oracle::singular_values(to_dense(m));
    for (Index k = 0; k + 1 < n; ++k) EXPECT_NEAR(s[static_cast<std::size_t>(k)], 1.0, 1e-9);
    EXPECT_NEAR(s.back(), det, 1e-9);
    const auto cert = is_contraction(m);
    EXPECT_EQ(cert.verdict, Verdict::kContraction);
    EXPECT_NEAR(cert.norm, 1.0, 1e-10);
    EXPECT_EQ(cert.defect_rank, 1);
  }
}

TEST(BuildModelMatrixTest, RepeatedPointsSwapInvariant) {
  const Complex a(0.3, 0.3);
  const Complex b(-0.5, 0.1);
  const ComplexMatrix m1 = build_model_matrix(ModelParameters({a, b, a, b}));
  EXPECT_EQ(m1, build_model_matrix(ModelParameters({a, b, a, b})));
  const ComplexMatrix m2 = build_model_matrix(ModelParameters({a, a, b, b}));
  EXPECT_GT(m1.max_abs_diff(m2), 1e-3);
}

TEST(PrescribedSuperdiagonalTest, Examples) {
  EXPECT_EQ(prescribed_superdiagonal(ModelParameters({0.0, 0.0})).superdiagonal,
            std::vector<double>{1.0});
  EXPECT_NEAR(prescribed_superdiagonal(ModelParameters({0.5, 0.5})).superdiagonal[0], 0.75,
              1e-15);
  const PrescribedBand band =
      prescribed_superdiagonal(ModelParameters({{0.3, 0.0}, {0.0, 0.4}, {-0.5, 0.0}}));
  ASSERT_EQ(band.superdiagonal.size(), 2u);
  EXPECT_NEAR(band.superdiagonal[0], std::sqrt(0.91) * std::sqrt(0.84), 1e-12);
  EXPECT_NEAR(band.superdiagonal[1], std::sqrt(0.84) * std::sqrt(0.75), 1e-12);
  EXPECT_EQ(band.diagonal.size(), 3u);
}

TEST(PrescribedSuperdiagonalTest, NeedsTwoPoints) {
  EXPECT_THROW(prescribed_superdiagonal(ModelParameters({0.1})), InputError);
}

TEST(PrescribedSuperdiagonalTest, AgreesWithModelMatrix) {
  Rng rng(23);
  const ModelParameters p(rng.disk_points(7, 0.9));
  const PrescribedBand band = prescribed_superdiagonal(p);
  const ComplexMatrix m = build_model_matrix(p);
  for (Index i = 0; i + 1 < p.size(); ++i) {
    EXPECT_NEAR(std::abs(m(i, i + 1) - band.superdiagonal[static_cast<std::size_t>(i)]), 0.0,
                1e-12);
    EXPECT_GT(band.superdiagonal[static_cast<std::size_t>(i)], 0.0);
    EXPECT_LE(band.superdiagonal[static_cast<std::size_t>(i)], 1.0);
  }
}

TEST(SnClassTest, Examples) {
  EXPECT_TRUE(is_sn_class(build_model_matrix(ModelParameters({0.2, {0.0, 0.5}}))).member());
  const SnClassReport id = is_sn_class(ComplexMatrix::identity(2));
  EXPECT_FALSE(id.member());
  EXPECT_FALSE(id.spectrum_in_disk);
  const SnClassReport d = is_sn_class(ComplexMatrix::diagonal(std::vector<Complex>{0.5, 0.5}));
  EXPECT_FALSE(d.member());
  EXPECT_EQ(d.defect_rank, 2);
  EXPECT_THROW(is_sn_class(ComplexMatrix(2, 3)), DimensionError);
}

TEST(SnClassTest, UnitaryConjugatesOfModelsAreMembers) {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng rng(24, trial);
    const Index n = rng.integer(2, 7);
    const ModelParameters p(rng.disk_points(n, 0.9));
    const ComplexMatrix u = rng.unitary(n);
    const ComplexMatrix a = u.adjoint() * build_model_matrix(p) * u;
    const SnClassReport r = is_sn_class(a);
    EXPECT_TRUE(r.member());
    EXPECT_NEAR(r.spectral_radius, p.max_modulus(), 1e-8);
  }
}

}  // namespace
}  // namespace contractive
