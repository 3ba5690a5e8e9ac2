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

#ifndef CONTRACTIVE_CORE_MATRIX_HPP_
#define CONTRACTIVE_CORE_MATRIX_HPP_

#include <complex>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace contractive {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Dense complex matrix with positive dimensions and finite entries.
///
/// Thin value wrapper over Eigen::MatrixXcd. Every constructor and mutator
/// re-establishes the invariants, so a ComplexMatrix in hand is always safe to
/// feed to the kernels below without further validation.
class ComplexMatrix {
 public:
  /// Zero matrix.
  ComplexMatrix(Index rows, Index cols);
  /// Takes ownership of an Eigen matrix; throws InputError on empty
  /// dimensions or non-finite entries.
  explicit ComplexMatrix(Eigen::MatrixXcd values);
  /// Row-major nested literal, e.g. {{1, 2}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(Index n);
  static ComplexMatrix zeros(Index rows, Index cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const Complex> values);
  /// Row-major flat entries; length must equal rows * cols.
  static ComplexMatrix from_row_major(Index rows, Index cols,
                                      std::span<const Complex> entries);

  Index rows() const { return values_.rows(); }
  Index cols() const { return values_.cols(); }
  bool is_square() const { return rows() == cols(); }

  Complex operator()(Index i, Index j) const { return values_(i, j); }
  void set(Index i, Index j, Complex value);

  const Eigen::MatrixXcd& eigen() const { return values_; }
  std::vector<Complex> row_major_entries() const;

  ComplexMatrix adjoint() const;
  ComplexMatrix block(Index row, Index col, Index rows, Index cols) const;
  std::vector<Complex> diagonal_entries() const;

  /// max_{ij} |a_ij - b_ij|; dimensions must agree.
  double max_abs_diff(const ComplexMatrix& other) const;
  double max_abs() const;
  /// True when every entry strictly below the diagonal is exactly zero.
  bool is_upper_triangular() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.values_ == b.values_;
  }

 private:
  Eigen::MatrixXcd values_;
};

/// Numerical thresholds shared by every module.
struct Tolerances {
  double eig_tol = 1e-10;    ///< Hermitian eigenvalue cutoff.
  double rank_tol = 1e-8;    ///< relative singular-value cutoff for rank.
  double cert_tol = 1e-9;    ///< contraction margin.
  double solve_tol = 1e-10;  ///< residual bound for solves.

  /// Throws InputError unless all four are strictly positive and finite.
  void validate() const;
};

enum class Verdict { kStrict, kContraction, kViolation };

std::string_view to_string(Verdict v);

struct ContractionCertificate {
  Verdict verdict = Verdict::kStrict;
  double norm = 0.0;
  /// numerical_rank(Id - M*M).
  Index defect_rank = 0;
  /// Unit right singular vector of the largest singular value; present only
  /// for kViolation, where ||M x|| = norm > 1.
  std::optional<std::vector<Complex>> witness;

  bool is_contraction() const { return verdict != Verdict::kViolation; }
};

/// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix& m);

double spectral_norm(const ComplexMatrix& m);

ContractionCertificate is_contraction(const ComplexMatrix& m,
                                      const Tolerances& tol = {});

/// Eigendecomposition of the Hermitian matrix Id - T*T, ascending.
struct DefectSpectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

/// Throws NotContractionError if the smallest eigenvalue of Id - T*T is below
/// -eig_tol.
DefectSpectrum defect_spectrum(const ComplexMatrix& t, const Tolerances& tol);

/// D_T = (Id - T*T)^{1/2}, the PSD square root, with eigenvalues in
/// [-eig_tol, 0) clamped to zero.
ComplexMatrix defect_operator(const ComplexMatrix& t, const Tolerances& tol = {});

/// Moore-Penrose inverse of D_T.
///
/// The rank cutoff is applied to the eigenvalues of Id - T*T at
/// rank_tol * max(1, largest eigenvalue). Rounding of size eps in Id - T*T
/// produces spurious singular values of size sqrt(eps) ~ 1e-8 in D_T, which
/// sit right on a rank_tol cutoff applied to D_T itself.
ComplexMatrix defect_pseudo_inverse(const ComplexMatrix& t,
                                    const Tolerances& tol = {});

/// Count of singular values > rank_tol * max(1, sigma_max).
Index numerical_rank(const ComplexMatrix& h, const Tolerances& tol = {});

ComplexMatrix pseudo_inverse(const ComplexMatrix& m, const Tolerances& tol = {});

/// Solves (Id - conj(w) T) y = x for every column of x.
///
/// Upper-triangular T is solved by back substitution, so the zero pattern of
/// triangular right-hand sides is preserved exactly. Throws SingularityError
/// when sigma_min(Id - conj(w) T) <= rank_tol, and Error when the residual
/// exceeds solve_tol * ||x|| after one refinement step.
ComplexMatrix solve_resolvent(const ComplexMatrix& t, Complex w,
                              const ComplexMatrix& x, const Tolerances& tol = {});

/// Smallest singular value of Id - conj(w) T.
double resolvent_smallest_singular_value(const ComplexMatrix& t, Complex w);

}  // namespace contractive

#endif  // CONTRACTIVE_CORE_MATRIX_HPP_
