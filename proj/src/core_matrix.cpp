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

#include "contractive/core_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "contractive/errors.hpp"

namespace contractive {

namespace {

void require_finite(const Eigen::MatrixXcd& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex v = m(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream msg;
        msg << "non-finite matrix entry at (" << i << ", " << j << ")";
        throw InputError(msg.str());
      }
    }
  }
}

void require_positive_dims(Index rows, Index cols) {
  if (rows <= 0 || cols <= 0) {
    std::ostringstream msg;
    msg << "matrix dimensions must be positive, got " << rows << "x" << cols;
    throw DimensionError(msg.str());
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs "
        << b.rows() << "x" << b.cols();
    throw DimensionError(msg.str());
  }
}

Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& h) {
  return 0.5 * (h + h.adjoint());
}

}  // namespace

ComplexMatrix::ComplexMatrix(Index rows, Index cols) {
  require_positive_dims(rows, cols);
  values_ = Eigen::MatrixXcd::Zero(rows, cols);
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd values) : values_(std::move(values)) {
  require_positive_dims(values_.rows(), values_.cols());
  require_finite(values_);
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n_rows = static_cast<Index>(rows.size());
  const auto n_cols = n_rows > 0 ? static_cast<Index>(rows.begin()->size()) : 0;
  require_positive_dims(n_rows, n_cols);
  values_.resize(n_rows, n_cols);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n_cols) {
      throw DimensionError("ragged matrix literal");
    }
    Index j = 0;
    for (const Complex& v : row) values_(i, j++) = v;
    ++i;
  }
  require_finite(values_);
}

ComplexMatrix ComplexMatrix::identity(Index n) {
  require_positive_dims(n, n);
  return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  const auto n = static_cast<Index>(values.size());
  ComplexMatrix out(n, n);
  for (Index i = 0; i < n; ++i) out.set(i, i, values[i]);
  return out;
}

ComplexMatrix ComplexMatrix::from_row_major(Index rows, Index cols,
                                            std::span<const Complex> entries) {
  require_positive_dims(rows, cols);
  if (static_cast<Index>(entries.size()) != rows * cols) {
    std::ostringstream msg;
    msg << "expected " << rows * cols << " entries for a " << rows << "x" << cols
        << " matrix, got " << entries.size();
    throw DimensionError(msg.str());
  }
  Eigen::MatrixXcd m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = entries[i * cols + j];
  }
  return ComplexMatrix(std::move(m));
}

void ComplexMatrix::set(Index i, Index j, Complex value) {
  if (i < 0 || j < 0 || i >= rows() || j >= cols()) {
    throw DimensionError("matrix index out of range");
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw InputError("non-finite matrix entry");
  }
  values_(i, j) = value;
}

std::vector<Complex> ComplexMatrix::row_major_entries() const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(rows() * cols()));
  for (Index i = 0; i < rows(); ++i) {
    for (Index j = 0; j < cols(); ++j) out.push_back(values_(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  return ComplexMatrix(Eigen::MatrixXcd(values_.adjoint()));
}

ComplexMatrix ComplexMatrix::block(Index row, Index col, Index n_rows,
                                   Index n_cols) const {
  if (row < 0 || col < 0 || n_rows <= 0 || n_cols <= 0 ||
      row + n_rows > rows() || col + n_cols > cols()) {
    throw DimensionError("block out of range");
  }
  return ComplexMatrix(Eigen::MatrixXcd(values_.block(row, col, n_rows, n_cols)));
}

std::vector<Complex> ComplexMatrix::diagonal_entries() const {
  const Index n = std::min(rows(), cols());
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = values_(i, i);
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_shape(*this, other, "max_abs_diff");
  return (values_ - other.values_).cwiseAbs().maxCoeff();
}

double ComplexMatrix::max_abs() const { return values_.cwiseAbs().maxCoeff(); }

bool ComplexMatrix::is_upper_triangular() const {
  for (Index j = 0; j < cols(); ++j) {
    for (Index i = j + 1; i < rows(); ++i) {
      if (values_(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "product: inner dimensions " << a.cols() << " and " << b.rows()
        << " differ";
    throw DimensionError(msg.str());
  }
  return ComplexMatrix(Eigen::MatrixXcd(a.values_ * b.values_));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "sum");
  return ComplexMatrix(Eigen::MatrixXcd(a.values_ + b.values_));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "difference");
  return ComplexMatrix(Eigen::MatrixXcd(a.values_ - b.values_));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  return ComplexMatrix(Eigen::MatrixXcd(s * a.values_));
}

void Tolerances::validate() const {
  const auto check = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InputError(std::string("tolerance ") + name +
                       " must be strictly positive");
    }
  };
  check(eig_tol, "eig_tol");
  check(rank_tol, "rank_tol");
  check(cert_tol, "cert_tol");
  check(solve_tol, "solve_tol");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kStrict:
      return "STRICT";
    case Verdict::kContraction:
      return "CONTRACTION";
    case Verdict::kViolation:
      return "VIOLATION";
  }
  return "UNKNOWN";
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.eigen());
  const Eigen::VectorXd& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double spectral_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.eigen());
  return svd.singularValues()(0);
}

ContractionCertificate is_contraction(const ComplexMatrix& m,
                                      const Tolerances& tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.eigen(), Eigen::ComputeFullV);
  ContractionCertificate cert;
  cert.norm = svd.singularValues()(0);
  if (cert.norm <= 1.0 - tol.cert_tol) {
    cert.verdict = Verdict::kStrict;
  } else if (cert.norm <= 1.0 + tol.cert_tol) {
    cert.verdict = Verdict::kContraction;
  } else {
    cert.verdict = Verdict::kViolation;
    const Eigen::VectorXcd v = svd.matrixV().col(0);
    cert.witness = std::vector<Complex>(v.data(), v.data() + v.size());
  }
  const Eigen::MatrixXcd defect =
      Eigen::MatrixXcd::Identity(m.cols(), m.cols()) - m.eigen().adjoint() * m.eigen();
  cert.defect_rank = numerical_rank(ComplexMatrix(defect), tol);
  return cert;
}

DefectSpectrum defect_spectrum(const ComplexMatrix& t, const Tolerances& tol) {
  const Eigen::MatrixXcd e = hermitian_part(
      Eigen::MatrixXcd::Identity(t.cols(), t.cols()) - t.eigen().adjoint() * t.eigen());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(e);
  const double smallest = eig.eigenvalues()(0);
  if (smallest < -tol.eig_tol) {
    std::ostringstream msg;
    msg << "not a contraction: Id - T*T has eigenvalue " << smallest;
    throw NotContractionError(msg.str(), smallest);
  }
  return {eig.eigenvalues(), eig.eigenvectors()};
}

ComplexMatrix defect_operator(const ComplexMatrix& t, const Tolerances& tol) {
  const DefectSpectrum spec = defect_spectrum(t, tol);
  const Eigen::VectorXd roots = spec.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXcd d =
      spec.eigenvectors * roots.cast<Complex>().asDiagonal() * spec.eigenvectors.adjoint();
  return ComplexMatrix(hermitian_part(d));
}

ComplexMatrix defect_pseudo_inverse(const ComplexMatrix& t, const Tolerances& tol) {
  const DefectSpectrum spec = defect_spectrum(t, tol);
  const double cutoff =
      tol.rank_tol * std::max(1.0, spec.eigenvalues(spec.eigenvalues.size() - 1));
  Eigen::VectorXd inv_roots(spec.eigenvalues.size());
  for (Index k = 0; k < spec.eigenvalues.size(); ++k) {
    const double lambda = spec.eigenvalues(k);
    inv_roots(k) = lambda > cutoff ? 1.0 / std::sqrt(lambda) : 0.0;
  }
  Eigen::MatrixXcd p = spec.eigenvectors * inv_roots.cast<Complex>().asDiagonal() *
                       spec.eigenvectors.adjoint();
  return ComplexMatrix(hermitian_part(p));
}

Index numerical_rank(const ComplexMatrix& h, const Tolerances& tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h.eigen());
  const Eigen::VectorXd& s = svd.singularValues();
  const double cutoff = tol.rank_tol * std::max(1.0, s(0));
  return static_cast<Index>((s.array() > cutoff).count());
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& m, const Tolerances& tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.eigen(),
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cutoff = tol.rank_tol * std::max(1.0, s(0));
  Eigen::VectorXd inv(s.size());
  for (Index k = 0; k < s.size(); ++k) inv(k) = s(k) > cutoff ? 1.0 / s(k) : 0.0;
  return ComplexMatrix(Eigen::MatrixXcd(
      svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint()));
}

double resolvent_smallest_singular_value(const ComplexMatrix& t, Complex w) {
  if (!t.is_square()) throw DimensionError("resolvent of a non-square matrix");
  const Eigen::MatrixXcd r =
      Eigen::MatrixXcd::Identity(t.rows(), t.rows()) - std::conj(w) * t.eigen();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

ComplexMatrix solve_resolvent(const ComplexMatrix& t, Complex w,
                              const ComplexMatrix& x, const Tolerances& tol) {
  if (!t.is_square()) throw DimensionError("resolvent of a non-square matrix");
  if (x.rows() != t.rows()) {
    throw DimensionError("resolvent right-hand side has the wrong row count");
  }
  const double sigma_min = resolvent_smallest_singular_value(t, w);
  if (sigma_min <= tol.rank_tol) {
    std::ostringstream msg;
    msg << "singular resolvent: sigma_min(Id - conj(w) T) = " << sigma_min;
    throw SingularityError(msg.str(), sigma_min);
  }
  const Eigen::MatrixXcd r =
      Eigen::MatrixXcd::Identity(t.rows(), t.rows()) - std::conj(w) * t.eigen();
  const Eigen::MatrixXcd& rhs = x.eigen();
  Eigen::MatrixXcd y;
  Eigen::MatrixXcd residual;
  if (t.is_upper_triangular()) {
    const auto tri = r.triangularView<Eigen::Upper>();
    y = tri.solve(rhs);
    residual = rhs - r * y;
    y += tri.solve(residual);
  } else {
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(r);
    y = lu.solve(rhs);
    residual = rhs - r * y;
    y += lu.solve(residual);
  }
  residual = rhs - r * y;
  const double bound = tol.solve_tol * std::max(rhs.norm(), 1e-300);
  if (residual.norm() > bound) {
    std::ostringstream msg;
    msg << "ill-conditioned resolvent: residual " << residual.norm()
        << " exceeds " << bound << " (sigma_min = " << sigma_min << ")";
    throw SingularityError(msg.str(), sigma_min);
  }
  return ComplexMatrix(std::move(y));
}

}  // namespace contractive
