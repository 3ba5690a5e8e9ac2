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

#include "contractive/moebius.hpp"

#include <cmath>
#include <sstream>

#include "contractive/errors.hpp"

namespace contractive {

MoebiusParam::MoebiusParam(Complex omega) : omega_(omega) {
  if (!std::isfinite(omega.real()) || !std::isfinite(omega.imag()) ||
      !(std::abs(omega) < 1.0)) {
    std::ostringstream msg;
    msg << "Moebius parameter " << omega << " is not in the open unit disk";
    throw DomainError(msg.str());
  }
}

Complex moebius_scalar(const MoebiusParam& m, Complex z) {
  const Complex w = m.omega();
  const Complex den = 1.0 - std::conj(w) * z;
  if (std::abs(den) < 1e-14) {
    std::ostringstream msg;
    msg << "Moebius map evaluated at its pole 1/conj(" << w << ")";
    throw DomainError(msg.str());
  }
  return (w - z) / den;
}

MoebiusResult moebius_matrix_report(const MoebiusParam& m, const ComplexMatrix& t,
                                    const Tolerances& tol) {
  if (!t.is_square()) throw DimensionError("Moebius map of a non-square matrix");
  const Complex w = m.omega();
  const ComplexMatrix numerator = w * ComplexMatrix::identity(t.rows()) - t;
  ComplexMatrix result = [&] {
    try {
      return solve_resolvent(t, w, numerator, tol);
    } catch (const SingularityError& e) {
      // Name the eigenvalue of T closest to the pole 1/conj(w).
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(t.eigen(), false);
      Complex nearest = eig.eigenvalues()(0);
      if (w != Complex(0.0, 0.0)) {
        const Complex pole = 1.0 / std::conj(w);
        for (Index k = 1; k < eig.eigenvalues().size(); ++k) {
          if (std::abs(eig.eigenvalues()(k) - pole) < std::abs(nearest - pole)) {
            nearest = eig.eigenvalues()(k);
          }
        }
      }
      std::ostringstream msg;
      msg << e.what() << "; eigenvalue " << nearest << " of T is near 1/conj(omega)";
      throw SingularityError(msg.str(), e.smallest_singular_value());
    }
  }();
  const double sigma_min = resolvent_smallest_singular_value(t, w);
  const bool near = std::abs(w) > 1.0 - kNearBoundaryMargin ||
                    std::abs(spectral_norm(t) - 1.0) < kNearBoundaryMargin;
  return {std::move(result), 1.0 / sigma_min, near};
}

ComplexMatrix moebius_matrix(const MoebiusParam& m, const ComplexMatrix& t,
                             const Tolerances& tol) {
  return moebius_matrix_report(m, t, tol).matrix;
}

double check_involution(const MoebiusParam& m, const ComplexMatrix& t,
                        const Tolerances& tol) {
  return moebius_matrix(m, moebius_matrix(m, t, tol), tol).max_abs_diff(t);
}

double moebius_norm_identity_residual(const MoebiusParam& m, const ComplexMatrix& t,
                                      std::span<const Complex> x,
                                      const Tolerances& tol) {
  if (static_cast<Index>(x.size()) != t.cols()) {
    throw DimensionError("vector length does not match the matrix");
  }
  const ComplexMatrix xv = ComplexMatrix::from_row_major(t.cols(), 1, x);
  const ComplexMatrix y = solve_resolvent(t, m.omega(), xv, tol);
  const ComplexMatrix mx = moebius_matrix(m, t, tol) * xv;
  const ComplexMatrix ty = t * y;
  const double lhs = xv.eigen().squaredNorm() - mx.eigen().squaredNorm();
  const double rhs = (1.0 - std::norm(m.omega())) *
                     (y.eigen().squaredNorm() - ty.eigen().squaredNorm());
  return std::abs(lhs - rhs);
}

}  // namespace contractive
