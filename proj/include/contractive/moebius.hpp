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

#ifndef CONTRACTIVE_MOEBIUS_HPP_
#define CONTRACTIVE_MOEBIUS_HPP_

#include <span>

#include "contractive/core_matrix.hpp"

namespace contractive {

/// Parameter of the disk automorphism z -> (omega - z) / (1 - conj(omega) z).
class MoebiusParam {
 public:
  /// Throws DomainError unless |omega| < 1.
  explicit MoebiusParam(Complex omega);
  Complex omega() const { return omega_; }

 private:
  Complex omega_;
};

Complex moebius_scalar(const MoebiusParam& m, Complex z);

/// (omega Id - T)(Id - conj(omega) T)^{-1}, computed as one resolvent solve
/// applied to the numerator. Upper-triangular T gives an upper-triangular
/// result whose diagonal is the scalar map applied to diag(T).
ComplexMatrix moebius_matrix(const MoebiusParam& m, const ComplexMatrix& t,
                             const Tolerances& tol = {});

/// Distance from the unit circle below which a conditioning warning is raised.
inline constexpr double kNearBoundaryMargin = 1e-3;

struct MoebiusResult {
  ComplexMatrix matrix;
  /// 1 / sigma_min(Id - conj(omega) T).
  double condition = 0.0;
  /// |omega| or ||T|| within kNearBoundaryMargin of 1.
  bool near_boundary = false;
};

MoebiusResult moebius_matrix_report(const MoebiusParam& m, const ComplexMatrix& t,
                                    const Tolerances& tol = {});

/// max |M_w(M_w(T)) - T|.
double check_involution(const MoebiusParam& m, const ComplexMatrix& t,
                        const Tolerances& tol = {});

/// With y = (Id - conj(w) T)^{-1} x, the absolute gap between
///   ||x||^2 - ||M_w(T) x||^2   and   (1 - |w|^2)(||y||^2 - ||T y||^2).
double moebius_norm_identity_residual(const MoebiusParam& m, const ComplexMatrix& t,
                                      std::span<const Complex> x,
                                      const Tolerances& tol = {});

}  // namespace contractive

#endif  // CONTRACTIVE_MOEBIUS_HPP_
