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

#ifndef CONTRACTIVE_MODEL_MATRIX_HPP_
#define CONTRACTIVE_MODEL_MATRIX_HPP_

#include <span>
#include <vector>

#include "contractive/core_matrix.hpp"

namespace contractive {

/// Ordered points of the open unit disk (the eigenvalues of the model matrix
/// and the zeros of its Blaschke product). Repeated points are allowed.
class ModelParameters {
 public:
  /// Points within this distance of the unit circle are rejected.
  static constexpr double kBoundaryMargin = 1e-14;

  /// Throws DomainError if some |omega_k| >= 1 - kBoundaryMargin, InputError
  /// if the list is empty or holds a non-finite value.
  explicit ModelParameters(std::vector<Complex> omegas);

  Index size() const { return static_cast<Index>(omegas_.size()); }
  std::span<const Complex> omegas() const { return omegas_; }
  Complex operator[](Index k) const { return omegas_[static_cast<std::size_t>(k)]; }

  /// sqrt(1 - |omega_k|^2).
  double defect_scalar(Index k) const;
  double max_modulus() const;

 private:
  std::vector<Complex> omegas_;
};

/// sqrt(max(0, 1 - |w|^2)) evaluated as sqrt((1 - |w|)(1 + |w|)).
double defect_scalar(Complex w);

/// Diagonal plus first superdiagonal of an upper-triangular matrix.
struct PrescribedBand {
  std::vector<Complex> diagonal;
  std::vector<double> superdiagonal;
};

/// Upper-triangular n x n model matrix:
///   [M]_jj = omega_j,
///   [M]_ij = prod_{k=i+1}^{j-1} (-conj(omega_k)) * s_i * s_j   for i < j.
ComplexMatrix build_model_matrix(const ModelParameters& p);

/// alpha_i = s_i * s_{i+1}. Requires n >= 2.
PrescribedBand prescribed_superdiagonal(const ModelParameters& p);

struct SnClassReport {
  bool contraction = false;         ///< is_contraction verdict is not VIOLATION
  bool spectrum_in_disk = false;    ///< every |lambda| < 1 - rank_tol
  Index defect_rank = 0;            ///< numerical_rank(Id - A*A)
  double norm = 0.0;
  double spectral_radius = 0.0;

  bool member() const { return contraction && spectrum_in_disk && defect_rank == 1; }
};

/// Membership test for the class S_n: contractions with spectrum in the open
/// disk and rank-one defect.
SnClassReport is_sn_class(const ComplexMatrix& a, const Tolerances& tol = {});

}  // namespace contractive

#endif  // CONTRACTIVE_MODEL_MATRIX_HPP_
