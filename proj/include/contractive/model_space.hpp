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

#ifndef CONTRACTIVE_MODEL_SPACE_HPP_
#define CONTRACTIVE_MODEL_SPACE_HPP_

#include <span>
#include <vector>

#include "contractive/core_matrix.hpp"
#include "contractive/model_matrix.hpp"

namespace contractive {

/// b_w(z) = (z - w) / (1 - conj(w) z). Throws DomainError if |w| >= 1 or z
/// is the pole 1/conj(w).
Complex blaschke_factor(Complex w, Complex z);

/// Finite Blaschke product with the zeros in p.
Complex blaschke_product(const ModelParameters& p, Complex z);

/// Takenaka-Malmquist-Walsh basis of the model space for the Blaschke
/// product with zeros p. Indices are zero-based: evaluate(0, z) is the
/// normalized Szego kernel at omega_0.
class TmwBasis {
 public:
  explicit TmwBasis(ModelParameters params) : params_(std::move(params)) {}

  const ModelParameters& params() const { return params_; }
  Index size() const { return params_.size(); }

  Complex evaluate(Index k, Complex z) const;
  /// All basis functions at z; O(n) via the running partial product.
  std::vector<Complex> evaluate_all(Complex z) const;

 private:
  ModelParameters params_;
};

/// Uniform trapezoid rule on the unit circle: nodes exp(2 pi i j / N),
/// weights 1/N.
class QuadratureGrid {
 public:
  /// Throws InputError for N < 4.
  explicit QuadratureGrid(Index nodes);

  Index size() const { return static_cast<Index>(nodes_.size()); }
  std::span<const Complex> nodes() const { return nodes_; }
  double weight() const { return 1.0 / static_cast<double>(nodes_.size()); }

 private:
  std::vector<Complex> nodes_;
};

/// Node count large enough for the trapezoid rule to reach target_tol:
/// max(128, ceil(log(target_tol) / log(max|omega| + 1e-3)) + 4n).
Index recommended_nodes(const ModelParameters& p, double target_tol);

/// Points at or beyond this modulus degrade the geometric convergence rate.
inline constexpr double kLowAccuracyModulus = 0.95;

/// Sum with a fixed binary reduction tree; the result depends only on the
/// input order, never on how the work is scheduled.
Complex pairwise_sum(std::span<const Complex> terms);

/// G_ij = (1/N) sum_l phi_i(z_l) conj(phi_j(z_l)); approximates Id.
ComplexMatrix gram_matrix(const TmwBasis& basis, const QuadratureGrid& grid);

/// Entry (i, j) is (1/N) sum_l z_l phi_i(z_l) conj(phi_j(z_l)), the H^2
/// pairing <z phi_i, phi_j>. Since phi_j lies in the model space this is a
/// compressed-shift matrix element, and the result approximates the (upper
/// triangular) model matrix. Note the order: <z phi_j, phi_i> with this basis
/// gives the transpose, e.g. the lower shift when every point is zero.
ComplexMatrix compressed_shift_by_quadrature(const TmwBasis& basis,
                                             const QuadratureGrid& grid);

/// sum_{k < n} (1 - |omega_k|). Throws DomainError if any |omega_k| >= 1.
double blaschke_condition_partial(std::span<const Complex> omegas, Index n);

struct TmwVerification {
  double gram_defect = 0.0;   ///< max |G - Id|
  double entry_defect = 0.0;  ///< max |quadrature matrix - model matrix|
  Index nodes = 0;
  double max_omega = 0.0;
  bool low_accuracy = false;  ///< max_omega >= kLowAccuracyModulus
};

TmwVerification tmw_verify(const ModelParameters& p, Index nodes);

}  // namespace contractive

#endif  // CONTRACTIVE_MODEL_SPACE_HPP_
