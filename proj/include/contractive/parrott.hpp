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

#ifndef CONTRACTIVE_PARROTT_HPP_
#define CONTRACTIVE_PARROTT_HPP_

#include "contractive/core_matrix.hpp"

namespace contractive {

/// Known blocks of the partially specified operator [A B; C D] with B
/// unknown. A is k1 x h1, C is k2 x h1, D is k2 x h2 and B is k1 x h2.
///
/// The column [A; C] and the row [C D] must both be contractions (within
/// cert_tol); the constructor throws NotContractionError otherwise.
class ParrottBlocks {
 public:
  ParrottBlocks(ComplexMatrix a, ComplexMatrix c, ComplexMatrix d,
                const Tolerances& tol = {});

  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& c() const { return c_; }
  const ComplexMatrix& d() const { return d_; }

  Index k1() const { return a_.rows(); }
  Index h1() const { return a_.cols(); }
  Index k2() const { return c_.rows(); }
  Index h2() const { return d_.cols(); }
  bool scalar_corner() const { return k1() == 1 && h2() == 1; }

  /// [A; C]
  ComplexMatrix column() const;
  /// [C D]
  ComplexMatrix row() const;

 private:
  ComplexMatrix a_;
  ComplexMatrix c_;
  ComplexMatrix d_;
};

/// Minimal-norm solutions of A = Z D_C and D = D_{C*} Y.
struct FactorPair {
  ComplexMatrix z;  ///< k1 x h1
  ComplexMatrix y;  ///< k2 x h2
  double residual_a = 0.0;  ///< ||A - Z D_C||
  double residual_d = 0.0;  ///< ||D - D_{C*} Y||
};

/// Z = A pinv(D_C), Y = pinv(D_{C*}) D, both residual-verified. Throws
/// InconsistentFactorizationError when a residual exceeds solve_tol or a
/// factor is not a contraction.
FactorPair solve_factors(const ParrottBlocks& blocks, const Tolerances& tol = {});

/// Admissible values of a scalar corner: the closed disk
/// |B - center| <= radius.
struct FeasibilityDisk {
  Complex center;
  double radius = 0.0;

  bool contains(Complex b, const Tolerances& tol = {}) const;
};

/// center = -Z C* Y, radius = sqrt(max(0, (1 - Z Z*)(1 - Y* Y))).
/// Requires k1 == h2 == 1 (DimensionError otherwise).
FeasibilityDisk scalar_feasibility_disk(const ParrottBlocks& blocks,
                                        const Tolerances& tol = {});

/// [A B; C D]
ComplexMatrix assemble(const ParrottBlocks& blocks, const ComplexMatrix& b);

/// The completion with free contraction W = 0, B = -Z C* Y. The assembled
/// matrix is certified by SVD before returning.
ComplexMatrix central_completion(const ParrottBlocks& blocks,
                                 const Tolerances& tol = {});

struct MinimalNormCompletion {
  ComplexMatrix b;
  double level = 0.0;           ///< max(||[A; C]||, ||[C D]||)
  double assembled_norm = 0.0;
};

/// Central completion of the blocks rescaled by 1 / level, scaled back. Its
/// assembled norm equals the lower bound max(||[A; C]||, ||[C D]||), whereas
/// the unscaled central completion only guarantees norm <= 1.
MinimalNormCompletion minimal_norm_completion(const ParrottBlocks& blocks,
                                              const Tolerances& tol = {});

}  // namespace contractive

#endif  // CONTRACTIVE_PARROTT_HPP_
