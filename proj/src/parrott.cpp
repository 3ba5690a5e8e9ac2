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

#include "contractive/parrott.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "contractive/errors.hpp"

namespace contractive {

namespace {

void require_contraction(const ComplexMatrix& m, const Tolerances& tol,
                         const char* what) {
  const double norm = spectral_norm(m);
  if (norm > 1.0 + tol.cert_tol) {
    std::ostringstream msg;
    msg << what << " has spectral norm " << norm << " > 1";
    throw NotContractionError(msg.str(), 1.0 - norm * norm);
  }
}

Complex scalar(const ComplexMatrix& m) { return m(0, 0); }

}  // namespace

ParrottBlocks::ParrottBlocks(ComplexMatrix a, ComplexMatrix c, ComplexMatrix d,
                             const Tolerances& tol)
    : a_(std::move(a)), c_(std::move(c)), d_(std::move(d)) {
  if (a_.cols() != c_.cols()) {
    throw DimensionError("A and C must have the same number of columns");
  }
  if (c_.rows() != d_.rows()) {
    throw DimensionError("C and D must have the same number of rows");
  }
  require_contraction(column(), tol, "column [A; C]");
  require_contraction(row(), tol, "row [C D]");
}

ComplexMatrix ParrottBlocks::column() const {
  Eigen::MatrixXcd m(k1() + k2(), h1());
  m << a_.eigen(), c_.eigen();
  return ComplexMatrix(std::move(m));
}

ComplexMatrix ParrottBlocks::row() const {
  Eigen::MatrixXcd m(k2(), h1() + h2());
  m << c_.eigen(), d_.eigen();
  return ComplexMatrix(std::move(m));
}

FactorPair solve_factors(const ParrottBlocks& blocks, const Tolerances& tol) {
  const ComplexMatrix c_adj = blocks.c().adjoint();
  const ComplexMatrix defect_c = defect_operator(blocks.c(), tol);
  const ComplexMatrix defect_c_adj = defect_operator(c_adj, tol);

  ComplexMatrix z = blocks.a() * defect_pseudo_inverse(blocks.c(), tol);
  ComplexMatrix y = defect_pseudo_inverse(c_adj, tol) * blocks.d();
  const double residual_a = spectral_norm(blocks.a() - z * defect_c);
  const double residual_d = spectral_norm(blocks.d() - defect_c_adj * y);
  if (residual_a > tol.solve_tol || residual_d > tol.solve_tol) {
    std::ostringstream msg;
    msg << "inconsistent factorization: ||A - Z D_C|| = " << residual_a
        << ", ||D - D_C* Y|| = " << residual_d;
    throw InconsistentFactorizationError(msg.str(), residual_a, residual_d);
  }
  const double norm_z = spectral_norm(z);
  const double norm_y = spectral_norm(y);
  if (norm_z > 1.0 + tol.cert_tol || norm_y > 1.0 + tol.cert_tol) {
    std::ostringstream msg;
    msg << "inconsistent factorization: ||Z|| = " << norm_z << ", ||Y|| = " << norm_y;
    throw InconsistentFactorizationError(msg.str(), residual_a, residual_d);
  }
  return {std::move(z), std::move(y), residual_a, residual_d};
}

bool FeasibilityDisk::contains(Complex b, const Tolerances& tol) const {
  return std::abs(b - center) <= radius + tol.cert_tol;
}

FeasibilityDisk scalar_feasibility_disk(const ParrottBlocks& blocks,
                                        const Tolerances& tol) {
  if (!blocks.scalar_corner()) {
    std::ostringstream msg;
    msg << "feasibility disk needs a 1x1 corner, got " << blocks.k1() << "x"
        << blocks.h2();
    throw DimensionError(msg.str());
  }
  const FactorPair f = solve_factors(blocks, tol);
  const double zz = f.z.eigen().squaredNorm();
  const double yy = f.y.eigen().squaredNorm();
  FeasibilityDisk disk;
  disk.center = -scalar(f.z * blocks.c().adjoint() * f.y);
  disk.radius = std::sqrt(std::max(0.0, (1.0 - zz) * (1.0 - yy)));
  return disk;
}

ComplexMatrix assemble(const ParrottBlocks& blocks, const ComplexMatrix& b) {
  if (b.rows() != blocks.k1() || b.cols() != blocks.h2()) {
    std::ostringstream msg;
    msg << "corner must be " << blocks.k1() << "x" << blocks.h2() << ", got "
        << b.rows() << "x" << b.cols();
    throw DimensionError(msg.str());
  }
  Eigen::MatrixXcd t(blocks.k1() + blocks.k2(), blocks.h1() + blocks.h2());
  t << blocks.a().eigen(), b.eigen(), blocks.c().eigen(), blocks.d().eigen();
  return ComplexMatrix(std::move(t));
}

ComplexMatrix central_completion(const ParrottBlocks& blocks, const Tolerances& tol) {
  const FactorPair f = solve_factors(blocks, tol);
  ComplexMatrix b = Complex(-1.0, 0.0) * (f.z * blocks.c().adjoint() * f.y);
  const double norm = spectral_norm(assemble(blocks, b));
  if (norm > 1.0 + tol.cert_tol) {
    std::ostringstream msg;
    msg << "central completion has assembled norm " << norm << " > 1";
    throw InconsistentFactorizationError(msg.str(), f.residual_a, f.residual_d);
  }
  return b;
}

MinimalNormCompletion minimal_norm_completion(const ParrottBlocks& blocks,
                                              const Tolerances& tol) {
  const double level =
      std::max(spectral_norm(blocks.column()), spectral_norm(blocks.row()));
  if (level == 0.0) {
    ComplexMatrix b(blocks.k1(), blocks.h2());
    return {b, 0.0, spectral_norm(assemble(blocks, b))};
  }
  const Complex inv(1.0 / level, 0.0);
  const ParrottBlocks scaled(inv * blocks.a(), inv * blocks.c(), inv * blocks.d(), tol);
  ComplexMatrix b = Complex(level, 0.0) * central_completion(scaled, tol);
  const double norm = spectral_norm(assemble(blocks, b));
  return {std::move(b), level, norm};
}

}  // namespace contractive
