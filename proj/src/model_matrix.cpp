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

#include "contractive/model_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "contractive/errors.hpp"

namespace contractive {

ModelParameters::ModelParameters(std::vector<Complex> omegas)
    : omegas_(std::move(omegas)) {
  if (omegas_.empty()) throw InputError("model parameters need at least one point");
  for (std::size_t k = 0; k < omegas_.size(); ++k) {
    const Complex w = omegas_[k];
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw InputError("non-finite omega at index " + std::to_string(k));
    }
    if (std::abs(w) >= 1.0 - kBoundaryMargin) {
      std::ostringstream msg;
      msg << "omega[" << k << "] = " << w << " is not in the open unit disk";
      throw DomainError(msg.str());
    }
  }
}

double ModelParameters::defect_scalar(Index k) const {
  return contractive::defect_scalar((*this)[k]);
}

double ModelParameters::max_modulus() const {
  double m = 0.0;
  for (const Complex& w : omegas_) m = std::max(m, std::abs(w));
  return m;
}

double defect_scalar(Complex w) {
  const double r = std::abs(w);
  return std::sqrt(std::max(0.0, (1.0 - r) * (1.0 + r)));
}

ComplexMatrix build_model_matrix(const ModelParameters& p) {
  const Index n = p.size();
  ComplexMatrix m(n, n);
  for (Index j = 0; j < n; ++j) m.set(j, j, p[j]);
  for (Index i = 0; i < n; ++i) {
    const double s_i = p.defect_scalar(i);
    // Running product of -conj(omega_k) for k strictly between i and j.
    Complex chain(1.0, 0.0);
    for (Index j = i + 1; j < n; ++j) {
      if (j > i + 1) chain *= -std::conj(p[j - 1]);
      m.set(i, j, chain * s_i * p.defect_scalar(j));
    }
  }
  return m;
}

PrescribedBand prescribed_superdiagonal(const ModelParameters& p) {
  if (p.size() < 2) throw InputError("a superdiagonal needs n >= 2");
  PrescribedBand band;
  band.diagonal.assign(p.omegas().begin(), p.omegas().end());
  band.superdiagonal.reserve(static_cast<std::size_t>(p.size() - 1));
  for (Index i = 0; i + 1 < p.size(); ++i) {
    band.superdiagonal.push_back(p.defect_scalar(i) * p.defect_scalar(i + 1));
  }
  return band;
}

SnClassReport is_sn_class(const ComplexMatrix& a, const Tolerances& tol) {
  if (!a.is_square()) throw DimensionError("S_n membership needs a square matrix");
  SnClassReport report;
  const ContractionCertificate cert = is_contraction(a, tol);
  report.norm = cert.norm;
  report.contraction = cert.is_contraction();
  report.defect_rank = cert.defect_rank;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(a.eigen(), false);
  report.spectral_radius = eig.eigenvalues().cwiseAbs().maxCoeff();
  report.spectrum_in_disk = report.spectral_radius < 1.0 - tol.rank_tol;
  return report;
}

}  // namespace contractive
