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

#include "contractive/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "contractive/errors.hpp"

namespace contractive {

namespace {

// |1 - conj(w) z| below this is treated as the pole.
constexpr double kPoleGuard = 1e-14;

void require_in_disk(Complex w) {
  if (!(std::abs(w) < 1.0)) {
    std::ostringstream msg;
    msg << "Blaschke zero " << w << " is not in the open unit disk";
    throw DomainError(msg.str());
  }
}

Complex pole_checked_denominator(Complex w, Complex z) {
  const Complex den = 1.0 - std::conj(w) * z;
  if (std::abs(den) < kPoleGuard) {
    std::ostringstream msg;
    msg << "evaluation at the pole 1/conj(" << w << ")";
    throw DomainError(msg.str());
  }
  return den;
}

// Values of every basis function at every node, row l = node l.
Eigen::MatrixXcd tabulate(const TmwBasis& basis, const QuadratureGrid& grid) {
  const auto nodes = grid.nodes();
  Eigen::MatrixXcd table(grid.size(), basis.size());
  for (Index l = 0; l < grid.size(); ++l) {
    const std::vector<Complex> row = basis.evaluate_all(nodes[static_cast<std::size_t>(l)]);
    for (Index k = 0; k < basis.size(); ++k) table(l, k) = row[static_cast<std::size_t>(k)];
  }
  return table;
}

}  // namespace

Complex blaschke_factor(Complex w, Complex z) {
  require_in_disk(w);
  return (z - w) / pole_checked_denominator(w, z);
}

Complex blaschke_product(const ModelParameters& p, Complex z) {
  Complex value(1.0, 0.0);
  for (const Complex& w : p.omegas()) value *= blaschke_factor(w, z);
  return value;
}

Complex TmwBasis::evaluate(Index k, Complex z) const {
  if (k < 0 || k >= size()) {
    std::ostringstream msg;
    msg << "basis index " << k << " out of range [0, " << size() << ")";
    throw InputError(msg.str());
  }
  Complex partial(1.0, 0.0);
  for (Index j = 0; j < k; ++j) partial *= blaschke_factor(params_[j], z);
  return partial * params_.defect_scalar(k) / pole_checked_denominator(params_[k], z);
}

std::vector<Complex> TmwBasis::evaluate_all(Complex z) const {
  std::vector<Complex> out(static_cast<std::size_t>(size()));
  Complex partial(1.0, 0.0);
  for (Index k = 0; k < size(); ++k) {
    const Complex w = params_[k];
    const Complex den = pole_checked_denominator(w, z);
    out[static_cast<std::size_t>(k)] = partial * params_.defect_scalar(k) / den;
    partial *= (z - w) / den;
  }
  return out;
}

QuadratureGrid::QuadratureGrid(Index nodes) {
  if (nodes < 4) throw InputError("quadrature grid needs at least 4 nodes");
  nodes_.resize(static_cast<std::size_t>(nodes));
  for (Index j = 0; j < nodes; ++j) {
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes);
    nodes_[static_cast<std::size_t>(j)] = Complex(std::cos(theta), std::sin(theta));
  }
}

Index recommended_nodes(const ModelParameters& p, double target_tol) {
  if (!(target_tol > 0.0 && target_tol < 1.0)) {
    throw InputError("quadrature target tolerance must lie in (0, 1)");
  }
  const double rate = std::log(p.max_modulus() + 1e-3);
  const auto by_rate = static_cast<Index>(std::ceil(std::log(target_tol) / rate));
  return std::max<Index>(128, by_rate + 4 * p.size());
}

Complex pairwise_sum(std::span<const Complex> terms) {
  constexpr std::size_t kLeaf = 8;
  if (terms.size() <= kLeaf) {
    Complex acc(0.0, 0.0);
    for (const Complex& t : terms) acc += t;
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

ComplexMatrix gram_matrix(const TmwBasis& basis, const QuadratureGrid& grid) {
  const Eigen::MatrixXcd table = tabulate(basis, grid);
  const Index n = basis.size();
  std::vector<Complex> terms(static_cast<std::size_t>(grid.size()));
  ComplexMatrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index l = 0; l < grid.size(); ++l) {
        terms[static_cast<std::size_t>(l)] = table(l, i) * std::conj(table(l, j));
      }
      g.set(i, j, pairwise_sum(terms) * grid.weight());
    }
  }
  return g;
}

ComplexMatrix compressed_shift_by_quadrature(const TmwBasis& basis,
                                             const QuadratureGrid& grid) {
  const Eigen::MatrixXcd table = tabulate(basis, grid);
  const auto nodes = grid.nodes();
  const Index n = basis.size();
  std::vector<Complex> terms(static_cast<std::size_t>(grid.size()));
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index l = 0; l < grid.size(); ++l) {
        terms[static_cast<std::size_t>(l)] =
            nodes[static_cast<std::size_t>(l)] * table(l, i) * std::conj(table(l, j));
      }
      m.set(i, j, pairwise_sum(terms) * grid.weight());
    }
  }
  return m;
}

double blaschke_condition_partial(std::span<const Complex> omegas, Index n) {
  if (n < 1) throw InputError("partial Blaschke sum needs n >= 1");
  if (n > static_cast<Index>(omegas.size())) {
    throw InputError("partial Blaschke sum longer than the sequence");
  }
  double total = 0.0;
  for (Index k = 0; k < n; ++k) {
    const Complex w = omegas[static_cast<std::size_t>(k)];
    require_in_disk(w);
    total += 1.0 - std::abs(w);
  }
  return total;
}

TmwVerification tmw_verify(const ModelParameters& p, Index nodes) {
  const TmwBasis basis(p);
  const QuadratureGrid grid(nodes);
  TmwVerification out;
  out.nodes = nodes;
  out.max_omega = p.max_modulus();
  out.low_accuracy = out.max_omega >= kLowAccuracyModulus;
  out.gram_defect =
      gram_matrix(basis, grid).max_abs_diff(ComplexMatrix::identity(p.size()));
  out.entry_defect =
      compressed_shift_by_quadrature(basis, grid).max_abs_diff(build_model_matrix(p));
  return out;
}

}  // namespace contractive
