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

#include "contractive/random.hpp"

#include <cmath>

#include "contractive/errors.hpp"

namespace contractive {

std::uint64_t splitmix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * kSplitMixMul1;
  x = (x ^ (x >> 27)) * kSplitMixMul2;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master + (stream + 1) * kSplitMixIncrement);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Index Rng::integer(Index lo, Index hi) {
  if (hi < lo) throw InputError("empty integer range");
  const auto span = static_cast<double>(hi - lo + 1);
  const auto k = static_cast<Index>(std::floor(uniform() * span));
  return lo + std::min<Index>(k, hi - lo);
}

Complex Rng::in_disk(double radius) {
  if (!(radius >= 0.0)) throw InputError("disk radius must be nonnegative");
  for (;;) {
    const double re = uniform(-radius, radius);
    const double im = uniform(-radius, radius);
    if (re * re + im * im <= radius * radius) return {re, im};
  }
}

std::vector<Complex> Rng::disk_points(Index n, double radius) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) out.push_back(in_disk(radius));
  return out;
}

ComplexMatrix Rng::box_matrix(Index rows, Index cols) {
  Eigen::MatrixXcd m(rows, cols);
  // Row-major fill so the draw order matches the JSON entry order.
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const double re = uniform(-1.0, 1.0);
      m(i, j) = Complex(re, uniform(-1.0, 1.0));
    }
  }
  return ComplexMatrix(std::move(m));
}

ComplexMatrix Rng::unitary(Index n) {
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(box_matrix(n, n).eigen());
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return ComplexMatrix(std::move(q));
}

ComplexMatrix Rng::with_norm(Index rows, Index cols, double norm) {
  const ComplexMatrix m = box_matrix(rows, cols);
  return Complex(norm / spectral_norm(m), 0.0) * m;
}

}  // namespace contractive
