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

// Reference implementations used only by the tests. They avoid Eigen on
// purpose so that library and oracle do not share failure modes.

#ifndef CONTRACTIVE_TESTS_ORACLES_HPP_
#define CONTRACTIVE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using C = std::complex<double>;

// Dense row-major matrix, nothing more.
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<C> v;

  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, C(0.0, 0.0)) {}
  C& operator()(std::size_t i, std::size_t j) { return v[i * cols + j]; }
  C operator()(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
};

// Singular values by one-sided (Hestenes) Jacobi, descending. Column pairs
// are rotated until mutually orthogonal; the column norms are then the
// singular values. Small singular values come out with relative accuracy.
inline std::vector<double> singular_values(Dense a) {
  if (a.rows < a.cols) {
    Dense t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = std::conj(a(i, j));
    a = t;
  }
  const std::size_t m = a.rows;
  const std::size_t n = a.cols;
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        C gamma(0.0, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(a(i, p));
          beta += std::norm(a(i, q));
          gamma += std::conj(a(i, p)) * a(i, q);
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const C phase = std::conj(gamma) / g;  // makes <a_p, a_q e> real
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const C ap = a(i, p);
          const C aq = a(i, q) * phase;
          a(i, p) = c * ap - s * aq;
          a(i, q) = s * ap + c * aq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += std::norm(a(i, j));
    s[j] = std::sqrt(acc);
  }
  std::sort(s.begin(), s.end(), [](double x, double y) { return x > y; });
  return s;
}

inline double norm2(const Dense& a) { return singular_values(a).front(); }

inline double defect(C w) { return std::sqrt(1.0 - std::norm(w)); }

// Model matrix entry by entry, each product recomputed from scratch.
inline Dense model_matrix(const std::vector<C>& w) {
  const std::size_t n = w.size();
  Dense m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = w[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      C prod(1.0, 0.0);
      for (std::size_t k = i + 1; k < j; ++k) prod *= -std::conj(w[k]);
      m(i, j) = prod * defect(w[i]) * defect(w[j]);
    }
  }
  return m;
}

// Largest r with ||T(center + r e^{i theta})|| <= 1, by bisection on r.
// make(b) must return the assembled matrix with corner b.
template <typename Make>
double radial_boundary(Make make, C center, double theta, double r_max = 4.0) {
  const C dir = std::polar(1.0, theta);
  double lo = 0.0;
  double hi = r_max;
  if (norm2(make(center)) > 1.0 + 1e-12) return -1.0;  // center infeasible
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (norm2(make(center + mid * dir)) <= 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle

#endif  // CONTRACTIVE_TESTS_ORACLES_HPP_
