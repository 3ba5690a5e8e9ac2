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

#ifndef CONTRACTIVE_RANDOM_HPP_
#define CONTRACTIVE_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "contractive/core_matrix.hpp"

namespace contractive {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline constexpr std::uint64_t kSplitMixIncrement = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kSplitMixMul1 = 0xBF58476D1CE4E5B9ULL;
inline constexpr std::uint64_t kSplitMixMul2 = 0x94D049BB133111EBULL;

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of trial `stream` under a master seed:
/// splitmix64(master + (stream + 1) * kSplitMixIncrement).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Reproducible generator: std::mt19937_64 seeded with derive_seed(seed,
/// stream). Doubles are the top 53 bits scaled by 2^-53, so draws do not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(derive_seed(seed, stream)) {}

  /// [0, 1)
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  Index integer(Index lo, Index hi);

  /// Uniform in the closed disk of the given radius, by rejection from the
  /// enclosing square.
  Complex in_disk(double radius);
  std::vector<Complex> disk_points(Index n, double radius);

  /// Real and imaginary parts uniform in [-1, 1].
  ComplexMatrix box_matrix(Index rows, Index cols);
  /// Haar-like unitary: Q of a QR factorization of a box matrix, with the
  /// phases of diag(R) moved into Q.
  ComplexMatrix unitary(Index n);
  /// Box matrix rescaled to the given spectral norm.
  ComplexMatrix with_norm(Index rows, Index cols, double norm);

 private:
  std::mt19937_64 engine_;
};

}  // namespace contractive

#endif  // CONTRACTIVE_RANDOM_HPP_
