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

#ifndef CONTRACTIVE_ERRORS_HPP_
#define CONTRACTIVE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace contractive {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: non-finite entries, bad dimensions, schema violations.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// A point outside the open unit disk, or evaluation at a pole.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Id - T*T has an eigenvalue below -eig_tol.
class NotContractionError : public Error {
 public:
  NotContractionError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// A resolvent system whose smallest singular value is below rank_tol.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double smallest_singular_value)
      : Error(what), smallest_singular_value_(smallest_singular_value) {}
  double smallest_singular_value() const { return smallest_singular_value_; }

 private:
  double smallest_singular_value_;
};

/// The Parrott factor equations A = Z D_C, D = D_{C*} Y could not be
/// satisfied within solve_tol.
class InconsistentFactorizationError : public Error {
 public:
  InconsistentFactorizationError(const std::string& what, double residual_a,
                                 double residual_d)
      : Error(what), residual_a_(residual_a), residual_d_(residual_d) {}
  double residual_a() const { return residual_a_; }
  double residual_d() const { return residual_d_; }

 private:
  double residual_a_;
  double residual_d_;
};

/// A feasibility disk with radius above the uniqueness threshold was met
/// while reconstructing a model matrix.
class NonUniqueCompletionError : public Error {
 public:
  NonUniqueCompletionError(const std::string& what, double radius)
      : Error(what), radius_(radius) {}
  double radius() const { return radius_; }

 private:
  double radius_;
};

}  // namespace contractive

#endif  // CONTRACTIVE_ERRORS_HPP_
