// Copyright 2026 The posmap authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace posmap {

// Base class for every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input-contract violations (map to CLI exit code 2).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public InvalidInput {
 public:
  EmptyInput() : InvalidInput("at least one Kraus or co-Kraus matrix required") {}
};

class ZeroMatrix : public InvalidInput {
 public:
  ZeroMatrix() : InvalidInput("conjugation map requires a nonzero matrix") {}
};

class InvalidState : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class SlaterViolation : public InvalidInput {
 public:
  explicit SlaterViolation(double value)
      : InvalidInput("Slater point has <x|G|x> = " + std::to_string(value) +
                     " (must be > 0)"),
        value(value) {}
  double value;
};

class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(double lambda_min, double floor)
      : Error("matrix not positive definite: lambda_min = " +
              std::to_string(lambda_min) + " <= floor " + std::to_string(floor)),
        lambda_min(lambda_min),
        floor(floor) {}
  double lambda_min;
  double floor;
};

class NotRotation : public Error {
 public:
  explicit NotRotation(double defect)
      : Error("matrix is not a rotation (orthogonality/det defect " +
              std::to_string(defect) + ")"),
        defect(defect) {}
  double defect;
};

class NotInterior : public Error {
 public:
  using Error::Error;
  NotInterior() : Error("map is not in the interior of the positive cone") {}
};

class NotPositive : public Error {
 public:
  NotPositive() : Error("map is not positivity-preserving") {}
};

class NotBistochastic : public Error {
 public:
  NotBistochastic() : Error("map is not bistochastic") {}
};

class NormExceeded : public Error {
 public:
  explicit NormExceeded(double norm)
      : Error("Bloch block norm " + std::to_string(norm) +
              " exceeds 1 (map not positive)"),
        norm(norm) {}
  double norm;
};

class BoundaryMap : public Error {
 public:
  BoundaryMap()
      : Error("map lies on the boundary of the positive cone; "
              "use the regularized decomposition") {}
};

// Budget exhaustion (maps to CLI exit code 3).
class NoConvergence : public Error {
 public:
  NoConvergence(int iterations, double best_residual)
      : Error("no convergence after " + std::to_string(iterations) +
              " iterations (best residual " + std::to_string(best_residual) + ")"),
        iterations(iterations),
        best_residual(best_residual) {}
  int iterations;
  double best_residual;
};

class NotInCone : public Error {
 public:
  NotInCone() : Error("map does not preserve the Lorentz cone") {}
};

class RankDeficientInput : public Error {
 public:
  RankDeficientInput() : Error("perturbation construction requires rank >= 2") {}
};

class QZero : public Error {
 public:
  QZero() : Error("Q = 0: map is an automorphism, no perturbation exists") {}
};

class NotAutomorphism : public Error {
 public:
  NotAutomorphism() : Error("map is not a cone automorphism") {}
};

class ExtractionFailure : public Error {
 public:
  explicit ExtractionFailure(const std::string& what) : Error(what) {}
};

// Internal defects: loops that provably terminate hit their cap anyway.
class InternalDefect : public Error {
 public:
  using Error::Error;
};

}  // namespace posmap
