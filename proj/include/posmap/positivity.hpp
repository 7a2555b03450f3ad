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

#include <array>
#include <optional>

#include "posmap/lorentz.hpp"
#include "posmap/qmap.hpp"

namespace posmap {

// Verdict plus certificate for membership of a qubit map in the cone of
// positivity-preserving maps. Positive outcomes carry the S-lemma pair
// (mu, Q >= 0) with PTM^T J PTM = mu J + Q; negative outcomes carry a pure
// state whose image has a negative eigenvalue.
struct PositivityResult {
  bool positive = false;
  bool negative_positive = false;  // -Phi is positive instead
  bool zero_map = false;
  bool degenerate = false;
  double mu = 0.0;
  double g_star = 0.0;
  double g_margin = 0.0;  // relative margin, callers may re-judge
  SymMat q = SymMat::zero(0);
  std::optional<std::array<double, 4>> violating_state;  // Bloch, pure
  double violation_lambda = 0.0;  // lambda_min(Phi(|phi><phi|)) < 0
};

PositivityResult is_positive(const QubitMap& m, double tol = 1e-9);

// Interior membership = strict S-lemma feasibility, cross-validated against
// a 2000-point pure-state sample. Maps inside the band |margin| <= tol_strict
// are flagged boundary_band rather than silently classified.
struct InteriorResult {
  bool interior = false;
  bool boundary_band = false;
  double margin = 0.0;         // relative S-lemma margin
  double sample_min = 0.0;     // min over sampled pure states of lambda_min
};

InteriorResult is_interior(const QubitMap& m, double tol_strict = 1e-8);

struct PropertyReport {
  PositivityResult positive;
  InteriorResult interior;
  bool cp = false;
  bool ccp = false;
  bool unital = false;
  bool trace_preserving = false;
  bool bistochastic = false;
  double cp_margin = 0.0;       // lambda_min of the Choi matrix
  double ccp_margin = 0.0;      // lambda_min of the Choi of Phi o T
  double unital_residual = 0.0;
  double tp_residual = 0.0;
};

PropertyReport property_report(const QubitMap& m, double tol = 1e-9);

// Minimum of lambda_min(Phi(|phi><phi|)) over a deterministic quasi-uniform
// sample of n pure states; the sampling oracle behind the cross-checks.
double sampled_min_output_eigenvalue(const QubitMap& m, int n_samples);

}  // namespace posmap
