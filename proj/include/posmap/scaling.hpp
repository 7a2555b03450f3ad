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

#include <string>

#include "posmap/positivity.hpp"
#include "posmap/qmap.hpp"

namespace posmap {

// f(S) = Phi(Phi*(S)^{-1})^{-1}. Every intermediate is positive definite
// when the map is interior; a failed inverse raises NotInterior.
Herm2 f_map(const QubitMap& m, const Herm2& s);

// f1(S) = f(S) / tr f(S), the self-map of the state simplex whose fixed
// point drives the scaling.
Herm2 f1_map(const QubitMap& m, const Herm2& s);

struct ScaleOptions {
  double tol = 1e-10;
  int max_iter = 10000;
  // Callers that construct interiority (depolarizing mixes of positive maps)
  // may skip the strict-margin gate; positive-definiteness is still enforced
  // dynamically at every step.
  bool assume_interior = false;
};

struct ScalingResult {
  Herm2 a;  // positive definite
  Herm2 b;  // positive definite
  QubitMap scaled;  // Phi_A o Phi o Phi_B, bistochastic at tolerance
  Herm2 sigma0;     // fixed point, trace 1
  int iterations = 0;
  double residual_unital = 0.0;
  double residual_tp = 0.0;
  double alpha = 0.0;  // tr f(sigma0), 1 at an exact fixed point
  std::string scheme;  // "damped-fixed-point" or "alternating"
  bool near_boundary_warning = false;
};

// Finds positive definite A, B with Phi_A o Phi o Phi_B bistochastic via the
// fixed point of f1, damped iteration first and alternating normalization
// A <- Phi(B^2)^{-1/2}, B <- Phi*(A^2)^{-1/2} as fallback. Gauge fixed by
// tr sigma0 = 1. Throws NotInterior or NoConvergence.
ScalingResult scale_to_bistochastic(const QubitMap& m,
                                    const ScaleOptions& opts = {});

}  // namespace posmap
