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

#include <vector>

#include "posmap/numkit.hpp"

namespace posmap {

// Transpose on the second tensor factor in the computational basis of
// C^2 (x) C^2 (entry swap within each 2x2 block). Involution, trace and
// Hermiticity preserving.
HermMat partial_transpose(const HermMat& rho);

// Validates a two-qubit density matrix: lambda_min >= -1e-10 and
// |tr - 1| <= 1e-10. Throws InvalidState.
void check_two_qubit_state(const HermMat& rho);

struct SeparabilityVerdict {
  bool separable = false;
  bool boundary_band = false;  // |min eigenvalue| within tolerance of zero
  double min_pt_eigenvalue = 0.0;
  std::vector<double> pt_eigenvalues;  // ascending
};

// Exact for two qubits: separable iff the partial transpose stays positive
// semi-definite; the verdict itself is the certificate in this dimension.
SeparabilityVerdict separability_verdict(const HermMat& rho, double tol = 1e-10);

}  // namespace posmap
