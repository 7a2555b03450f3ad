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

#include "posmap/ppt.hpp"

#include <cmath>

namespace posmap {

HermMat partial_transpose(const HermMat& rho) {
  if (rho.dim() != 4) throw InvalidInput("partial_transpose: need 4x4 input");
  CMat out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = rho(2 * i + l, 2 * j + k);
  return HermMat(out);
}

void check_two_qubit_state(const HermMat& rho) {
  if (rho.dim() != 4) throw InvalidState("state must be 4x4");
  const double tr = rho.trace_real();
  if (std::abs(tr - 1.0) > 1e-10) {
    throw InvalidState("state trace " + std::to_string(tr) + " != 1");
  }
  const double lmin = lambda_min(rho);
  if (lmin < -1e-10) {
    throw InvalidState("state has negative eigenvalue " + std::to_string(lmin));
  }
}

SeparabilityVerdict separability_verdict(const HermMat& rho, double tol) {
  check_two_qubit_state(rho);
  const HermEig eig = herm_eig(partial_transpose(rho));

  SeparabilityVerdict out;
  out.pt_eigenvalues = eig.values;
  out.min_pt_eigenvalue = eig.values.front();
  out.separable = out.min_pt_eigenvalue >= -tol;
  out.boundary_band = std::abs(out.min_pt_eigenvalue) <= tol;
  return out;
}

}  // namespace posmap
