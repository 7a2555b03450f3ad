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
#include <cmath>
#include <cstdint>
#include <vector>

#include "posmap/numkit.hpp"
#include "posmap/rng.hpp"

namespace posmap {

// Pauli basis sigma_0 = Id, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
const CMat& pauli(int a);

// Bloch coordinates x_a = tr(sigma_a rho); rho = 1/2 sum_a x_a sigma_a.
// x_0 is tr rho, so states sit at x_0 = 1 and the PSD cone is the Lorentz
// cone x_0 >= |x_vec|.
std::array<double, 4> bloch(const Herm2& rho);
Herm2 herm2_from_bloch(const std::array<double, 4>& x);

// Smallest eigenvalue of the 2x2 Hermitian matrix with Bloch vector x.
inline double lambda_min_bloch(const std::array<double, 4>& x) {
  const double r =
      std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
  return 0.5 * (x[0] - r);
}

// Linear map on 2x2 Hermitian matrices stored as its Pauli transfer matrix
// L_ab = 1/2 tr(sigma_a Phi(sigma_b)). With this convention the PTM is also
// the map's matrix representation on the Lorentz cone L_4.
class QubitMap {
 public:
  QubitMap() : ptm_(RMat(4, 4)) {}
  explicit QubitMap(const RMat& ptm);
  const RMat& ptm() const { return ptm_; }

 private:
  RMat ptm_;
};

struct Decomposition {
  std::vector<CMat> kraus;     // 2x2 blocks A_j acting as A rho A^dagger
  std::vector<CMat> co_kraus;  // 2x2 blocks B_k acting as B rho^T B^dagger
  int total_terms() const {
    return static_cast<int>(kraus.size() + co_kraus.size());
  }
};

// PTM of rho -> M rho M^dagger. Throws ZeroMatrix when M == 0.
QubitMap conjugation_map(const CMat& m);

QubitMap identity_map();
QubitMap transpose_map();      // PTM diag(1, 1, -1, 1)
QubitMap depolarizing_map();   // PTM diag(1, 0, 0, 0)

enum class SpecialKind { Identity, Transpose, Depolarizing };
QubitMap special_map(SpecialKind kind);

// Summed map of Eq-style Kraus/co-Kraus lists. Throws EmptyInput when both
// lists are empty.
QubitMap from_kraus(const std::vector<CMat>& kraus,
                    const std::vector<CMat>& co_kraus);
QubitMap from_kraus(const Decomposition& d);

Herm2 apply(const QubitMap& m, const Herm2& rho);

// Hilbert-Schmidt adjoint; the Pauli basis is orthonormal under
// <rho, sigma> = tr(rho sigma), so this is the PTM transpose.
QubitMap adjoint(const QubitMap& m);

// Composition outer(inner(.)): PTM product.
QubitMap compose(const QubitMap& outer, const QubitMap& inner);

// Choi matrix C = sum_ij E_ij (x) Phi(E_ij), system (x) image convention.
HermMat choi(const QubitMap& m);

bool is_unital(const QubitMap& m, double tol = 1e-9);
bool is_trace_preserving(const QubitMap& m, double tol = 1e-9);

//==========================================================================
// Seeded generators
//==========================================================================

struct RandomSpec {
  enum class Kind { Interior, Cp, Ccp, Boundary, Nonpositive };
  Kind kind = Kind::Interior;
  double t = 0.3;  // Interior mixing weight toward the depolarizing map
};

// Deterministic for a fixed seed (PRNG contract in rng.hpp). Interior maps
// are (1-t) Psi + t Omega with Psi a random CP/co-CP mix, so interiority is
// guaranteed by construction rather than by testing.
QubitMap random_map(std::uint64_t seed, const RandomSpec& spec);

QubitMap random_interior_map(std::uint64_t seed, double t);
QubitMap random_cp_map(std::uint64_t seed);
QubitMap random_ccp_map(std::uint64_t seed);
QubitMap random_boundary_map(std::uint64_t seed);
QubitMap random_nonpositive_map(std::uint64_t seed);

// Haar-ish random SU(2) element (Gaussian + normalization), and a random
// invertible 2x2 with |det| bounded away from zero.
CMat random_su2(Prng& rng);
CMat random_invertible2(Prng& rng);

}  // namespace posmap
