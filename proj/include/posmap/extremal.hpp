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

#include <cstdint>
#include <utility>

#include "posmap/lorentz.hpp"
#include "posmap/qmap.hpp"

namespace posmap {

// Extreme-ray classification of a cone-preserving map: a scaled orthochronous
// Lorentz transformation (Q = 0 at the optimal mu), a rank-one outer product
// of boundary vectors, or a non-extreme map shipped with an explicit
// perturbation Delta such that both L + Delta and L - Delta preserve the cone.
struct ExtremalVerdict {
  enum class Kind { Automorphism, RankOneExtreme, NotExtreme, NotInCone };
  Kind kind = Kind::NotInCone;
  double mu = 0.0;          // Automorphism: L^T J L = mu J
  double q_residual = 0.0;  // ||Q||_F / ||L||_F^2 at mu_star
  LorentzVec u, v;          // RankOneExtreme: L = |u><v|, both on the boundary
  RMat delta;               // NotExtreme: the perturbation
  double eps = 0.0;
  double g_star = 0.0;
  double mu_star = 0.0;
};

ExtremalVerdict classify(const LorentzMap& l, double tol = 1e-9);

// Perturbation construction for rank >= 2 and Q != 0: v from the top
// spectral term of Q, u solving L^T J u = delta v (delta = 1 when solvable,
// else a null vector of L^T J), and eps from the sign window of
// 1 + 2 s delta + s^2 <u|J|u> followed by a verified halving search.
std::pair<RMat, double> build_perturbation(const LorentzMap& l, double mu,
                                           const SymMat& q, double tol = 1e-9);

// Kadison form of a qubit automorphism: V with rho -> V rho V^dagger
// (is_co = false) or rho -> V rho^T V^dagger (is_co = true), recovered from
// whichever of choi(m), choi(m o T) has rank one.
struct KadisonForm {
  CMat v;
  bool is_co = false;
};

KadisonForm kadison_extract(const QubitMap& m);

//==========================================================================
// Generators for randomized cone-preserving ensembles
//==========================================================================

// t * rotation * boost * rotation, an automorphism with L^T J L = t^2 J.
LorentzMap random_lorentz_automorphism(std::uint64_t seed, int m,
                                       double* scale_out = nullptr);

// Outer product |u><v| of two boundary-ray vectors (an extreme rank-one map).
LorentzMap random_boundary_rank_one(std::uint64_t seed, int m);

// Boundary vector with x0 > 0 and q(x) = 0.
LorentzVec random_boundary_vector(Prng& rng, int m);

}  // namespace posmap
