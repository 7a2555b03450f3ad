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
#include <string>
#include <vector>

#include "posmap/qmap.hpp"
#include "posmap/scaling.hpp"

namespace posmap {

// One sign pattern of the cube decomposition: weight lambda > 0 and
// epsilon in {-1,+1}^3.
struct CubeTerm {
  double weight = 0.0;
  std::array<int, 3> signs{};
};

// Writes a cube point as a convex combination of at most 4 vertices of
// [-1,1]^3: sum lambda_k = 1 and sum lambda_k eps_k = s. Starts from the
// 8-term product representation and eliminates support points along affine
// dependence directions.
std::vector<CubeTerm> caratheodory_cube(const std::array<double, 3>& s);

// SU(2) lift of a rotation: 1/2 tr(sigma_i U sigma_j U^dagger) = R_ij,
// det U = 1, sign fixed by making the largest-magnitude quaternion
// component positive. Throws NotRotation.
CMat spinor_lift(const RMat& r);

// Rotation matrix realized by conjugation with a (special) unitary; the
// lower-right 3x3 block of its transfer matrix.
RMat rotation_of_unitary(const CMat& u);

struct RotationTerm {
  double weight = 0.0;
  RMat o;            // 3x3 orthogonal
  int det_sign = 0;  // +1 rotation, -1 reflection
};

// Bistochastic map as a convex combination of at most 4 signed isometries
// of the Bloch ball. Throws NotBistochastic or NormExceeded.
std::vector<RotationTerm> bistochastic_decompose(const QubitMap& m);

struct DecompOptions {
  double tol = 1e-8;
  ScaleOptions scale;
  // Set by decompose_general for the depolarizing-regularized maps, whose
  // interiority is guaranteed by construction rather than by the strict
  // margin test. The final residual check still gates the output.
  bool assume_interior = false;
};

// Full pipeline for positive maps that are bistochastic or interior:
// scale, split the Bloch block, lift each term. Boundary non-bistochastic
// maps raise BoundaryMap (decompose_general handles them).
Decomposition decompose(const QubitMap& m, const DecompOptions& opts = {});

struct GeneralDecomposition {
  Decomposition decomposition;
  double residual = 0.0;   // against the ORIGINAL map, verified
  double eps_used = 0.0;   // 0 when the direct path ran
  std::string path;        // "interior", "bistochastic" or "regularized"
};

// Decomposes (1-eps) Phi + eps Omega along a decreasing schedule and
// reports the verified residual against the input map.
GeneralDecomposition decompose_general(
    const QubitMap& m, const std::vector<double>& eps_schedule = {1e-2, 1e-4, 1e-6},
    const DecompOptions& opts = {});

// || ptm(from_kraus(d)) - ptm(m) ||_F.
double verify_decomposition(const QubitMap& m, const Decomposition& d);

}  // namespace posmap
