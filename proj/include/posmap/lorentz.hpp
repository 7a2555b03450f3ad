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
#include "posmap/qmap.hpp"
#include "posmap/slemma.hpp"

namespace posmap {

// Point of R^m viewed against the Lorentz cone
//   L_m = { x : x_0 >= 0, q(x) >= 0 },  q(x) = x_0^2 - sum_{k>=1} x_k^2.
struct LorentzVec {
  int m = 0;
  std::vector<double> x;

  static LorentzVec of(std::vector<double> coords) {
    LorentzVec v;
    v.m = static_cast<int>(coords.size());
    v.x = std::move(coords);
    return v;
  }
};

double q_form(const LorentzVec& v);

// J = diag(1, -1, ..., -1), so q(x) = <x|J|x>.
RMat lorentz_j(int m);

enum class ConeRegion { Interior, Boundary, Outside, NegativeCone };

// Membership with tolerances relative to ||x||^2, so verdicts are constant
// along rays.
ConeRegion in_cone(const LorentzVec& v, double tol = 1e-10);

// PSD(C^2) <-> L_4 identification via Bloch coordinates. q(x) = 4 det(rho),
// so rho is PSD iff its coordinate vector lies in L_4.
LorentzVec lorentz_from_herm(const Herm2& rho);
Herm2 herm_from_lorentz(const LorentzVec& v);

struct LorentzMap {
  int m = 0;
  RMat mat;

  static LorentzMap of(const RMat& a) {
    if (a.rows() != a.cols()) throw InvalidInput("LorentzMap: square matrix required");
    return LorentzMap{a.rows(), a};
  }
};

LorentzMap lorentz_from_qubit(const QubitMap& m);

// Exact decision of L(L_m) subset L_m, split into the S-lemma feasibility of
// (F, J) with F = L^T J L and the dual orientation condition: row 0 of L
// (the vector J-dual to the functional x -> (Lx)_0) must itself lie in L_m,
// which by self-duality is equivalent to (Lx)_0 >= 0 on the whole cone.
struct ConeCheck {
  bool preserves = false;
  bool preserves_negative = false;  // image lands in -L_m instead
  bool zero_map = false;
  bool degenerate = false;  // row-0 vector vanished while L did not
  double g_star = 0.0;
  double mu_star = 0.0;
  double g_margin = 0.0;  // g_star / (1 + ||F||_F), the relative margin
  SymMat q = SymMat::zero(0);
  double orientation_q = 0.0;  // q(row0) / ||row0||^2 (signed, scale-free)
  // A vector in L_m whose image leaves L_m (present when both verdicts fail).
  std::vector<double> violator;
};

ConeCheck preserves_cone(const LorentzMap& l, double tol = 1e-9);

}  // namespace posmap
