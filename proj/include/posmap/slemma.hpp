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
#include <span>
#include <vector>

#include "posmap/numkit.hpp"

namespace posmap {

// g(mu) = lambda_min(F - mu G) is concave (pointwise infimum of affine
// functions of mu), so its maximum over mu >= 0 is found by bracket
// expansion plus golden-section search.
struct MuSearchResult {
  double mu_star = 0.0;
  double g_star = 0.0;
  SymMat q = SymMat::zero(0);  // F - mu_star G
};

MuSearchResult mu_search(const SymMat& f, const SymMat& g);

double g_of_mu(const SymMat& f, const SymMat& g, double mu);

struct SLemmaOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0x5eedULL;
  int multistarts = 64;
};

// Feasible: mu >= 0 and Q = F - mu G >= 0 certify the implication
//   <x|G|x> >= 0  =>  <x|F|x> >= 0.
// Infeasible: unit witness x with <x|G|x> > 0 and <x|F|x> < 0.
struct SLemmaOutcome {
  bool feasible = false;
  double mu = 0.0;
  SymMat q = SymMat::zero(0);
  double g_star = 0.0;
  double mu_star = 0.0;
  std::vector<double> witness;
  double witness_f = 0.0;  // <x|F|x>, strictly negative on infeasible
  double witness_g = 0.0;  // <x|G|x>, strictly positive on infeasible
};

// Requires a Slater point: <xbar|G|xbar> > 0, else throws SlaterViolation.
SLemmaOutcome decide(const SymMat& f, const SymMat& g,
                     std::span<const double> xbar, const SLemmaOptions& opts = {});

//==========================================================================
// Reformulated version on the pencil M_t = (1-t) M + t N
//==========================================================================

struct PencilOptions {
  double tol = 1e-9;
  double step = 1.0 / 256.0;  // walk resolution; exposed, see notes in docs
  std::uint64_t seed = 0x5eedULL;
};

// Snapshot of the pencil walk at parameter t: the smallest eigenvalue and an
// orthonormal basis (columns) of its eigenspace within a relative band.
struct PencilWalkState {
  double t = 0.0;
  double lambda_t = 0.0;
  RMat eigenspace;  // dim x k
};

PencilWalkState pencil_state(const SymMat& m, const SymMat& n, double t,
                             double band = 1e-9);

struct PencilOutcome {
  bool feasible = false;
  double t = 0.0;           // first t with lambda_min(M_t) >= -tol (feasible)
  double lambda_min_t = 0.0;
  bool corner_t1 = false;   // feasible only at the t = 1 endpoint
  std::vector<double> counterexample;  // unit x, both forms strictly negative
  double ce_m = 0.0;  // <x|M|x>
  double ce_n = 0.0;  // <x|N|x>
};

// Either a t in [0,1] with (1-t)M + tN >= 0 (within tolerance) or a unit
// vector outside both {<x|M|x> >= 0} and {<x|N|x> >= 0}.
PencilOutcome reformulated_decide(const SymMat& m, const SymMat& n,
                                  const PencilOptions& opts = {});

}  // namespace posmap
