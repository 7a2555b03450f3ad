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

#include "posmap/lorentz.hpp"

#include <cmath>

namespace posmap {

double q_form(const LorentzVec& v) {
  if (v.m < 2) throw InvalidInput("q_form: need m >= 2");
  double q = v.x[0] * v.x[0];
  for (int k = 1; k < v.m; ++k) q -= v.x[k] * v.x[k];
  return q;
}

RMat lorentz_j(int m) {
  RMat j = RMat::identity(m);
  for (int k = 1; k < m; ++k) j(k, k) = -1.0;
  return j;
}

ConeRegion in_cone(const LorentzVec& v, double tol) {
  const double q = q_form(v);
  const double n2 = dot(v.x, v.x);
  const double x0 = v.x[0];
  if (std::abs(q) <= tol * n2 || n2 == 0.0) {
    return x0 >= -tol * std::sqrt(n2) ? ConeRegion::Boundary
                                      : ConeRegion::NegativeCone;
  }
  if (q > 0.0) {
    return x0 > 0.0 ? ConeRegion::Interior : ConeRegion::NegativeCone;
  }
  return ConeRegion::Outside;
}

LorentzVec lorentz_from_herm(const Herm2& rho) {
  const auto x = bloch(rho);
  return LorentzVec::of({x[0], x[1], x[2], x[3]});
}

Herm2 herm_from_lorentz(const LorentzVec& v) {
  if (v.m != 4) throw InvalidInput("herm_from_lorentz: need m = 4");
  return herm2_from_bloch({v.x[0], v.x[1], v.x[2], v.x[3]});
}

LorentzMap lorentz_from_qubit(const QubitMap& m) {
  return LorentzMap::of(m.ptm());
}

ConeCheck preserves_cone(const LorentzMap& l, double tol) {
  const int m = l.m;
  if (m < 2) throw InvalidInput("preserves_cone: need m >= 2");
  const RMat j = lorentz_j(m);
  const SymMat f(transpose(l.mat) * j * l.mat);
  const MuSearchResult ms = mu_search(f, SymMat(j));

  ConeCheck out;
  out.g_star = ms.g_star;
  out.mu_star = ms.mu_star;
  out.q = ms.q;
  const double f_scale = 1.0 + frob(f.mat());
  out.g_margin = ms.g_star / f_scale;

  const double l_norm = frob(l.mat);
  out.zero_map = l_norm <= 1e-12;
  if (out.zero_map) {
    out.preserves = true;  // the zero map sends the cone to {0} in L_m
    out.preserves_negative = true;
    return out;
  }

  // Quadratic side failed: the witness x has q(x) > 0 and q(Lx) < 0, so
  // (after flipping into x_0 > 0) it is a cone vector with image outside
  // both cones.
  if (out.g_margin < -tol) {
    SLemmaOptions sopts;
    sopts.tol = tol;
    std::vector<double> xbar(m, 0.0);
    xbar[0] = 1.0;
    const SLemmaOutcome sl = decide(f, SymMat(j), xbar, sopts);
    if (!sl.feasible) {
      out.violator = sl.witness;
      if (out.violator[0] < 0.0) {
        for (double& c : out.violator) c = -c;
      }
    }
    return out;
  }

  // Quadratic side holds; orientation decides between L_m, -L_m, or neither.
  std::vector<double> row0(m);
  for (int k = 0; k < m; ++k) row0[k] = l.mat(0, k);
  const double r_norm = norm2(row0);
  if (r_norm <= 1e-10 * (1.0 + l_norm)) {
    // (Lx)_0 == 0 on the cone: with the quadratic condition this forces
    // L == 0 up to roundoff; a nonzero L here cannot be sign-classified.
    out.degenerate = true;
    return out;
  }
  LorentzVec r = LorentzVec::of(row0);
  out.orientation_q = q_form(r) / (r_norm * r_norm);
  const ConeRegion region = in_cone(r, tol);
  if (region == ConeRegion::Interior || region == ConeRegion::Boundary) {
    out.preserves = true;
    return out;
  }
  if (region == ConeRegion::NegativeCone) {
    out.preserves_negative = true;
    return out;
  }

  // row0 outside both cones: there is a cone direction with strictly
  // negative image 0-component; q of the image stays >= 0, so the image
  // lands in -L_m.
  std::vector<double> v(m, 0.0);
  v[0] = 1.0;
  double spatial = 0.0;
  for (int k = 1; k < m; ++k) spatial += row0[k] * row0[k];
  spatial = std::sqrt(spatial);
  for (int k = 1; k < m; ++k) v[k] = -row0[k] / spatial;
  out.violator = v;
  return out;
}

}  // namespace posmap
