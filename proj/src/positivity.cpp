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

#include "posmap/positivity.hpp"

#include <cmath>

namespace posmap {

namespace {

// Image eigen-minimum for the pure state with Bloch direction n (unit).
double image_lambda_min(const QubitMap& m, const std::array<double, 3>& n) {
  const std::array<double, 4> x = {1.0, n[0], n[1], n[2]};
  std::array<double, 4> y{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) y[a] += m.ptm()(a, b) * x[b];
  return lambda_min_bloch(y);
}

std::array<double, 3> fibonacci_dir(int i, int n) {
  const double z = 1.0 - 2.0 * (i + 0.5) / n;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = 2.39996322972865332 * i;  // golden angle
  return {r * std::cos(phi), r * std::sin(phi), z};
}

// Pure-state violation hunt: axis states, a Fibonacci sample, the two pure
// components of a supplied cone violator, then local hill descent.
struct Violation {
  std::array<double, 3> dir{};
  double lambda = 1e300;
};

Violation find_violating_state(const QubitMap& m,
                               const std::vector<double>& violator_hint) {
  Violation best;
  auto consider = [&](const std::array<double, 3>& n) {
    const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (norm == 0.0) return;
    const std::array<double, 3> u = {n[0] / norm, n[1] / norm, n[2] / norm};
    const double lam = image_lambda_min(m, u);
    if (lam < best.lambda) {
      best.lambda = lam;
      best.dir = u;
    }
  };

  for (int k = 0; k < 3; ++k) {
    std::array<double, 3> n{};
    n[k] = 1.0;
    consider(n);
    n[k] = -1.0;
    consider(n);
  }
  for (int i = 0; i < 512; ++i) consider(fibonacci_dir(i, 512));

  if (violator_hint.size() == 4) {
    // rho_x = lambda_+ P_+ + lambda_- P_-: if Phi(rho_x) has a negative
    // eigenvalue, one of the two pure components does too.
    const std::array<double, 3> n = {violator_hint[1], violator_hint[2],
                                     violator_hint[3]};
    consider(n);
    consider({-n[0], -n[1], -n[2]});
  }

  // Local refinement on the sphere.
  double step = 0.2;
  for (int it = 0; it < 200 && step > 1e-12; ++it) {
    bool improved = false;
    for (int k = 0; k < 3; ++k) {
      for (double s : {step, -step}) {
        std::array<double, 3> n = best.dir;
        n[k] += s;
        const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        n = {n[0] / norm, n[1] / norm, n[2] / norm};
        const double lam = image_lambda_min(m, n);
        if (lam < best.lambda) {
          best.lambda = lam;
          best.dir = n;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

double sampled_min_output_eigenvalue(const QubitMap& m, int n_samples) {
  double lo = 1e300;
  for (int k = 0; k < 3; ++k) {
    std::array<double, 3> n{};
    n[k] = 1.0;
    lo = std::min(lo, image_lambda_min(m, n));
    n[k] = -1.0;
    lo = std::min(lo, image_lambda_min(m, n));
  }
  for (int i = 0; i < n_samples; ++i) {
    lo = std::min(lo, image_lambda_min(m, fibonacci_dir(i, n_samples)));
  }
  return lo;
}

PositivityResult is_positive(const QubitMap& m, double tol) {
  const ConeCheck check = preserves_cone(lorentz_from_qubit(m), tol);

  PositivityResult out;
  out.g_star = check.g_star;
  out.g_margin = check.g_margin;
  out.mu = check.mu_star;
  out.q = check.q;
  out.zero_map = check.zero_map;
  out.degenerate = check.degenerate;

  if (check.zero_map) {
    out.positive = true;
    return out;
  }
  if (check.degenerate) {
    // tr Phi(rho) vanished identically while Phi did not: decide by the six
    // axis pure states (and report the worst of them).
    const Violation v = find_violating_state(m, {});
    if (v.lambda < -tol) {
      out.positive = false;
      out.violating_state = {1.0, v.dir[0], v.dir[1], v.dir[2]};
      out.violation_lambda = v.lambda;
    } else {
      out.positive = true;
    }
    return out;
  }
  if (check.preserves) {
    out.positive = true;
    return out;
  }
  if (check.preserves_negative) {
    out.negative_positive = true;
  }

  const Violation v = find_violating_state(m, check.violator);
  out.violating_state = {1.0, v.dir[0], v.dir[1], v.dir[2]};
  out.violation_lambda = v.lambda;
  return out;
}

InteriorResult is_interior(const QubitMap& m, double tol_strict) {
  const ConeCheck check = preserves_cone(lorentz_from_qubit(m), 1e-9);

  InteriorResult out;
  out.margin = check.g_margin;
  out.boundary_band = std::abs(check.g_margin) <= tol_strict;
  out.sample_min = sampled_min_output_eigenvalue(m, 2000);

  // Sampling cross-check on the Frobenius-normalized map so the verdict is
  // constant along rays, like the cone itself.
  const double norm = frob(m.ptm());
  const double sample_rel =
      norm > 0.0 ? out.sample_min * (2.0 / norm) : out.sample_min;
  const bool orientation = m.ptm()(0, 0) > 0.0 && check.preserves;
  out.interior = check.g_margin > tol_strict && orientation &&
                 sample_rel > tol_strict;
  return out;
}

PropertyReport property_report(const QubitMap& m, double tol) {
  PropertyReport r;
  r.positive = is_positive(m, tol);
  r.interior = is_interior(m);

  const RMat& l = m.ptm();
  double ur = 0.0, tr = 0.0;
  for (int a = 0; a < 4; ++a) {
    const double tgt = a == 0 ? 1.0 : 0.0;
    ur += (l(a, 0) - tgt) * (l(a, 0) - tgt);
    tr += (l(0, a) - tgt) * (l(0, a) - tgt);
  }
  r.unital_residual = std::sqrt(ur);
  r.tp_residual = std::sqrt(tr);
  r.unital = r.unital_residual <= tol;
  r.trace_preserving = r.tp_residual <= tol;
  r.bistochastic = r.unital && r.trace_preserving;

  r.cp_margin = lambda_min(choi(m));
  r.ccp_margin = lambda_min(choi(compose(m, transpose_map())));
  const double choi_scale = 1.0 + frob(l);
  r.cp = r.cp_margin >= -tol * choi_scale;
  r.ccp = r.ccp_margin >= -tol * choi_scale;
  return r;
}

}  // namespace posmap
