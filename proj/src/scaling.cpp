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

#include "posmap/scaling.hpp"

#include <cmath>

namespace posmap {

namespace {

HermMat pd_inverse(const QubitMap& m, const Herm2& x, const char* stage) {
  try {
    return pd_functions(x).inv;
  } catch (const NotPositiveDefinite&) {
    (void)m;
    throw NotInterior(std::string("f_map: intermediate at stage '") + stage +
                      "' is not positive definite (map not interior)");
  }
}

struct Assembled {
  Herm2 a;
  Herm2 b;
  QubitMap scaled;
  double residual_unital;
  double residual_tp;
  double alpha;
};

// Build A = sigma^{1/2}, B = Phi*(A^2)^{-1/2} and the scaled map, with the
// honest residuals read off the assembled transfer matrix.
Assembled assemble(const QubitMap& m, const Herm2& sigma) {
  Assembled out;
  try {
    out.a = pd_functions(sigma).sqrt;
    out.b = pd_functions(HermMat(apply(adjoint(m), sigma))).inv_sqrt;
  } catch (const NotPositiveDefinite&) {
    throw NotInterior("scaling: fixed-point candidate left the PD cone");
  }
  out.scaled = compose(conjugation_map(out.a.mat()),
                       compose(m, conjugation_map(out.b.mat())));
  const Herm2 id = HermMat::identity(2);
  out.residual_unital = frob(HermMat(apply(out.scaled, id)) - id);
  out.residual_tp = frob(HermMat(apply(adjoint(out.scaled), id)) - id);
  const Herm2 fs = f_map(m, sigma);
  out.alpha = fs.trace_real();
  return out;
}

}  // namespace

Herm2 f_map(const QubitMap& m, const Herm2& s) {
  if (s.dim() != 2) throw InvalidInput("f_map: S must be 2x2");
  const HermMat t1 = HermMat(apply(adjoint(m), s));
  const HermMat t1_inv = pd_inverse(m, t1, "Phi*(S)");
  const HermMat t3 = HermMat(apply(m, t1_inv));
  return pd_inverse(m, t3, "Phi(Phi*(S)^-1)");
}

Herm2 f1_map(const QubitMap& m, const Herm2& s) {
  const Herm2 f = f_map(m, s);
  const double tr = f.trace_real();
  if (!(tr > 0.0)) {
    throw NotInterior("f1_map: tr f(S) <= 0");
  }
  return (1.0 / tr) * f;
}

namespace {

// Trace-one states parameterized by their Bloch vector b, |b| < 1.
Herm2 state_of_bloch3(const std::array<double, 3>& b) {
  return herm2_from_bloch({1.0, b[0], b[1], b[2]});
}

std::array<double, 3> bloch3_of_state(const Herm2& s) {
  const auto x = bloch(s);
  return {x[1], x[2], x[3]};
}

// g(b) = bloch(f1(sigma(b))) - b; counts one budget unit per call.
bool newton_residual(const QubitMap& m, const std::array<double, 3>& b,
                     std::array<double, 3>& g, int& iterations) {
  double n2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
  if (n2 >= 1.0) return false;
  ++iterations;
  try {
    const auto fb = bloch3_of_state(f1_map(m, state_of_bloch3(b)));
    for (int i = 0; i < 3; ++i) g[i] = fb[i] - b[i];
    return true;
  } catch (const NotInterior&) {
    return false;
  }
}

}  // namespace

ScalingResult scale_to_bistochastic(const QubitMap& m, const ScaleOptions& opts) {
  const InteriorResult interior = is_interior(m);
  if (!interior.interior && !opts.assume_interior) {
    throw NotInterior();
  }

  ScalingResult out;
  out.near_boundary_warning = interior.margin < 1e-6;

  int iterations = 0;
  double best_residual = 1e300;
  Herm2 best_sigma = HermMat(cplx(0.5, 0.0) * CMat::identity(2));
  double best_working = 1e300;

  auto finish = [&](const Herm2& sigma, const char* scheme) -> bool {
    Assembled asm_try = assemble(m, sigma);
    best_residual = std::min(
        best_residual, std::max(asm_try.residual_unital, asm_try.residual_tp));
    if (asm_try.residual_unital <= opts.tol && asm_try.residual_tp <= opts.tol) {
      out.a = asm_try.a;
      out.b = asm_try.b;
      out.scaled = asm_try.scaled;
      out.sigma0 = sigma;
      out.iterations = iterations;
      out.residual_unital = asm_try.residual_unital;
      out.residual_tp = asm_try.residual_tp;
      out.alpha = asm_try.alpha;
      out.scheme = scheme;
      return true;
    }
    return false;
  };

  // Phase 1: damped fixed-point iteration on the state simplex.
  {
    Herm2 sigma = best_sigma;
    double eta = 1.0;
    double prev_res = 1e300;
    const int budget = std::max(1, (3 * opts.max_iter) / 10);
    while (iterations < budget) {
      ++iterations;
      const Herm2 fs = f1_map(m, sigma);
      const double res = frob(fs - sigma);
      if (res >= prev_res) eta = std::max(0.5 * eta, 1.0 / 1024.0);
      prev_res = res;
      if (res < best_working) {
        best_working = res;
        best_sigma = sigma;
      }
      if (res <= 2.0 * opts.tol || res <= 1e-15) {
        if (finish(sigma, "damped-fixed-point")) return out;
      }
      best_residual = std::min(best_residual, res);

      const CMat next =
          cplx(1.0 - eta, 0.0) * sigma.mat() + cplx(eta, 0.0) * fs.mat();
      sigma = Herm2(next);
      // Keep the iterate on the simplex; f1 output already has trace 1, the
      // renormalization only sweeps up roundoff.
      sigma = (1.0 / sigma.trace_real()) * sigma;
    }
  }

  // Phase 2: Newton on the Bloch parameterization of the fixed-point
  // equation; linear convergence of plain iteration degrades like the
  // interiority margin, Newton does not.
  {
    const int budget = std::max(1, (6 * opts.max_iter) / 10);
    std::array<double, 3> b = bloch3_of_state(best_sigma);
    std::array<double, 3> g{};
    bool alive = newton_residual(m, b, g, iterations);
    while (alive && iterations + 4 < budget) {
      const double gn = norm2(g);
      if (gn < best_working) {
        best_working = gn;
        best_sigma = state_of_bloch3(b);
      }
      if (gn <= 1.4 * opts.tol || gn <= 1e-15) {
        if (finish(state_of_bloch3(b), "newton")) return out;
      }
      best_residual = std::min(best_residual, gn);

      // Forward-difference Jacobian, one budget unit per column.
      RMat jac(3, 3);
      const double h = 1e-7;
      bool jac_ok = true;
      for (int c = 0; c < 3 && jac_ok; ++c) {
        std::array<double, 3> bp = b;
        bp[c] += h;
        std::array<double, 3> gp{};
        jac_ok = newton_residual(m, bp, gp, iterations);
        if (jac_ok) {
          for (int r = 0; r < 3; ++r) jac(r, c) = (gp[r] - g[r]) / h;
        }
      }
      if (!jac_ok) break;

      std::vector<double> rhs = {-g[0], -g[1], -g[2]};
      std::vector<double> step;
      if (!lu_solve(jac, rhs, step)) break;

      double alpha = 1.0;
      bool moved = false;
      while (alpha > 1e-6 && iterations < budget) {
        std::array<double, 3> bn = {b[0] + alpha * step[0], b[1] + alpha * step[1],
                                    b[2] + alpha * step[2]};
        const double bn_norm = norm2(std::vector<double>{bn[0], bn[1], bn[2]});
        if (bn_norm < 1.0 - 1e-12) {
          std::array<double, 3> gn_vec{};
          if (newton_residual(m, bn, gn_vec, iterations) &&
              norm2(gn_vec) < norm2(g)) {
            b = bn;
            g = gn_vec;
            moved = true;
            break;
          }
        }
        alpha *= 0.5;
      }
      if (!moved) break;
    }
  }

  // Phase 3: alternating normalization from the transfer-equation updates
  // B <- Phi*(A^2)^{-1/2}, A <- Phi(B^2)^{-1/2}.
  {
    Herm2 a = pd_functions(best_sigma).sqrt;
    while (iterations < opts.max_iter) {
      ++iterations;
      Herm2 a2 = HermMat(a.mat() * a.mat());
      Herm2 b;
      try {
        b = pd_functions(HermMat(apply(adjoint(m), a2))).inv_sqrt;
        const Herm2 b2 = HermMat(b.mat() * b.mat());
        a = pd_functions(HermMat(apply(m, b2))).inv_sqrt;
      } catch (const NotPositiveDefinite&) {
        throw NotInterior("scaling: alternating step left the PD cone");
      }

      // Gauge: sigma0 = A^2 scaled to unit trace.
      a2 = HermMat(a.mat() * a.mat());
      const double c2 = a2.trace_real();
      const Herm2 sigma = (1.0 / c2) * a2;
      if (finish(sigma, "alternating")) return out;
    }
  }

  throw NoConvergence(iterations, best_residual);
}

}  // namespace posmap
