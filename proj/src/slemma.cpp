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

#include "posmap/slemma.hpp"

#include <algorithm>
#include <cmath>

#include "posmap/rng.hpp"

namespace posmap {

double g_of_mu(const SymMat& f, const SymMat& g, double mu) {
  return lambda_min(SymMat(f.mat() - mu * g.mat()));
}

MuSearchResult mu_search(const SymMat& f, const SymMat& g) {
  if (f.dim() != g.dim()) throw InvalidInput("mu_search: dimension mismatch");
  const double nf = frob(f.mat());
  const double ng = frob(g.mat());
  const double cap = 1e12 * (1.0 + nf / std::max(ng, 1e-300));

  auto gv = [&](double mu) { return g_of_mu(f, g, mu); };

  // Expand [0, hi] until g has decreased through the upper half; by
  // concavity the maximizer then lies inside the bracket.
  double hi = 1.0;
  while (hi < cap && gv(hi) >= gv(0.5 * hi)) hi *= 2.0;
  hi = std::min(hi, cap);

  double lo = 0.0;
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - golden * (hi - lo);
  double x2 = lo + golden * (hi - lo);
  double g1 = gv(x1);
  double g2 = gv(x2);
  const double width_tol = 1e-12 * (1.0 + hi);
  while (hi - lo > width_tol) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + golden * (hi - lo);
      g2 = gv(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - golden * (hi - lo);
      g1 = gv(x1);
    }
  }

  MuSearchResult out;
  out.mu_star = 0.5 * (lo + hi);
  out.g_star = gv(out.mu_star);
  // Snap to the mu = 0 endpoint when it is as good; keeps diagonal examples
  // exact instead of leaving mu at bracket-width noise.
  const double g0 = gv(0.0);
  if (g0 >= out.g_star) {
    out.mu_star = 0.0;
    out.g_star = g0;
  }
  out.q = SymMat(f.mat() - out.mu_star * g.mat());
  return out;
}

namespace {

double quad_form(const SymMat& a, std::span<const double> x) {
  const auto ax = mat_vec(a.mat(), x);
  return dot(x, ax);
}

std::vector<double> normalized(std::vector<double> x) {
  const double n = norm2(x);
  if (n == 0.0) return x;
  for (double& v : x) v /= n;
  return x;
}

// Projected-gradient descent of h(x) = max(<x|A|x>, <x|B|x>) on the unit
// sphere with backtracking line search. Returns the improved point.
std::vector<double> sphere_descent(const SymMat& a, const SymMat& b,
                                   std::vector<double> x, int max_iter) {
  const int n = a.dim();
  const double scale = 1.0 + frob(a.mat()) + frob(b.mat());
  x = normalized(std::move(x));
  double hx = std::max(quad_form(a, x), quad_form(b, x));
  for (int it = 0; it < max_iter; ++it) {
    const double fa = quad_form(a, x);
    const double fb = quad_form(b, x);
    std::vector<double> grad(n, 0.0);
    const auto ga = mat_vec(a.mat(), x);
    const auto gb = mat_vec(b.mat(), x);
    if (fa > fb + 1e-12 * scale) {
      for (int i = 0; i < n; ++i) grad[i] = 2.0 * ga[i];
    } else if (fb > fa + 1e-12 * scale) {
      for (int i = 0; i < n; ++i) grad[i] = 2.0 * gb[i];
    } else {
      for (int i = 0; i < n; ++i) grad[i] = ga[i] + gb[i];
    }
    // Tangential component.
    const double xg = dot(x, grad);
    for (int i = 0; i < n; ++i) grad[i] -= xg * x[i];
    const double gn = norm2(grad);
    if (gn <= 1e-13 * scale) break;

    double alpha = 1.0 / scale;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      std::vector<double> y(n);
      for (int i = 0; i < n; ++i) y[i] = x[i] - alpha * grad[i];
      y = normalized(std::move(y));
      const double hy = std::max(quad_form(a, y), quad_form(b, y));
      if (hy < hx - 1e-12 * alpha * gn * gn) {
        x = std::move(y);
        hx = hy;
        moved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!moved) break;
  }
  return x;
}

// Maximize min(-<x|F|x>, <x|G|x>) around a strict witness to fatten both
// margins; subgradient ascent with backtracking.
std::vector<double> polish_witness(const SymMat& f, const SymMat& g,
                                   std::vector<double> x, int max_iter = 120) {
  const int n = f.dim();
  const double scale = 1.0 + frob(f.mat()) + frob(g.mat());
  auto margin = [&](std::span<const double> y) {
    return std::min(-quad_form(f, y), quad_form(g, y));
  };
  x = normalized(std::move(x));
  double mx = margin(x);
  for (int it = 0; it < max_iter; ++it) {
    const double mf = -quad_form(f, x);
    const double mg = quad_form(g, x);
    const auto gf = mat_vec(f.mat(), x);
    const auto gg = mat_vec(g.mat(), x);
    std::vector<double> grad(n, 0.0);
    if (mf < mg - 1e-12 * scale) {
      for (int i = 0; i < n; ++i) grad[i] = -2.0 * gf[i];
    } else if (mg < mf - 1e-12 * scale) {
      for (int i = 0; i < n; ++i) grad[i] = 2.0 * gg[i];
    } else {
      for (int i = 0; i < n; ++i) grad[i] = gg[i] - gf[i];
    }
    const double xg = dot(x, grad);
    for (int i = 0; i < n; ++i) grad[i] -= xg * x[i];
    const double gn = norm2(grad);
    if (gn <= 1e-13 * scale) break;
    double alpha = 0.5 / scale;
    bool moved = false;
    for (int bt = 0; bt < 50; ++bt) {
      std::vector<double> y(n);
      for (int i = 0; i < n; ++i) y[i] = x[i] + alpha * grad[i];
      y = normalized(std::move(y));
      if (margin(y) > mx + 1e-14 * alpha * gn * gn) {
        x = std::move(y);
        mx = margin(x);
        moved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!moved) break;
  }
  return x;
}

std::vector<double> random_unit(Prng& rng, int n) {
  std::vector<double> x(n);
  double s = 0.0;
  for (double& v : x) {
    v = rng.gaussian();
    s += v * v;
  }
  if (s < 1e-12) x[0] = 1.0;
  return normalized(std::move(x));
}

}  // namespace

SLemmaOutcome decide(const SymMat& f, const SymMat& g,
                     std::span<const double> xbar, const SLemmaOptions& opts) {
  if (f.dim() != g.dim()) throw InvalidInput("decide: dimension mismatch");
  if (static_cast<int>(xbar.size()) != f.dim()) {
    throw InvalidInput("decide: Slater point has wrong dimension");
  }
  const double slater = quad_form(g, xbar);
  if (!(slater > 0.0)) throw SlaterViolation(slater);

  const MuSearchResult ms = mu_search(f, g);
  SLemmaOutcome out;
  out.g_star = ms.g_star;
  out.mu_star = ms.mu_star;

  const double scale = 1.0 + frob(f.mat()) + ms.mu_star * frob(g.mat());
  if (ms.g_star >= -opts.tol * scale) {
    out.feasible = true;
    out.mu = ms.mu_star;
    out.q = ms.q;
    return out;
  }

  // Infeasible: hunt a unit x with <x|F|x> < 0 and <x|G|x> > 0 by
  // minimizing max(<x|F|x>, -<x|G|x>) from spectral and random starts.
  const SymMat neg_g(-1.0 * g.mat());
  const int n = f.dim();
  std::vector<std::vector<double>> starts;
  const SymEig ef = sym_eig(f);
  for (int j = 0; j < n; ++j) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = ef.vectors(i, j);
    starts.push_back(std::move(v));
  }
  {
    const SymEig eq = sym_eig(ms.q);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = eq.vectors(i, 0);
    starts.push_back(std::move(v));
  }
  Prng rng(opts.seed);
  for (int k = 0; k < opts.multistarts; ++k) starts.push_back(random_unit(rng, n));

  std::vector<double> best;
  double best_margin = -1e300;
  for (auto& s0 : starts) {
    auto x = sphere_descent(f, neg_g, std::move(s0), 200);
    x = polish_witness(f, g, std::move(x));
    const double m = std::min(-quad_form(f, x), quad_form(g, x));
    if (m > best_margin) {
      best_margin = m;
      best = x;
    }
  }
  if (best.empty() || best_margin <= 0.0) {
    throw InternalDefect("decide: infeasible instance but no strict witness found");
  }
  out.feasible = false;
  out.witness = best;
  out.witness_f = quad_form(f, best);
  out.witness_g = quad_form(g, best);
  return out;
}

//==========================================================================
// Pencil walk
//==========================================================================

namespace {

SymMat pencil_at(const SymMat& m, const SymMat& n, double t) {
  return SymMat((1.0 - t) * m.mat() + t * n.mat());
}

}  // namespace

PencilWalkState pencil_state(const SymMat& m, const SymMat& n, double t,
                             double band) {
  const SymMat mt = pencil_at(m, n, t);
  const SymEig eig = sym_eig(mt);
  const int dim = m.dim();
  const double scale = 1.0 + frob(mt.mat());
  int k = 1;
  while (k < dim && eig.values[k] <= eig.values[0] + band * scale) ++k;
  PencilWalkState st;
  st.t = t;
  st.lambda_t = eig.values[0];
  st.eigenspace = RMat(dim, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < dim; ++i) st.eigenspace(i, j) = eig.vectors(i, j);
  return st;
}

PencilOutcome reformulated_decide(const SymMat& m, const SymMat& n,
                                  const PencilOptions& opts) {
  if (m.dim() != n.dim()) {
    throw InvalidInput("reformulated_decide: dimension mismatch");
  }
  const int dim = m.dim();
  const double scale = 1.0 + std::max(frob(m.mat()), frob(n.mat()));
  const double tol = opts.tol * scale;

  auto phi = [&](double t) { return lambda_min(pencil_at(m, n, t)); };

  // lambda_min of an affine pencil is concave in t: golden-section max.
  double lo = 0.0, hi = 1.0;
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - golden * (hi - lo);
  double x2 = lo + golden * (hi - lo);
  double p1 = phi(x1), p2 = phi(x2);
  while (hi - lo > 1e-13) {
    if (p1 < p2) {
      lo = x1;
      x1 = x2;
      p1 = p2;
      x2 = lo + golden * (hi - lo);
      p2 = phi(x2);
    } else {
      hi = x2;
      x2 = x1;
      p2 = p1;
      x1 = hi - golden * (hi - lo);
      p1 = phi(x1);
    }
  }
  const double t_best = 0.5 * (lo + hi);
  double phi_best = phi(t_best);
  // Endpoints can beat the interior bracket when the max sits on them.
  const double phi0 = phi(0.0), phi1 = phi(1.0);
  double t_max = t_best;
  if (phi0 >= phi_best) {
    t_max = 0.0;
    phi_best = phi0;
  }
  if (phi1 > phi_best) {
    t_max = 1.0;
    phi_best = phi1;
  }

  PencilOutcome out;
  if (phi_best >= -tol) {
    out.feasible = true;
    // First feasible t: phi is concave, hence nondecreasing up to its max;
    // bisect the crossing of -tol on [0, t_max].
    if (phi0 >= -tol) {
      out.t = 0.0;
    } else {
      double a = 0.0, b = t_max;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (a + b);
        if (phi(mid) >= -tol) {
          b = mid;
        } else {
          a = mid;
        }
      }
      out.t = b;
    }
    out.lambda_min_t = phi(out.t);
    // Feasible only in a tolerance-wide sliver at t = 1: no finite-mu
    // certificate exists under the mu = t/(1-t) mapping.
    out.corner_t1 = out.t >= 1.0 - 100.0 * tol;
    return out;
  }

  // Infeasible for every t: walk the pencil collecting minimum-eigenspace
  // candidates, searching degenerate eigenspaces along deterministic grids.
  std::vector<double> best;
  double best_margin = -1e300;
  auto consider = [&](std::span<const double> x) {
    const double mm = dot(x, mat_vec(m.mat(), x));
    const double nn = dot(x, mat_vec(n.mat(), x));
    const double margin = std::min(-mm, -nn);
    if (margin > best_margin) {
      best_margin = margin;
      best.assign(x.begin(), x.end());
    }
  };

  const int steps = std::max(2, static_cast<int>(std::round(1.0 / opts.step)));
  Prng rng(opts.seed);
  for (int si = 0; si <= steps; ++si) {
    const double t = static_cast<double>(si) / steps;
    const PencilWalkState st = pencil_state(m, n, t);
    const int k = st.eigenspace.cols();
    if (k == 1) {
      std::vector<double> x(dim);
      for (int i = 0; i < dim; ++i) x[i] = st.eigenspace(i, 0);
      consider(x);
    } else if (k == 2) {
      // Great circle of the two-dimensional eigenspace; mirrors the
      // connectedness step of the walk.
      for (int j = 0; j < 32; ++j) {
        const double th = j * std::numbers::pi / 32.0;
        std::vector<double> x(dim);
        for (int i = 0; i < dim; ++i) {
          x[i] = std::cos(th) * st.eigenspace(i, 0) +
                 std::sin(th) * st.eigenspace(i, 1);
        }
        consider(x);
      }
    } else {
      for (int j = 0; j < 64; ++j) {
        std::vector<double> c(k);
        double s = 0.0;
        for (double& v : c) {
          v = rng.gaussian();
          s += v * v;
        }
        if (s < 1e-12) c[0] = 1.0;
        std::vector<double> x(dim, 0.0);
        for (int i = 0; i < dim; ++i)
          for (int jj = 0; jj < k; ++jj) x[i] += c[jj] * st.eigenspace(i, jj);
        consider(normalized(std::move(x)));
      }
    }
  }

  // Refine the best candidate (and random restarts if needed) on
  // h(x) = max(<x|M|x>, <x|N|x>).
  if (!best.empty()) {
    auto x = sphere_descent(m, n, best, 200);
    consider(x);
  }
  if (best_margin <= 0.0) {
    for (int k = 0; k < 64 && best_margin <= 0.0; ++k) {
      auto x = sphere_descent(m, n, random_unit(rng, dim), 300);
      consider(x);
    }
  }
  if (best_margin <= 0.0) {
    throw InternalDefect("reformulated_decide: no strict counterexample found");
  }
  out.feasible = false;
  out.counterexample = best;
  out.ce_m = dot(best, mat_vec(m.mat(), best));
  out.ce_n = dot(best, mat_vec(n.mat(), best));
  return out;
}

}  // namespace posmap
