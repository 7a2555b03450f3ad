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

#include "posmap/extremal.hpp"

#include <cmath>

namespace posmap {

namespace {

// Top spectral pair of a symmetric matrix.
std::pair<double, std::vector<double>> top_eigenpair(const SymMat& q) {
  const SymEig eig = sym_eig(q);
  const int n = q.dim();
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = eig.vectors(i, n - 1);
  return {eig.values[n - 1], v};
}

// Largest |s| with 1 + 2 s delta + s^2 a >= 0 on [-s, s]; +inf as 1e300.
double sign_window(int delta, double a) {
  if (delta == 0) {
    return a >= 0.0 ? 1e300 : 1.0 / std::sqrt(-a);
  }
  // p(s) = a s^2 + 2 s + 1, p(0) = 1 > 0.
  if (a == 0.0) return 0.5;
  const double disc = 4.0 - 4.0 * a;
  if (disc < 0.0) return 1e300;  // a > 1: no real roots
  const double sq = std::sqrt(disc);
  const double r1 = (-2.0 + sq) / (2.0 * a);
  const double r2 = (-2.0 - sq) / (2.0 * a);
  double window = 1e300;
  if (std::isfinite(r1) && r1 != 0.0) window = std::min(window, std::abs(r1));
  if (std::isfinite(r2) && r2 != 0.0) window = std::min(window, std::abs(r2));
  return window;
}

// Unit vector deterministically not parallel to x.
std::vector<double> orthogonal_direction(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  int k = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(x[i]) < std::abs(x[k])) k = i;
  std::vector<double> e(n, 0.0);
  e[k] = 1.0;
  const double nx2 = dot(x, x);
  const double p = dot(e, x) / nx2;
  for (int i = 0; i < n; ++i) e[i] -= p * x[i];
  const double ne = norm2(e);
  for (double& c : e) c /= ne;
  return e;
}

// Halving search for an eps such that both L +- eps |u><v| preserve the cone.
double verified_eps(const LorentzMap& l, const RMat& dhat, double eps0,
                    double tol) {
  const double floor = 1e-12 * (1.0 + frob(l.mat)) / (1.0 + frob(dhat));
  double eps = eps0;
  while (eps >= floor) {
    const LorentzMap plus = LorentzMap::of(l.mat + eps * dhat);
    const LorentzMap minus = LorentzMap::of(l.mat - eps * dhat);
    if (preserves_cone(plus, tol).preserves &&
        preserves_cone(minus, tol).preserves) {
      return eps;
    }
    eps *= 0.5;
  }
  throw InternalDefect("build_perturbation: no verifiable eps found");
}

}  // namespace

std::pair<RMat, double> build_perturbation(const LorentzMap& l, double mu,
                                           const SymMat& q, double tol) {
  const int m = l.m;
  const double lnorm = frob(l.mat);
  if (numerical_rank(l.mat) < 2) throw RankDeficientInput();
  if (frob(q.mat()) <= 1e-12 * lnorm * lnorm) throw QZero();
  if (!(mu > 0.0)) throw InvalidInput("build_perturbation: mu must be positive");

  const auto [lam, v_dir] = top_eigenpair(q);
  if (lam <= 0.0) throw InvalidInput("build_perturbation: Q has no positive part");
  std::vector<double> v(m);
  for (int i = 0; i < m; ++i) v[i] = std::sqrt(lam) * v_dir[i];

  // u with L^T J u = delta v; delta = 1 via the linear system when L^T J is
  // invertible, else a null vector.
  const RMat ltj = transpose(l.mat) * lorentz_j(m);
  std::vector<double> u;
  int delta = 1;
  if (!lu_solve(ltj, v, u)) {
    delta = 0;
    u = min_singular_vector(ltj);
  }

  const RMat j = lorentz_j(m);
  const double uju = dot(u, mat_vec(j, u));
  const double window = sign_window(delta, uju);

  const RMat dhat = outer(u, v);
  const double eps_cap = 10.0 * (1.0 + lnorm) / (1.0 + frob(dhat));
  const double eps0 = 0.9 * std::min(window, eps_cap);
  const double eps = verified_eps(l, dhat, eps0, tol);
  return {eps * dhat, eps};
}

ExtremalVerdict classify(const LorentzMap& l, double tol) {
  ExtremalVerdict out;
  const double lnorm = frob(l.mat);
  if (lnorm <= 1e-14) {
    throw InvalidInput("classify: zero map generates no ray");
  }

  const ConeCheck check = preserves_cone(l, tol);
  out.g_star = check.g_star;
  out.mu_star = check.mu_star;
  if (!check.preserves) {
    out.kind = ExtremalVerdict::Kind::NotInCone;
    return out;
  }

  out.q_residual = frob(check.q.mat()) / (lnorm * lnorm);
  if (out.q_residual <= tol && check.mu_star > 1e-9 * lnorm * lnorm) {
    out.kind = ExtremalVerdict::Kind::Automorphism;
    out.mu = check.mu_star;
    return out;
  }

  if (numerical_rank(l.mat) == 1) {
    // Factor L = |u><v| through the top singular triple.
    const SymEig gram = sym_eig(SymMat(transpose(l.mat) * l.mat));
    const int n = l.m;
    std::vector<double> v_dir(n);
    for (int i = 0; i < n; ++i) v_dir[i] = gram.vectors(i, n - 1);
    const double sigma = std::sqrt(std::max(gram.values[n - 1], 0.0));
    std::vector<double> u_dir = mat_vec(l.mat, v_dir);
    for (double& c : u_dir) c /= sigma;
    if (u_dir[0] < 0.0) {
      for (double& c : u_dir) c = -c;
      for (double& c : v_dir) c = -c;
    }
    const double root = std::sqrt(sigma);
    std::vector<double> u_vec(n), v_vec(n);
    for (int i = 0; i < n; ++i) {
      u_vec[i] = root * u_dir[i];
      v_vec[i] = root * v_dir[i];
    }
    const LorentzVec uv = LorentzVec::of(u_vec);
    const LorentzVec vv = LorentzVec::of(v_vec);

    const double qu = q_form(uv) / dot(u_vec, u_vec);
    const double qv = q_form(vv) / dot(v_vec, v_vec);
    const double band = 1e-7;
    if (std::abs(qu) <= band && std::abs(qv) <= band && uv.x[0] > 0.0 &&
        vv.x[0] > 0.0) {
      out.kind = ExtremalVerdict::Kind::RankOneExtreme;
      out.u = uv;
      out.v = vv;
      return out;
    }

    // An interior factor makes the ray non-extreme; perturb that factor.
    std::vector<double> du, dv;
    if (qu > band) {
      du = orthogonal_direction(u_vec);
      dv = v_vec;
    } else {
      du = u_vec;
      dv = orthogonal_direction(v_vec);
    }
    RMat dhat = outer(du, dv);
    const double eps0 =
        0.5 * frob(l.mat) / (1.0 + frob(dhat));
    out.kind = ExtremalVerdict::Kind::NotExtreme;
    out.eps = verified_eps(l, dhat, eps0, tol);
    out.delta = out.eps * dhat;
    return out;
  }

  auto [delta, eps] = build_perturbation(l, check.mu_star, check.q, tol);
  out.kind = ExtremalVerdict::Kind::NotExtreme;
  out.delta = delta;
  out.eps = eps;
  return out;
}

KadisonForm kadison_extract(const QubitMap& m) {
  const ExtremalVerdict verdict = classify(lorentz_from_qubit(m));
  if (verdict.kind != ExtremalVerdict::Kind::Automorphism) {
    throw NotAutomorphism();
  }

  auto try_extract = [](const HermMat& c) -> std::pair<bool, CMat> {
    const HermEig eig = herm_eig(c);
    const double top = eig.values[3];
    double rest = 0.0;
    for (int i = 0; i < 3; ++i) rest = std::max(rest, std::abs(eig.values[i]));
    if (top <= 0.0 || rest > 1e-7 * top) return {false, CMat()};
    CMat v(2, 2);
    const double root = std::sqrt(top);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) v(k, i) = root * eig.vectors(2 * i + k, 3);
    return {true, v};
  };

  KadisonForm out;
  auto [ok, v] = try_extract(choi(m));
  if (ok) {
    out.v = v;
    out.is_co = false;
  } else {
    auto [ok2, v2] = try_extract(choi(compose(m, transpose_map())));
    if (!ok2) {
      throw ExtractionFailure(
          "kadison_extract: neither Choi matrix is rank one within tolerance");
    }
    out.v = v2;
    out.is_co = true;
  }

  QubitMap rec = conjugation_map(out.v);
  if (out.is_co) rec = compose(rec, transpose_map());
  const double res = frob(rec.ptm() - m.ptm());
  if (res > 1e-9 * (1.0 + frob(m.ptm()))) {
    throw ExtractionFailure("kadison_extract: reconstruction residual " +
                            std::to_string(res));
  }
  return out;
}

//==========================================================================
// Generators
//==========================================================================

LorentzVec random_boundary_vector(Prng& rng, int m) {
  std::vector<double> x(m, 0.0);
  double n2 = 0.0;
  for (int k = 1; k < m; ++k) {
    x[k] = rng.gaussian();
    n2 += x[k] * x[k];
  }
  if (n2 < 1e-12) {
    x[1] = 1.0;
    n2 = 1.0;
  }
  const double scale = 0.5 + 1.5 * rng.uniform();
  const double n = std::sqrt(n2);
  for (int k = 1; k < m; ++k) x[k] *= scale / n;
  x[0] = scale;
  return LorentzVec::of(std::move(x));
}

LorentzMap random_lorentz_automorphism(std::uint64_t seed, int m,
                                       double* scale_out) {
  Prng rng(seed);

  auto random_rotation_block = [&]() {
    // Gram-Schmidt of a Gaussian (m-1)x(m-1) matrix, embedded spatially.
    const int d = m - 1;
    RMat g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = rng.gaussian();
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < j; ++k) {
        double p = 0.0;
        for (int i = 0; i < d; ++i) p += g(i, j) * g(i, k);
        for (int i = 0; i < d; ++i) g(i, j) -= p * g(i, k);
      }
      double n = 0.0;
      for (int i = 0; i < d; ++i) n += g(i, j) * g(i, j);
      n = std::sqrt(n);
      if (n < 1e-9) {
        g(j, j) += 1.0;
        n = 1.0;
      }
      for (int i = 0; i < d; ++i) g(i, j) /= n;
    }
    RMat r = RMat::identity(m);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r(i + 1, j + 1) = g(i, j);
    return r;
  };

  RMat boost = RMat::identity(m);
  const double chi = -1.5 + 3.0 * rng.uniform();
  boost(0, 0) = std::cosh(chi);
  boost(0, 1) = std::sinh(chi);
  boost(1, 0) = std::sinh(chi);
  boost(1, 1) = std::cosh(chi);

  const double t = 0.3 + 2.7 * rng.uniform();
  const RMat l = t * (random_rotation_block() * boost * random_rotation_block());
  if (scale_out != nullptr) *scale_out = t;
  return LorentzMap::of(l);
}

LorentzMap random_boundary_rank_one(std::uint64_t seed, int m) {
  Prng rng(seed);
  const LorentzVec u = random_boundary_vector(rng, m);
  const LorentzVec v = random_boundary_vector(rng, m);
  return LorentzMap::of(outer(u.x, v.x));
}

}  // namespace posmap
