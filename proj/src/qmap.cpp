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

#include "posmap/qmap.hpp"

#include <cmath>

namespace posmap {

const CMat& pauli(int a) {
  static const std::array<CMat, 4> sigma = {
      CMat(2, 2, {1.0, 0.0, 0.0, 1.0}),
      CMat(2, 2, {0.0, 1.0, 1.0, 0.0}),
      CMat(2, 2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}),
      CMat(2, 2, {1.0, 0.0, 0.0, -1.0}),
  };
  return sigma[a];
}

std::array<double, 4> bloch(const Herm2& rho) {
  if (rho.dim() != 2) throw InvalidInput("bloch: need a 2x2 Hermitian matrix");
  std::array<double, 4> x{};
  for (int a = 0; a < 4; ++a) {
    x[a] = trace(pauli(a) * rho.mat()).real();
  }
  return x;
}

Herm2 herm2_from_bloch(const std::array<double, 4>& x) {
  CMat m(2, 2);
  for (int a = 0; a < 4; ++a) {
    m += cplx(0.5 * x[a], 0.0) * pauli(a);
  }
  return Herm2(m);
}

QubitMap::QubitMap(const RMat& ptm) : ptm_(ptm) {
  if (ptm.rows() != 4 || ptm.cols() != 4) {
    throw InvalidInput("QubitMap: PTM must be 4x4");
  }
}

QubitMap conjugation_map(const CMat& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw InvalidInput("conjugation_map: need a 2x2 matrix");
  }
  if (frob(m) == 0.0) throw ZeroMatrix();
  RMat l(4, 4);
  const CMat md = dagger(m);
  for (int b = 0; b < 4; ++b) {
    const CMat img = m * pauli(b) * md;
    for (int a = 0; a < 4; ++a) {
      l(a, b) = 0.5 * trace(pauli(a) * img).real();
    }
  }
  return QubitMap(l);
}

QubitMap identity_map() { return QubitMap(RMat::identity(4)); }

QubitMap transpose_map() {
  const double d[4] = {1.0, 1.0, -1.0, 1.0};
  return QubitMap(RMat::diagonal(d));
}

QubitMap depolarizing_map() {
  const double d[4] = {1.0, 0.0, 0.0, 0.0};
  return QubitMap(RMat::diagonal(d));
}

QubitMap special_map(SpecialKind kind) {
  switch (kind) {
    case SpecialKind::Identity: return identity_map();
    case SpecialKind::Transpose: return transpose_map();
    case SpecialKind::Depolarizing: return depolarizing_map();
  }
  throw InvalidInput("special_map: unknown kind");
}

QubitMap from_kraus(const std::vector<CMat>& kraus,
                    const std::vector<CMat>& co_kraus) {
  if (kraus.empty() && co_kraus.empty()) throw EmptyInput();
  RMat l(4, 4);
  for (const CMat& a : kraus) {
    l += conjugation_map(a).ptm();
  }
  const RMat t = transpose_map().ptm();
  for (const CMat& b : co_kraus) {
    l += conjugation_map(b).ptm() * t;
  }
  return QubitMap(l);
}

QubitMap from_kraus(const Decomposition& d) {
  return from_kraus(d.kraus, d.co_kraus);
}

Herm2 apply(const QubitMap& m, const Herm2& rho) {
  const std::array<double, 4> x = bloch(rho);
  std::array<double, 4> y{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) y[a] += m.ptm()(a, b) * x[b];
  return herm2_from_bloch(y);
}

QubitMap adjoint(const QubitMap& m) { return QubitMap(transpose(m.ptm())); }

QubitMap compose(const QubitMap& outer, const QubitMap& inner) {
  return QubitMap(outer.ptm() * inner.ptm());
}

HermMat choi(const QubitMap& m) {
  // Phi(sigma_b) = sum_a L_ab sigma_a; E_ij = 1/2 sum_a sigma_a[j][i] sigma_a.
  std::array<CMat, 4> phi_sigma;
  for (int b = 0; b < 4; ++b) {
    CMat acc(2, 2);
    for (int a = 0; a < 4; ++a) {
      acc += cplx(m.ptm()(a, b), 0.0) * pauli(a);
    }
    phi_sigma[b] = acc;
  }
  CMat c(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CMat block(2, 2);
      for (int a = 0; a < 4; ++a) {
        block += cplx(0.5, 0.0) * pauli(a)(j, i) * phi_sigma[a];
      }
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) c(2 * i + k, 2 * j + l) = block(k, l);
    }
  }
  return HermMat(c);
}

bool is_unital(const QubitMap& m, double tol) {
  const RMat& l = m.ptm();
  double r = 0.0;
  for (int a = 0; a < 4; ++a) {
    const double target = a == 0 ? 1.0 : 0.0;
    r += (l(a, 0) - target) * (l(a, 0) - target);
  }
  return std::sqrt(r) <= tol;
}

bool is_trace_preserving(const QubitMap& m, double tol) {
  const RMat& l = m.ptm();
  double r = 0.0;
  for (int b = 0; b < 4; ++b) {
    const double target = b == 0 ? 1.0 : 0.0;
    r += (l(0, b) - target) * (l(0, b) - target);
  }
  return std::sqrt(r) <= tol;
}

//==========================================================================
// Generators
//==========================================================================

namespace {

CMat random_c2(Prng& rng) {
  CMat m(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = rng.cgaussian();
  return m;
}

// 1-4 Gaussian Kraus operators scaled so that tr Phi(Id) = 2.
std::vector<CMat> random_kraus_set(Prng& rng) {
  const int n = 1 + static_cast<int>(rng.below(4));
  std::vector<CMat> ops;
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    ops.push_back(random_c2(rng));
    total += frob(ops.back()) * frob(ops.back());
  }
  const cplx scale(std::sqrt(2.0 / total), 0.0);
  for (CMat& a : ops) a = scale * a;
  return ops;
}

}  // namespace

CMat random_su2(Prng& rng) {
  // Unit quaternion from four Gaussians.
  double q[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& v : q) {
      v = rng.gaussian();
      n2 += v * v;
    }
  } while (n2 < 1e-12);
  const double n = std::sqrt(n2);
  for (double& v : q) v /= n;
  // U = w Id - i (x X + y Y + z Z)
  CMat u(2, 2);
  u(0, 0) = cplx(q[0], -q[3]);
  u(0, 1) = cplx(-q[2], -q[1]);
  u(1, 0) = cplx(q[2], -q[1]);
  u(1, 1) = cplx(q[0], q[3]);
  return u;
}

CMat random_invertible2(Prng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    CMat v = random_c2(rng);
    const cplx det = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
    if (std::abs(det) > 0.1) return v;
  }
  throw InternalDefect("random_invertible2: rejection loop exhausted");
}

QubitMap random_cp_map(std::uint64_t seed) {
  Prng rng(seed);
  return from_kraus(random_kraus_set(rng), {});
}

QubitMap random_ccp_map(std::uint64_t seed) {
  Prng rng(seed);
  return from_kraus({}, random_kraus_set(rng));
}

QubitMap random_interior_map(std::uint64_t seed, double t) {
  if (!(t > 0.0) || t > 1.0) {
    throw InvalidInput("random_interior_map: t must lie in (0, 1]");
  }
  if (t == 1.0) return depolarizing_map();
  Prng rng(seed);
  const RMat cp = from_kraus(random_kraus_set(rng), {}).ptm();
  const RMat ccp = from_kraus({}, random_kraus_set(rng)).ptm();
  const double w = rng.uniform();
  const RMat psi = w * cp + (1.0 - w) * ccp;
  return QubitMap((1.0 - t) * psi + t * depolarizing_map().ptm());
}

QubitMap random_boundary_map(std::uint64_t seed) {
  Prng rng(seed);
  const CMat v = random_invertible2(rng);
  QubitMap m = conjugation_map(v);
  if (rng.uniform() < 0.5) m = compose(m, transpose_map());
  return m;
}

QubitMap random_nonpositive_map(std::uint64_t seed) {
  Prng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RMat l(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) l(i, j) = rng.gaussian();
    // Certify non-positivity by exhibiting a pure state with a clearly
    // negative image; rejection keeps the ensemble away from the margin band.
    const double margin = 0.02 * (1.0 + frob(l));
    bool violated = false;
    const int n_dirs = 32;
    for (int k = 0; k < n_dirs + 6 && !violated; ++k) {
      std::array<double, 4> x{};
      x[0] = 1.0;
      if (k < 6) {
        x[1 + k / 2] = k % 2 == 0 ? 1.0 : -1.0;
      } else {
        const int i = k - 6;
        const double z = 1.0 - 2.0 * (i + 0.5) / n_dirs;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = 2.39996322972865332 * i;  // golden angle
        x[1] = r * std::cos(phi);
        x[2] = r * std::sin(phi);
        x[3] = z;
      }
      const auto y = mat_vec(l, x);
      const std::array<double, 4> ya = {y[0], y[1], y[2], y[3]};
      if (lambda_min_bloch(ya) < -margin) violated = true;
    }
    if (violated) return QubitMap(l);
  }
  throw InternalDefect("random_nonpositive_map: rejection loop exhausted");
}

QubitMap random_map(std::uint64_t seed, const RandomSpec& spec) {
  switch (spec.kind) {
    case RandomSpec::Kind::Interior: return random_interior_map(seed, spec.t);
    case RandomSpec::Kind::Cp: return random_cp_map(seed);
    case RandomSpec::Kind::Ccp: return random_ccp_map(seed);
    case RandomSpec::Kind::Boundary: return random_boundary_map(seed);
    case RandomSpec::Kind::Nonpositive: return random_nonpositive_map(seed);
  }
  throw InvalidInput("random_map: unknown kind");
}

}  // namespace posmap
