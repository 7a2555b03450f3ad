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

#include "posmap/decomp.hpp"

#include <algorithm>
#include <cmath>

namespace posmap {

//==========================================================================
// Cube Caratheodory
//==========================================================================

std::vector<CubeTerm> caratheodory_cube(const std::array<double, 3>& s_in) {
  std::array<double, 3> s = s_in;
  for (double& c : s) {
    if (c > 1.0) {
      if (c > 1.0 + 1e-8) throw InvalidInput("caratheodory_cube: point outside cube");
      c = 1.0;
    }
    if (c < -1.0) {
      if (c < -1.0 - 1e-8) throw InvalidInput("caratheodory_cube: point outside cube");
      c = -1.0;
    }
  }

  // Product representation over the 8 vertices; exact convex identity.
  struct Support {
    std::array<int, 3> eps;
    double weight;
  };
  std::vector<Support> sup;
  for (int k = 0; k < 8; ++k) {
    std::array<int, 3> eps = {(k & 1) ? 1 : -1, (k & 2) ? 1 : -1,
                              (k & 4) ? 1 : -1};
    double w = 1.0;
    for (int i = 0; i < 3; ++i) w *= 0.5 * (1.0 + eps[i] * s[i]);
    if (w > 0.0) sup.push_back({eps, w});
  }

  // Eliminate support points along affine dependences until at most 4
  // remain. Each pass zeroes at least one weight, so this terminates.
  while (sup.size() > 4) {
    const int k = static_cast<int>(sup.size());
    RMat a(4, k);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < 3; ++i) a(i, j) = sup[j].eps[i];
      a(3, j) = 1.0;
    }
    std::vector<double> c = min_singular_vector(a);
    double cmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    if (cmax == 0.0) throw InternalDefect("caratheodory_cube: null direction vanished");
    bool has_positive = false;
    for (double v : c)
      if (v > 0.0) has_positive = true;
    if (!has_positive) {
      for (double& v : c) v = -v;
    }

    double t = 1e300;
    int drop = -1;
    for (int j = 0; j < k; ++j) {
      if (c[j] > 1e-14 * cmax) {
        const double ratio = sup[j].weight / c[j];
        if (ratio < t) {
          t = ratio;
          drop = j;
        }
      }
    }
    if (drop < 0) throw InternalDefect("caratheodory_cube: no positive direction");
    for (int j = 0; j < k; ++j) sup[j].weight -= t * c[j];
    sup[drop].weight = 0.0;
    std::erase_if(sup, [](const Support& x) { return x.weight <= 1e-15; });
  }

  double total = 0.0;
  for (const Support& x : sup) total += x.weight;
  std::vector<CubeTerm> out;
  out.reserve(sup.size());
  for (const Support& x : sup) {
    out.push_back({x.weight / total, x.eps});
  }
  return out;
}

//==========================================================================
// Spinor lift
//==========================================================================

RMat rotation_of_unitary(const CMat& u) {
  RMat r(3, 3);
  const CMat ud = dagger(u);
  for (int j = 1; j <= 3; ++j) {
    const CMat img = u * pauli(j) * ud;
    for (int i = 1; i <= 3; ++i) {
      r(i - 1, j - 1) = 0.5 * trace(pauli(i) * img).real();
    }
  }
  return r;
}

CMat spinor_lift(const RMat& r) {
  if (r.rows() != 3 || r.cols() != 3) throw InvalidInput("spinor_lift: need 3x3");
  const double ortho_defect = frob(transpose(r) * r - RMat::identity(3));
  const double det = det3(r);
  if (ortho_defect > 1e-8 || det <= 0.0) {
    throw NotRotation(std::max(ortho_defect, det <= 0.0 ? 1.0 : 0.0));
  }

  // Shepperd extraction: branch on the largest diagonal combination.
  const double tr = r(0, 0) + r(1, 1) + r(2, 2);
  double q[4];  // w, x, y, z
  if (tr >= r(0, 0) && tr >= r(1, 1) && tr >= r(2, 2)) {
    const double w = 0.5 * std::sqrt(1.0 + tr);
    q[0] = w;
    q[1] = (r(2, 1) - r(1, 2)) / (4.0 * w);
    q[2] = (r(0, 2) - r(2, 0)) / (4.0 * w);
    q[3] = (r(1, 0) - r(0, 1)) / (4.0 * w);
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double x = 0.5 * std::sqrt(1.0 + 2.0 * r(0, 0) - tr);
    q[1] = x;
    q[0] = (r(2, 1) - r(1, 2)) / (4.0 * x);
    q[2] = (r(0, 1) + r(1, 0)) / (4.0 * x);
    q[3] = (r(0, 2) + r(2, 0)) / (4.0 * x);
  } else if (r(1, 1) >= r(2, 2)) {
    const double y = 0.5 * std::sqrt(1.0 + 2.0 * r(1, 1) - tr);
    q[2] = y;
    q[0] = (r(0, 2) - r(2, 0)) / (4.0 * y);
    q[1] = (r(0, 1) + r(1, 0)) / (4.0 * y);
    q[3] = (r(1, 2) + r(2, 1)) / (4.0 * y);
  } else {
    const double z = 0.5 * std::sqrt(1.0 + 2.0 * r(2, 2) - tr);
    q[3] = z;
    q[0] = (r(1, 0) - r(0, 1)) / (4.0 * z);
    q[1] = (r(0, 2) + r(2, 0)) / (4.0 * z);
    q[2] = (r(1, 2) + r(2, 1)) / (4.0 * z);
  }

  double n = 0.0;
  for (double v : q) n += v * v;
  n = std::sqrt(n);
  for (double& v : q) v /= n;

  int imax = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(q[i]) > std::abs(q[imax])) imax = i;
  if (q[imax] < 0.0) {
    for (double& v : q) v = -v;
  }

  // U = w Id - i (x X + y Y + z Z); det U = |q|^2 = 1.
  CMat u(2, 2);
  u(0, 0) = cplx(q[0], -q[3]);
  u(0, 1) = cplx(-q[2], -q[1]);
  u(1, 0) = cplx(q[2], -q[1]);
  u(1, 1) = cplx(q[0], q[3]);
  return u;
}

//==========================================================================
// Bistochastic decomposition
//==========================================================================

std::vector<RotationTerm> bistochastic_decompose(const QubitMap& m) {
  if (!is_unital(m) || !is_trace_preserving(m)) throw NotBistochastic();

  RMat r(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m.ptm()(i + 1, j + 1);

  const Svd3 svd = svd3(r);
  if (svd.s[0] > 1.0 + 1e-8) throw NormExceeded(svd.s[0]);

  std::array<double, 3> s = svd.s;
  for (double& v : s) v = std::clamp(v, -1.0, 1.0);

  std::vector<RotationTerm> terms;
  for (const CubeTerm& ct : caratheodory_cube(s)) {
    if (ct.weight < 1e-12) continue;
    RMat d(3, 3);
    for (int i = 0; i < 3; ++i) d(i, i) = ct.signs[i];
    RotationTerm term;
    term.weight = ct.weight;
    term.o = svd.u * d * transpose(svd.v);
    term.det_sign = ct.signs[0] * ct.signs[1] * ct.signs[2];
    terms.push_back(term);
  }
  return terms;
}

//==========================================================================
// Full pipeline
//==========================================================================

namespace {

// Bloch image of the transpose map; reflections factor through it on the
// right, O = O' * refl with O' in SO(3).
RMat transpose_reflection() {
  RMat d = RMat::identity(3);
  d(1, 1) = -1.0;
  return d;
}

Decomposition lift_terms(const std::vector<RotationTerm>& terms,
                         const CMat& a_inv, const CMat& b_inv) {
  Decomposition d;
  const CMat b_inv_conj = conj_entries(b_inv);
  for (const RotationTerm& t : terms) {
    const double w = std::sqrt(t.weight);
    if (t.det_sign > 0) {
      const CMat u = spinor_lift(t.o);
      d.kraus.push_back(cplx(w, 0.0) * (a_inv * u * b_inv));
    } else {
      const CMat u = spinor_lift(t.o * transpose_reflection());
      // (B^-1 rho B^-1)^T = conj(B^-1) rho^T conj(B^-1) for Hermitian B.
      d.co_kraus.push_back(cplx(w, 0.0) * (a_inv * u * b_inv_conj));
    }
  }
  return d;
}

}  // namespace

Decomposition decompose(const QubitMap& m, const DecompOptions& opts) {
  const PositivityResult pos = is_positive(m);
  if (!pos.positive) throw NotPositive();

  Decomposition d;
  if (is_unital(m) && is_trace_preserving(m)) {
    const CMat id = CMat::identity(2);
    d = lift_terms(bistochastic_decompose(m), id, id);
  } else {
    if (!opts.assume_interior && !is_interior(m).interior) throw BoundaryMap();
    ScaleOptions sopts = opts.scale;
    sopts.tol = std::min(sopts.tol, 1e-3 * opts.tol);
    sopts.assume_interior = opts.assume_interior;
    const ScalingResult sc = scale_to_bistochastic(m, sopts);
    const CMat a_inv = pd_functions(sc.a).inv.mat();
    const CMat b_inv = pd_functions(sc.b).inv.mat();
    d = lift_terms(bistochastic_decompose(sc.scaled), a_inv, b_inv);
  }

  const double residual = verify_decomposition(m, d);
  if (residual > opts.tol) {
    throw InternalDefect("decompose: residual " + std::to_string(residual) +
                         " above tolerance after scaling converged");
  }
  return d;
}

GeneralDecomposition decompose_general(const QubitMap& m,
                                       const std::vector<double>& eps_schedule,
                                       const DecompOptions& opts) {
  const PositivityResult pos = is_positive(m);
  if (!pos.positive) throw NotPositive();

  GeneralDecomposition out;
  if (is_unital(m) && is_trace_preserving(m)) {
    out.decomposition = decompose(m, opts);
    out.residual = verify_decomposition(m, out.decomposition);
    out.path = "bistochastic";
    return out;
  }
  if (is_interior(m).interior) {
    out.decomposition = decompose(m, opts);
    out.residual = verify_decomposition(m, out.decomposition);
    out.path = "interior";
    return out;
  }

  const RMat omega = depolarizing_map().ptm();
  bool have = false;
  std::exception_ptr last_error;
  DecompOptions reg_opts = opts;
  reg_opts.assume_interior = true;  // Phi_eps is interior by construction
  for (double eps : eps_schedule) {
    const QubitMap reg(RMat((1.0 - eps) * m.ptm() + eps * omega));
    try {
      const Decomposition d = decompose(reg, reg_opts);
      out.decomposition = d;
      out.residual = verify_decomposition(m, d);
      out.eps_used = eps;
      out.path = "regularized";
      have = true;
    } catch (const Error&) {
      last_error = std::current_exception();
    }
  }
  if (!have) {
    if (last_error) std::rethrow_exception(last_error);
    throw InternalDefect("decompose_general: empty epsilon schedule");
  }
  return out;
}

double verify_decomposition(const QubitMap& m, const Decomposition& d) {
  if (d.kraus.empty() && d.co_kraus.empty()) return frob(m.ptm());
  return frob(from_kraus(d).ptm() - m.ptm());
}

}  // namespace posmap
