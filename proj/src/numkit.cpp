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

#include "posmap/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace posmap {

namespace {

void check_dims(int rows, int cols, int cap, const char* what) {
  if (rows < 0 || cols < 0 || rows > cap || cols > cap) {
    throw InvalidInput(std::string(what) + ": dimensions out of range");
  }
}

}  // namespace

//==========================================================================
// RMat
//==========================================================================

RMat::RMat(int rows, int cols) : rows_(rows), cols_(cols), a_{} {
  check_dims(rows, cols, kMaxDim, "RMat");
}

RMat::RMat(int rows, int cols, std::initializer_list<double> entries)
    : RMat(rows, cols) {
  if (static_cast<int>(entries.size()) != rows * cols) {
    throw InvalidInput("RMat: initializer size mismatch");
  }
  std::copy(entries.begin(), entries.end(), a_.begin());
}

RMat RMat::identity(int n) {
  RMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RMat RMat::diagonal(std::span<const double> d) {
  RMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
  return m;
}

RMat& RMat::operator+=(const RMat& o) {
  for (int i = 0; i < rows_ * cols_; ++i) a_[i] += o.a_[i];
  return *this;
}

RMat& RMat::operator-=(const RMat& o) {
  for (int i = 0; i < rows_ * cols_; ++i) a_[i] -= o.a_[i];
  return *this;
}

RMat& RMat::operator*=(double s) {
  for (int i = 0; i < rows_ * cols_; ++i) a_[i] *= s;
  return *this;
}

RMat operator+(RMat a, const RMat& b) { return a += b; }
RMat operator-(RMat a, const RMat& b) { return a -= b; }
RMat operator-(const RMat& a) {
  RMat r = a;
  r *= -1.0;
  return r;
}
RMat operator*(double s, RMat a) { return a *= s; }

RMat operator*(const RMat& a, const RMat& b) {
  RMat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

RMat transpose(const RMat& a) {
  RMat r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

double frob(const RMat& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double det3(const RMat& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

std::vector<double> mat_vec(const RMat& a, std::span<const double> x) {
  std::vector<double> y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

RMat outer(std::span<const double> u, std::span<const double> v) {
  RMat r(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) r(i, j) = u[i] * v[j];
  return r;
}

bool approx_equal(const RMat& a, const RMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return frob(a - b) <= tol;
}

//==========================================================================
// CMat
//==========================================================================

CMat::CMat(int rows, int cols) : rows_(rows), cols_(cols), a_{} {
  check_dims(rows, cols, kMaxDimC, "CMat");
}

CMat::CMat(int rows, int cols, std::initializer_list<cplx> entries)
    : CMat(rows, cols) {
  if (static_cast<int>(entries.size()) != rows * cols) {
    throw InvalidInput("CMat: initializer size mismatch");
  }
  std::copy(entries.begin(), entries.end(), a_.begin());
}

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diagonal(std::span<const cplx> d) {
  CMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
  return m;
}

CMat& CMat::operator+=(const CMat& o) {
  for (int i = 0; i < rows_ * cols_; ++i) a_[i] += o.a_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  for (int i = 0; i < rows_ * cols_; ++i) a_[i] -= o.a_[i];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (int i = 0; i < rows_ * cols_; ++i) a_[i] *= s;
  return *this;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }
CMat operator*(cplx s, CMat a) { return a *= s; }

CMat operator*(const CMat& a, const CMat& b) {
  CMat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

CMat dagger(const CMat& a) {
  CMat r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

CMat ctranspose_entrywise(const CMat& a) {
  CMat r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

CMat conj_entries(const CMat& a) {
  CMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = std::conj(a(i, j));
  return r;
}

cplx trace(const CMat& a) {
  cplx t = 0.0;
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

double frob(const CMat& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

bool approx_equal(const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return frob(a - b) <= tol;
}

//==========================================================================
// SymMat / HermMat
//==========================================================================

SymMat::SymMat(const RMat& m) {
  if (m.rows() != m.cols()) throw InvalidInput("SymMat: matrix must be square");
  m_ = RMat(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      m_(i, j) = v;
      m_(j, i) = v;
    }
  }
}

SymMat SymMat::zero(int dim) { return SymMat(RMat(dim, dim)); }

SymMat SymMat::diagonal(std::span<const double> d) {
  return SymMat(RMat::diagonal(d));
}

void SymMat::set(int i, int j, double v) {
  m_(i, j) = v;
  m_(j, i) = v;
}

HermMat::HermMat(const CMat& m) {
  if (m.rows() != m.cols()) throw InvalidInput("HermMat: matrix must be square");
  m_ = CMat(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    m_(i, i) = cplx(m(i, i).real(), 0.0);
    for (int j = 0; j < i; ++j) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m_(i, j) = v;
      m_(j, i) = std::conj(v);
    }
  }
}

HermMat HermMat::zero(int dim) { return HermMat(CMat(dim, dim)); }

HermMat HermMat::identity(int n) { return HermMat(CMat::identity(n)); }

HermMat HermMat::diagonal(std::span<const double> d) {
  CMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
  return HermMat(m);
}

double HermMat::trace_real() const { return trace(m_).real(); }

HermMat operator+(const HermMat& a, const HermMat& b) {
  return HermMat(a.mat() + b.mat());
}

HermMat operator-(const HermMat& a, const HermMat& b) {
  return HermMat(a.mat() - b.mat());
}

HermMat operator*(double s, const HermMat& a) {
  return HermMat(cplx(s, 0.0) * a.mat());
}

double frob(const HermMat& a) { return frob(a.mat()); }

//==========================================================================
// Jacobi eigensolver (templated over double / complex scalar)
//==========================================================================

namespace {

inline double conj_scalar(double x) { return x; }
inline cplx conj_scalar(cplx x) { return std::conj(x); }
inline double real_part(double x) { return x; }
inline double real_part(cplx x) { return x.real(); }

// One-sided cyclic Jacobi on a Hermitian (or symmetric) matrix held in a
// generic dense container. Accumulates the unitary in v.
template <class Mat, class Scalar>
void jacobi_sweep_eig(Mat& a, Mat& v, int n) {
  const double scale = 1.0 + frob(a);
  const double off_tol = 1e-15 * scale;
  const int max_sweeps = 100;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(cplx(a(p, q)));
    off = std::sqrt(off);
    if (off <= off_tol) return;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        const double r = std::abs(cplx(apq));
        if (r <= 1e-18 * scale) continue;

        // Phase so the pivot becomes real, then a standard rotation angle.
        // With u = [[c, -s*phase], [s*conj(phase), c]] the zeroing condition
        // is t^2 - 2 zeta t - 1 = 0; take the small root for stability.
        const Scalar phase = apq / r;  // e^{i phi}; +-1 in the real case
        const double zeta = (real_part(a(q, q)) - real_part(a(p, p))) / (2.0 * r);
        const double t =
            (zeta >= 0.0 ? -1.0 : 1.0) / (std::abs(zeta) + std::hypot(zeta, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns of the 2x2 unitary u = [[c, -s*phase], [s*conj(phase), c]].
        const Scalar upq = Scalar(-s) * phase;
        const Scalar uqp = Scalar(s) * conj_scalar(phase);

        // a <- u^dagger a u, applied to rows then columns p, q.
        for (int k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = akp * Scalar(c) + akq * uqp;
          a(k, q) = akp * upq + akq * Scalar(c);
        }
        for (int k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = Scalar(c) * apk + conj_scalar(uqp) * aqk;
          a(q, k) = conj_scalar(upq) * apk + Scalar(c) * aqk;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);

        for (int k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = vkp * Scalar(c) + vkq * uqp;
          v(k, q) = vkp * upq + vkq * Scalar(c);
        }
      }
    }
  }
  throw InternalDefect("jacobi eigensolver failed to converge");
}

std::vector<int> ascending_order(const std::vector<double>& d) {
  std::vector<int> idx(d.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return d[i] < d[j]; });
  return idx;
}

}  // namespace

SymEig sym_eig(const SymMat& s) {
  const int n = s.dim();
  RMat a = s.mat();
  // Work on the unit-norm copy so convergence thresholds stay relative for
  // tiny-norm inputs.
  const double norm = frob(a);
  if (norm > 0.0) a *= 1.0 / norm;
  RMat v = RMat::identity(n);
  if (n > 1) jacobi_sweep_eig<RMat, double>(a, v, n);

  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = a(i, i) * (norm > 0.0 ? norm : 1.0);
  const auto idx = ascending_order(d);

  SymEig out;
  out.values.resize(n);
  out.vectors = RMat(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = d[idx[j]];
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, idx[j]);
  }
  return out;
}

HermEig herm_eig(const HermMat& h) {
  const int n = h.dim();
  CMat a = h.mat();
  const double norm = frob(a);
  if (norm > 0.0) a *= cplx(1.0 / norm, 0.0);
  CMat v = CMat::identity(n);
  if (n > 1) jacobi_sweep_eig<CMat, cplx>(a, v, n);

  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = a(i, i).real() * (norm > 0.0 ? norm : 1.0);
  const auto idx = ascending_order(d);

  HermEig out;
  out.values.resize(n);
  out.vectors = CMat(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = d[idx[j]];
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, idx[j]);
  }
  return out;
}

double lambda_min(const SymMat& s) { return sym_eig(s).values.front(); }

double lambda_min(const HermMat& h) { return herm_eig(h).values.front(); }

double pd_floor(const HermMat& p) { return 1e-12 * (1.0 + frob(p)); }

PdFunctions pd_functions(const HermMat& p) {
  const double floor = pd_floor(p);
  const HermEig eig = herm_eig(p);
  if (eig.values.front() <= floor) {
    throw NotPositiveDefinite(eig.values.front(), floor);
  }
  const int n = p.dim();
  auto assemble = [&](auto f) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cplx acc = 0.0;
        for (int k = 0; k < n; ++k) {
          acc += eig.vectors(i, k) * f(eig.values[k]) *
                 std::conj(eig.vectors(j, k));
        }
        m(i, j) = acc;
      }
    }
    return HermMat(m);
  };
  PdFunctions out{assemble([](double x) { return std::sqrt(x); }),
                  assemble([](double x) { return 1.0 / std::sqrt(x); }),
                  assemble([](double x) { return 1.0 / x; })};
  return out;
}

//==========================================================================
// svd3
//==========================================================================

namespace {

std::array<double, 3> col3(const RMat& m, int j) {
  return {m(0, j), m(1, j), m(2, j)};
}

std::array<double, 3> matvec3(const RMat& m, const std::array<double, 3>& x) {
  std::array<double, 3> y{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) y[i] += m(i, j) * x[j];
  return y;
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm3(const std::array<double, 3>& a) { return std::sqrt(dot3(a, a)); }

std::array<double, 3> cross3(const std::array<double, 3>& a,
                             const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

std::array<double, 3> normalized3(std::array<double, 3> a) {
  const double n = norm3(a);
  for (double& x : a) x /= n;
  return a;
}

}  // namespace

Svd3 svd3(const RMat& m) {
  if (m.rows() != 3 || m.cols() != 3) throw InvalidInput("svd3: need 3x3 input");

  const SymMat b = SymMat(transpose(m) * m);
  const SymEig eig = sym_eig(b);  // ascending

  // Descending singular values; eigenvectors of m^T m are right vectors.
  std::array<double, 3> sigma{};
  RMat v(3, 3);
  for (int j = 0; j < 3; ++j) {
    const int src = 2 - j;
    sigma[j] = std::sqrt(std::max(eig.values[src], 0.0));
    for (int i = 0; i < 3; ++i) v(i, j) = eig.vectors(i, src);
  }
  if (det3(v) < 0.0) {
    for (int i = 0; i < 3; ++i) v(i, 2) = -v(i, 2);
  }

  const double scale = 1.0 + frob(m);
  Svd3 out;
  out.v = v;
  out.u = RMat::identity(3);

  if (sigma[0] <= 1e-15 * scale) {
    out.s = {0.0, 0.0, 0.0};
    return out;  // m ~ 0: u = v-compatible identity
  }

  std::array<double, 3> u0 = normalized3(matvec3(m, col3(v, 0)));

  std::array<double, 3> mv1 = matvec3(m, col3(v, 1));
  std::array<double, 3> u1{};
  const double proj = dot3(u0, mv1);
  for (int i = 0; i < 3; ++i) u1[i] = mv1[i] - proj * u0[i];
  if (norm3(u1) > 1e-12 * scale) {
    u1 = normalized3(u1);
  } else {
    // Rank-one case: complete with the axis least aligned with u0.
    int k = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(u0[i]) < std::abs(u0[k])) k = i;
    std::array<double, 3> e{};
    e[k] = 1.0;
    const double p = dot3(e, u0);
    for (int i = 0; i < 3; ++i) u1[i] = e[i] - p * u0[i];
    u1 = normalized3(u1);
  }
  const std::array<double, 3> u2 = cross3(u0, u1);

  for (int i = 0; i < 3; ++i) {
    out.u(i, 0) = u0[i];
    out.u(i, 1) = u1[i];
    out.u(i, 2) = u2[i];
  }

  // Diagonal values from the Rayleigh products u_i^T m v_i: sqrt of the
  // m^T m eigenvalues loses half the digits on small singular values. The
  // ordering s0 >= s1 >= |s2| is then enforced exactly; the clamps only move
  // values by noise-level amounts.
  const double r0 = dot3(u0, matvec3(m, col3(v, 0)));
  const double r1 = dot3(u1, mv1);
  const double r2 = dot3(u2, matvec3(m, col3(v, 2)));
  out.s[0] = std::max(r0, 0.0);
  out.s[1] = std::clamp(r1, 0.0, out.s[0]);
  out.s[2] = std::clamp(r2, -out.s[1], out.s[1]);
  return out;
}

//==========================================================================
// Solver utilities
//==========================================================================

bool lu_solve(const RMat& a, std::span<const double> b, std::vector<double>& x) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) {
    throw InvalidInput("lu_solve: shape mismatch");
  }
  RMat lu = a;
  std::vector<double> rhs(b.begin(), b.end());
  const double scale = 1.0 + frob(a);

  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (std::abs(lu(piv, k)) <= 1e-13 * scale) return false;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      std::swap(rhs[k], rhs[piv]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = lu(i, k) / lu(k, k);
      lu(i, k) = 0.0;
      for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double acc = rhs[i];
    for (int j = i + 1; j < n; ++j) acc -= lu(i, j) * x[j];
    x[i] = acc / lu(i, i);
  }
  return true;
}

namespace {

// One-sided Jacobi (Hestenes): right-multiplies rotations until the columns
// of b are mutually orthogonal. Computes small singular values to full
// relative accuracy, unlike eigenvalues of a^T a whose sqrt has an
// sqrt(eps) noise floor.
struct HestenesSvd {
  std::vector<double> sigma;  // descending
  RMat v;                     // right singular vectors as columns, permuted
};

HestenesSvd hestenes_svd(const RMat& a) {
  const int rows = a.rows();
  const int cols = a.cols();
  RMat b = a;
  RMat v = RMat::identity(cols);
  const double scale = 1.0 + frob(a);

  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < cols; ++p) {
      for (int q = p + 1; q < cols; ++q) {
        double gpp = 0.0, gqq = 0.0, gpq = 0.0;
        for (int i = 0; i < rows; ++i) {
          gpp += b(i, p) * b(i, p);
          gqq += b(i, q) * b(i, q);
          gpq += b(i, p) * b(i, q);
        }
        if (std::abs(gpq) <= 1e-15 * std::sqrt(gpp * gqq) + 1e-30 * scale * scale) {
          continue;
        }
        rotated = true;
        const double zeta = (gpp - gqq) / (2.0 * gpq);
        const double t =
            (zeta >= 0.0 ? -1.0 : 1.0) / (std::abs(zeta) + std::hypot(zeta, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int i = 0; i < rows; ++i) {
          const double bp = b(i, p);
          const double bq = b(i, q);
          b(i, p) = c * bp - s * bq;
          b(i, q) = s * bp + c * bq;
        }
        for (int i = 0; i < cols; ++i) {
          const double vp = v(i, p);
          const double vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<int> idx(cols);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> norms(cols, 0.0);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) norms[j] += b(i, j) * b(i, j);
    norms[j] = std::sqrt(norms[j]);
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return norms[i] > norms[j]; });

  HestenesSvd out;
  out.sigma.resize(cols);
  out.v = RMat(cols, cols);
  for (int j = 0; j < cols; ++j) {
    out.sigma[j] = norms[idx[j]];
    for (int i = 0; i < cols; ++i) out.v(i, j) = v(i, idx[j]);
  }
  return out;
}

}  // namespace

std::vector<double> singular_values(const RMat& a) {
  return hestenes_svd(a).sigma;
}

std::vector<double> min_singular_vector(const RMat& a) {
  const HestenesSvd svd = hestenes_svd(a);
  std::vector<double> v(a.cols());
  for (int i = 0; i < a.cols(); ++i) v[i] = svd.v(i, a.cols() - 1);
  return v;
}

int numerical_rank(const RMat& a, double tol) {
  const auto s = singular_values(a);
  if (s.empty() || s[0] == 0.0) return 0;
  int r = 0;
  for (double x : s)
    if (x > tol * s[0]) ++r;
  return r;
}

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace posmap
