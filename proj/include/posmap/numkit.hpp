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

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "posmap/errors.hpp"

namespace posmap {

using cplx = std::complex<double>;

// Real kernels handle dimensions up to 8, complex kernels up to 4. The
// library never needs more: qubit maps live on 4x4 transfer matrices and
// the Lorentz-cone machinery is exercised for m <= 8.
inline constexpr int kMaxDim = 8;
inline constexpr int kMaxDimC = 4;

//==========================================================================
// Dense fixed-capacity matrices
//==========================================================================

// Dense real matrix, row-major, dims <= kMaxDim. Value semantics throughout.
class RMat {
 public:
  RMat() : rows_(0), cols_(0), a_{} {}
  RMat(int rows, int cols);
  RMat(int rows, int cols, std::initializer_list<double> entries);
  static RMat identity(int n);
  static RMat diagonal(std::span<const double> d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return a_[i * cols_ + j]; }
  double operator()(int i, int j) const { return a_[i * cols_ + j]; }

  RMat& operator+=(const RMat& o);
  RMat& operator-=(const RMat& o);
  RMat& operator*=(double s);

 private:
  int rows_, cols_;
  std::array<double, kMaxDim * kMaxDim> a_;
};

RMat operator+(RMat a, const RMat& b);
RMat operator-(RMat a, const RMat& b);
RMat operator-(const RMat& a);
RMat operator*(double s, RMat a);
RMat operator*(const RMat& a, const RMat& b);
RMat transpose(const RMat& a);
double frob(const RMat& a);
double det3(const RMat& a);
std::vector<double> mat_vec(const RMat& a, std::span<const double> x);
RMat outer(std::span<const double> u, std::span<const double> v);
bool approx_equal(const RMat& a, const RMat& b, double tol);

// Dense complex matrix, row-major, dims <= kMaxDimC.
class CMat {
 public:
  CMat() : rows_(0), cols_(0), a_{} {}
  CMat(int rows, int cols);
  CMat(int rows, int cols, std::initializer_list<cplx> entries);
  static CMat identity(int n);
  static CMat diagonal(std::span<const cplx> d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx& operator()(int i, int j) { return a_[i * cols_ + j]; }
  cplx operator()(int i, int j) const { return a_[i * cols_ + j]; }

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cplx s);

 private:
  int rows_, cols_;
  std::array<cplx, kMaxDimC * kMaxDimC> a_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(cplx s, CMat a);
CMat operator*(const CMat& a, const CMat& b);
CMat dagger(const CMat& a);
CMat ctranspose_entrywise(const CMat& a);  // plain transpose, no conjugation
CMat conj_entries(const CMat& a);
cplx trace(const CMat& a);
double frob(const CMat& a);
bool approx_equal(const CMat& a, const CMat& b, double tol);

//==========================================================================
// Constrained matrix types
//==========================================================================

// Real symmetric matrix; symmetrized on construction so entries(i,j) and
// entries(j,i) are bitwise equal.
class SymMat {
 public:
  explicit SymMat(const RMat& m);
  static SymMat zero(int dim);
  static SymMat diagonal(std::span<const double> d);

  int dim() const { return m_.rows(); }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double v);
  const RMat& mat() const { return m_; }

 private:
  SymMat() = default;
  RMat m_;
};

// Complex Hermitian matrix; Hermitized on construction.
class HermMat {
 public:
  HermMat() = default;
  explicit HermMat(const CMat& m);
  static HermMat zero(int dim);
  static HermMat identity(int n);
  static HermMat diagonal(std::span<const double> d);

  int dim() const { return m_.rows(); }
  cplx operator()(int i, int j) const { return m_(i, j); }
  const CMat& mat() const { return m_; }
  double trace_real() const;

 private:
  CMat m_;
};

HermMat operator+(const HermMat& a, const HermMat& b);
HermMat operator-(const HermMat& a, const HermMat& b);
HermMat operator*(double s, const HermMat& a);
double frob(const HermMat& a);

// Qubit-sized (2x2) Hermitian matrix. Dimension checked where consumed.
using Herm2 = HermMat;

//==========================================================================
// Spectral kernels
//==========================================================================

// Eigenvalues ascending; vectors holds orthonormal eigenvectors as columns.
struct SymEig {
  std::vector<double> values;
  RMat vectors;
};

struct HermEig {
  std::vector<double> values;
  CMat vectors;
};

// Cyclic Jacobi. Deterministic for identical input; always converges at
// these sizes (iteration cap raises InternalDefect).
SymEig sym_eig(const SymMat& s);
HermEig herm_eig(const HermMat& h);

double lambda_min(const SymMat& s);
double lambda_min(const HermMat& h);

// Relative positive-definiteness floor: 1e-12 * (1 + ||P||_F).
double pd_floor(const HermMat& p);

struct PdFunctions {
  HermMat sqrt;
  HermMat inv_sqrt;
  HermMat inv;
};

// Spectral functions of a positive definite matrix.
// Throws NotPositiveDefinite when lambda_min <= pd_floor(p).
PdFunctions pd_functions(const HermMat& p);

// Proper SVD of a 3x3 real matrix: m = u * diag(s) * v^T with
// u, v in SO(3); s[0] >= s[1] >= |s[2]|, s[2] carries the sign of det(m).
struct Svd3 {
  RMat u;
  std::array<double, 3> s;
  RMat v;
};

Svd3 svd3(const RMat& m);

//==========================================================================
// Small solver utilities
//==========================================================================

// LU solve with partial pivoting. Returns false when the pivot collapses
// (matrix numerically singular); x is untouched in that case.
bool lu_solve(const RMat& a, std::span<const double> b, std::vector<double>& x);

// Singular values of a general square matrix, descending (via eig of a^T a).
std::vector<double> singular_values(const RMat& a);

// Right-singular vector of the smallest singular value.
std::vector<double> min_singular_vector(const RMat& a);

// Numerical rank with relative threshold tol * sigma_max.
int numerical_rank(const RMat& a, double tol = 1e-9);

double norm2(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);

}  // namespace posmap
