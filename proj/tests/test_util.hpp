// Shared helpers for the unit suites.
#pragma once

#include <array>

#include "posmap/numkit.hpp"
#include "posmap/rng.hpp"

namespace posmap::testutil {

inline RMat random_rmat(Prng& rng, int rows, int cols) {
  RMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.gaussian();
  return m;
}

inline SymMat random_sym(Prng& rng, int dim) {
  return SymMat(random_rmat(rng, dim, dim));
}

inline CMat random_cmat(Prng& rng, int rows, int cols) {
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.cgaussian();
  return m;
}

inline HermMat random_herm(Prng& rng, int dim) {
  return HermMat(random_cmat(rng, dim, dim));
}

// V Lambda V^T for a symmetric eigensystem.
inline RMat sym_reconstruct(const SymEig& eig) {
  const int n = static_cast<int>(eig.values.size());
  RMat lambda(n, n);
  for (int i = 0; i < n; ++i) lambda(i, i) = eig.values[i];
  return eig.vectors * lambda * transpose(eig.vectors);
}

inline CMat herm_reconstruct(const HermEig& eig) {
  const int n = static_cast<int>(eig.values.size());
  CMat lambda(n, n);
  for (int i = 0; i < n; ++i) lambda(i, i) = eig.values[i];
  return eig.vectors * lambda * dagger(eig.vectors);
}

}  // namespace posmap::testutil
