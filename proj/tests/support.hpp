// Copyright 2026 The hamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "hamsim/dense.hpp"
#include "hamsim/linalg.hpp"
#include "hamsim/pauli.hpp"

namespace hamsim::testing {

inline DenseOperator random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  DenseOperator m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      const cplx v(nd(rng), i == j ? 0.0 : nd(rng));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  return m;
}

inline DenseOperator random_traceless_hermitian(std::size_t dim, std::mt19937_64& rng) {
  DenseOperator m = random_hermitian(dim, rng);
  const cplx tr = m.trace() / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) -= tr;
  return m;
}

inline DenseOperator random_matrix(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  DenseOperator m(dim);
  for (cplx& v : m.data()) v = cplx(nd(rng), nd(rng));
  return m;
}

inline DenseOperator random_unitary(std::size_t dim, std::mt19937_64& rng) {
  return expm_hermitian(random_hermitian(dim, rng), 1.0);
}

/// Random Hermitian Hamiltonian on N qudits with operator norm `scale`. A
/// dense Gaussian has a genuine coupling with probability one.
inline SymbolicHamiltonian random_hamiltonian(int D, int N, std::mt19937_64& rng, double scale = 1.0) {
  std::size_t dim = 1;
  for (int i = 0; i < N; ++i) dim *= static_cast<std::size_t>(D);
  DenseOperator m = random_hermitian(dim, rng);
  m *= cplx(scale / op_norm(m));
  SymbolicHamiltonian h = decompose_operator(m, D, N);
  h.prune();
  return h;
}

inline double omega_angle(int D) { return 2.0 * std::numbers::pi / D; }

inline cplx omega(double power, int D) { return std::polar(1.0, omega_angle(D) * power); }

/// X^j Z^k built from explicit shift and clock matrices.
inline DenseOperator shift_clock(int j, int k, int D) {
  DenseOperator x(static_cast<std::size_t>(D)), z(static_cast<std::size_t>(D));
  for (int r = 0; r < D; ++r) {
    x(static_cast<std::size_t>((r + 1) % D), static_cast<std::size_t>(r)) = 1.0;
    z(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) = omega(r, D);
  }
  DenseOperator out = DenseOperator::identity(static_cast<std::size_t>(D));
  for (int i = 0; i < j; ++i) out = out * x;
  for (int i = 0; i < k; ++i) out = out * z;
  return out;
}

inline double max_norm(const DenseOperator& m) { return m.max_abs(); }

}  // namespace hamsim::testing
