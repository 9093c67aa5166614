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

#include <span>
#include <vector>

#include "hamsim/dense.hpp"

namespace hamsim {

/// Square real matrix, row-major.
struct RealMatrix {
  std::size_t n = 0;
  std::vector<double> a;

  explicit RealMatrix(std::size_t n_ = 0) : n(n_), a(n_ * n_, 0.0) {}
  static RealMatrix identity(std::size_t n);
  double& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
  std::vector<double> apply(std::span<const double> x) const;
  friend RealMatrix operator*(const RealMatrix& x, const RealMatrix& y);
};

/// Copy sorted into non-increasing order.
std::vector<double> sorted_descending(std::span<const double> x);

/// True iff x is majorized by y: every partial sum of x sorted descending is
/// at most the matching partial sum of y, and the totals agree (within tol).
bool majorizes(std::span<const double> x, std::span<const double> y, double tol = 1e-10);

/// Doubly stochastic S with sort(x) = S sort(y), as a product of at most n-1
/// T-transforms. Throws PreconditionError unless x is majorized by y.
RealMatrix doubly_stochastic_map(std::span<const double> x, std::span<const double> y);

/// Row r of the permutation matrix has its 1 in column perm[r].
using Permutation = std::vector<std::size_t>;

struct WeightedPermutation {
  double weight;
  Permutation perm;
};

/// Greedy Birkhoff-von Neumann decomposition: repeatedly strips the
/// permutation with the largest achievable minimum entry (lexicographically
/// first among ties). Throws InvalidArgument unless S is doubly stochastic
/// within 1e-10.
std::vector<WeightedPermutation> birkhoff_decompose(const RealMatrix& s);

RealMatrix permutation_matrix(const Permutation& p);

struct UhlmannDecomposition {
  std::vector<double> weights;
  std::vector<DenseOperator> unitaries;
  double scale = 1.0;
  std::size_t size() const { return weights.size(); }
};

/// Eigenvalues in non-increasing order with the matching eigenvector columns.
struct DescendingEig {
  std::vector<double> values;
  DenseOperator vectors;
};
DescendingEig descending_eig(const DenseOperator& h);

/// A = sum_n p_n U_n B U_n^dagger for Hermitian A majorized by B. The
/// unitaries are V P_n W^dagger with V, W the descending eigenbases of A and
/// B. Throws PreconditionError if the spectra are not in majorization order.
UhlmannDecomposition uhlmann_decompose(const DenseOperator& a, const DenseOperator& b);

/// A = sum_n c_n U_n B U_n^dagger with c_n >= 0 for traceless Hermitian A
/// and nonzero traceless Hermitian B. `scale` holds the smallest c with A
/// majorized by cB; A = 0 gives the empty decomposition.
UhlmannDecomposition traceless_decompose(const DenseOperator& a, const DenseOperator& b);

/// || A - sum_n w_n U_n B U_n^dagger ||_op
double uhlmann_residual(const UhlmannDecomposition& d, const DenseOperator& a, const DenseOperator& b);

}  // namespace hamsim
