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

#include <vector>

#include "hamsim/dense.hpp"

namespace hamsim {

struct EigenSystem {
  std::vector<double> values;  // ascending
  DenseOperator vectors;       // column i pairs with values[i]
};

/// Cyclic complex Jacobi. Eigenvectors are phase-fixed so the first entry
/// with magnitude above 1e-8 is real and positive.
EigenSystem hermitian_eig(const DenseOperator& m, double hermitian_tol = 1e-9);

/// exp(-i H t) for Hermitian H.
DenseOperator expm_hermitian(const DenseOperator& h, double t);

/// exp(-i t diag(values)) in the basis `vectors`.
DenseOperator expm_from_eig(const EigenSystem& es, double t);

/// Largest singular value.
double op_norm(const DenseOperator& m);

/// ||U - e^{i phi} V|| in operator norm, with phi chosen so that
/// e^{i phi} tr(U^dagger V) is real and non-negative (phi = 0 when the trace
/// vanishes).
double unitary_distance(const DenseOperator& u, const DenseOperator& v);

/// Solves A x = b by LU with partial pivoting. Throws PreconditionError when A
/// is numerically singular.
std::vector<cplx> solve_linear(const DenseOperator& a, std::vector<cplx> b);

}  // namespace hamsim
