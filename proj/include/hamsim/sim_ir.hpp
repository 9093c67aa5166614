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

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "hamsim/dense.hpp"
#include "hamsim/local_gate.hpp"
#include "hamsim/pauli.hpp"
#include "hamsim/schedule.hpp"

namespace hamsim {

class SimNode;
/// Immutable expression DAG; subexpressions are shared, never copied.
using SimExpr = std::shared_ptr<const SimNode>;

class SimNode {
 public:
  enum class Kind {
    Primitive,  // evolve under the resource Hamiltonian
    Conj,       // layer * body * layer^dagger
    Sum,        // sum_i w_i body_i
    Local,      // a single-qudit Hermitian J realized by local unitaries
  };

  Kind kind() const { return kind_; }
  int D() const { return D_; }
  int N() const { return N_; }
  const GateLayer& layer() const { return layer_; }
  const SimExpr& body() const { return body_; }
  const std::vector<std::pair<double, SimExpr>>& terms() const { return terms_; }
  int qudit() const { return qudit_; }
  const DenseOperator& local() const { return local_; }

 private:
  friend SimExpr primitive(int D, int N);
  friend SimExpr conj(const GateLayer& layer, SimExpr body);
  friend SimExpr weighted_sum(std::vector<std::pair<double, SimExpr>> terms);
  friend SimExpr zero_expr(int D, int N);
  friend SimExpr local_term(int D, int N, int qudit, DenseOperator j);

  Kind kind_ = Kind::Primitive;
  int D_ = 2;
  int N_ = 2;
  GateLayer layer_;
  SimExpr body_;
  std::vector<std::pair<double, SimExpr>> terms_;
  int qudit_ = 0;
  DenseOperator local_;
};

SimExpr primitive(int D, int N);
/// Nested conjugations fold into one layer; an identity layer returns `body`.
SimExpr conj(const GateLayer& layer, SimExpr body);
/// Conjugation by the Pauli string `w` (as a layer of W(j,k) gates).
SimExpr conj_pauli(const PauliString& w, SimExpr body);
/// Exactly-zero weights are dropped and repeated children merged. Throws
/// InvalidArgument on an empty list or mismatched shapes.
SimExpr weighted_sum(std::vector<std::pair<double, SimExpr>> terms);
SimExpr scaled(double w, SimExpr e);
/// The empty sum.
SimExpr zero_expr(int D, int N);
/// Throws NotHermitianError unless j is D x D Hermitian.
SimExpr local_term(int D, int N, int qudit, DenseOperator j);

/// Sum over the D^{2N} - 1 non-identity Pauli conjugations of e with weight 1.
/// For effective Hamiltonian J the result is D^N tr(J) I - J.
SimExpr negate(SimExpr e);

/// Effective Hamiltonian of e when the primitive evolves under `h`.
SymbolicHamiltonian effective_hamiltonian(const SimExpr& e, const SymbolicHamiltonian& h);

/// U H U^dagger for a layer of local gates (exact label action when all gates
/// are Clifford, dense otherwise).
SymbolicHamiltonian conjugate_by_layer(const SymbolicHamiltonian& h, const GateLayer& layer);

/// Resource evolution time per unit of simulated time.
double cost(const SimExpr& e);
/// Number of primitive evolutions in one fully expanded pass.
std::uint64_t leaf_count(const SimExpr& e);
/// Number of distinct nodes in the DAG.
std::size_t node_count(const SimExpr& e);

struct TrotterConfig {
  std::uint64_t n = 1;
  double t = 1.0;
};

/// First-order product formula: the schedule runs one pass of e at scale t/n,
/// n times. Conjugations emit U^dagger layer, body, U layer in execution
/// order; sums emit their terms in declaration order. Throws
/// PreconditionError on a negative weight.
PulseSchedule lower(const SimExpr& e, const TrotterConfig& cfg);

}  // namespace hamsim
