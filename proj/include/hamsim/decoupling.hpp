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

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hamsim/pauli.hpp"
#include "hamsim/sim_ir.hpp"

namespace hamsim {

using QuditPair = std::pair<int, int>;

/// Vertices are qudits; an edge joins two qudits that share a coupling term.
class InteractionGraph {
 public:
  InteractionGraph() = default;
  explicit InteractionGraph(int n) : n_(n) {}
  /// Throws InvalidArgument on a self-loop or an out-of-range vertex.
  void add_edge(int u, int v);
  int size() const { return n_; }
  const std::set<QuditPair>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  /// Sorted ascending.
  std::vector<int> neighbors(int v) const;
  bool connected() const;

 private:
  int n_ = 0;
  std::set<QuditPair> edges_;  // stored with first < second
};

/// Edges from every word with two non-identity factors. Throws
/// InvalidArgument on a word acting on three or more qudits.
InteractionGraph interaction_graph(const SymbolicHamiltonian& h);

/// Nearest-neighbour graph of a lattice with row-major numbering (the last
/// coordinate varies fastest). Periodic boundaries need even extents.
InteractionGraph lattice_graph(const std::vector<int>& dims, bool periodic = false);

struct Partition {
  std::vector<std::vector<int>> blocks;
};

/// 2^r parity classes of a lattice with the given extents. Throws
/// InvalidArgument for periodic boundaries with an odd extent.
Partition lattice_partition(int r, const std::vector<int>& dims, bool periodic = false);

/// Sequential ditwise twirls: round i averages conjugation by U on every
/// qudit of rounds[i], over all D^2 labels U.
struct DecouplingPlan {
  int N = 0;
  QuditPair principal{0, 1};
  std::vector<std::vector<int>> rounds;
  std::string strategy;

  std::size_t depth() const { return rounds.size(); }
  /// D^{2 depth}
  std::uint64_t flattened_count(int D) const;
};

/// Round 0 twirls S = all qudits outside P; each later round splits every
/// block (larger half first) and twirls the union of the first halves.
/// Throws InvalidArgument for N < 3 or a bad pair.
DecouplingPlan generic_recursive_plan(int N, QuditPair p);

/// One round per block of `partition` after removing P. Throws
/// PreconditionError naming an edge internal to a block, InvalidArgument if
/// the blocks do not cover the qudits outside P exactly once.
DecouplingPlan partition_plan(const InteractionGraph& g, const Partition& partition, QuditPair p);

/// Three rounds for a nearest-neighbour chain: the neighbours of P, all of S,
/// then every other site of S. Throws PreconditionError if some edge is not
/// of the form (i, i+1) or P is not such an edge.
DecouplingPlan chain_plan(const InteractionGraph& g, QuditPair p);

struct DecoupledHamiltonian {
  SymbolicHamiltonian hamiltonian;
  /// P-internal coefficients are multiplied by this.
  double scale = 1.0;
};

/// Nested symbolic twirl of h by the plan's rounds.
DecoupledHamiltonian apply_plan(const SymbolicHamiltonian& h, const DecouplingPlan& plan);

/// Expression realizing the plan: nested averages of Pauli conjugations of the
/// primitive.
SimExpr plan_expr(const DecouplingPlan& plan, int D);

/// Terms of h supported inside P, as a two-qudit Hamiltonian with P.first as
/// qudit 0.
SymbolicHamiltonian restrict_to_pair(const SymbolicHamiltonian& h, QuditPair p);

/// Adjacent pairs (v0,v1), ..., (v_{k-2},v_{k-1}) along a shortest path
/// s = v0, ..., v_k = t (breadth-first, smaller neighbours first). Empty when
/// s and t are adjacent. Throws NotEntanglingError if t is unreachable.
std::vector<QuditPair> route_swap(const InteractionGraph& g, int s, int t);

/// Full shortest path s, ..., t.
std::vector<int> shortest_path(const InteractionGraph& g, int s, int t);

}  // namespace hamsim
