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


#include <random>

#include "doctest.h"
#include "hamsim/decoupling.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/linalg.hpp"
#include "nqudit_support.hpp"

using namespace hamsim;
using hamsim::testing::chain_graph;
using hamsim::testing::random_two_body;

namespace {

bool inside(const PauliString& s, QuditPair p) {
  for (std::size_t q = 0; q < s.size(); ++q)
    if (!s[q].is_identity() && static_cast<int>(q) != p.first && static_cast<int>(q) != p.second) return false;
  return true;
}

/// Max off-P coefficient and max deviation of P-internal coefficients from scale * original.
std::pair<double, double> decoupling_defects(const SymbolicHamiltonian& h, const DecoupledHamiltonian& d,
                                             QuditPair p) {
  double off = 0.0, keep = 0.0;
  for (const auto& [s, c] : d.hamiltonian.terms())
    if (!is_identity(s) && !inside(s, p)) off = std::max(off, std::abs(c));
  for (const auto& [s, c] : h.terms())
    if (!is_identity(s) && inside(s, p)) keep = std::max(keep, std::abs(d.hamiltonian.coefficient(s) - d.scale * c));
  return {off, keep};
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("interaction_graph examples") {
  SymbolicHamiltonian h(2, 3);
  h.add(PauliString{{0, 1}, {0, 1}, {0, 0}}, 1.0);
  h.add(PauliString{{0, 0}, {1, 0}, {1, 0}}, 1.0);
  const InteractionGraph g = interaction_graph(h);
  CHECK(g.edges() == std::set<QuditPair>{{0, 1}, {1, 2}});
  CHECK(g.connected());
  CHECK(g.neighbors(1) == std::vector{0, 2});

  SymbolicHamiltonian local(2, 3);
  local.add(PauliString{{1, 0}, {0, 0}, {0, 0}}, 1.0);
  const InteractionGraph gl = interaction_graph(local);
  CHECK(gl.edges().empty());
  CHECK_FALSE(gl.connected());

  SymbolicHamiltonian three(2, 3);
  three.add(PauliString{{1, 0}, {1, 0}, {1, 0}}, 1.0);
  CHECK_THROWS_AS(interaction_graph(three), InvalidArgument);

  const InteractionGraph path = chain_graph(5);
  CHECK(path.edges().size() == 4);
  CHECK(path.connected());
  InteractionGraph bad(3);
  CHECK_THROWS_AS(bad.add_edge(1, 1), InvalidArgument);
  CHECK_THROWS_AS(bad.add_edge(0, 3), InvalidArgument);
}

TEST_CASE("lattice graphs and partitions") {
  const InteractionGraph sq = lattice_graph({4, 4});
  CHECK(sq.edges().size() == 24);
  CHECK(sq.has_edge(0, 1));
  CHECK(sq.has_edge(0, 4));
  CHECK_FALSE(sq.has_edge(3, 4));
  CHECK(lattice_graph({4, 4}, true).edges().size() == 32);
  CHECK_THROWS_AS(lattice_graph({3}, true), InvalidArgument);

  const Partition line = lattice_partition(1, {6});
  REQUIRE(line.blocks.size() == 2);
  CHECK(line.blocks[0] == std::vector{0, 2, 4});
  CHECK(line.blocks[1] == std::vector{1, 3, 5});

  const Partition p2 = lattice_partition(2, {4, 4});
  CHECK(p2.blocks.size() == 4);
  for (const auto& b : p2.blocks) {
    CHECK(b.size() == 4);
    for (int v : b) CHECK((v / 4) % 2 * 2 + (v % 4) % 2 == (b[0] / 4) % 2 * 2 + (b[0] % 4) % 2);
  }

  const InteractionGraph cube = lattice_graph({4, 4, 4});
  const Partition p3 = lattice_partition(3, {4, 4, 4});
  CHECK(p3.blocks.size() == 8);
  for (const auto& b : p3.blocks)
    for (int u : b)
      for (int v : b) CHECK_FALSE(cube.has_edge(u, v));
  CHECK_THROWS_AS(lattice_partition(2, {4}), InvalidArgument);
}

TEST_CASE("generic plan rounds and counts") {
  const DecouplingPlan p3 = generic_recursive_plan(3, {0, 1});
  CHECK(p3.depth() == 1);
  CHECK(p3.rounds[0] == std::vector{2});
  CHECK(p3.flattened_count(5) == 25);

  const DecouplingPlan p4 = generic_recursive_plan(4, {0, 1});
  REQUIRE(p4.depth() == 2);
  CHECK(p4.rounds[0] == std::vector{2, 3});
  CHECK(p4.rounds[1].size() == 1);
  CHECK(p4.flattened_count(2) == 16);
  CHECK(leaf_count(plan_expr(p4, 2)) == 16);

  const DecouplingPlan p6 = generic_recursive_plan(6, {2, 3});
  CHECK(p6.depth() == 3);
  CHECK(p6.flattened_count(3) == 729);
  CHECK(leaf_count(plan_expr(p6, 3)) == 729);

  for (int N = 3; N <= 20; ++N) {
    int expected = 1;
    while ((1 << (expected - 1)) < N - 2) ++expected;
    CHECK(static_cast<int>(generic_recursive_plan(N, {0, N - 1}).depth()) == expected);
  }
  CHECK_THROWS_AS(generic_recursive_plan(2, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(generic_recursive_plan(4, {1, 1}), InvalidArgument);
}

TEST_CASE("partition plans") {
  const InteractionGraph path = chain_graph(6);
  Partition singles;
  for (int v = 0; v < 6; ++v) singles.blocks.push_back({v});
  const DecouplingPlan ps = partition_plan(path, singles, {2, 3});
  CHECK(ps.depth() == 4);
  CHECK(ps.flattened_count(2) == ipow(2, 2 * 4));

  const InteractionGraph sq = lattice_graph({4, 4});
  const DecouplingPlan pl = partition_plan(sq, lattice_partition(2, {4, 4}), {5, 6});
  CHECK(pl.depth() == 4);
  CHECK(pl.flattened_count(3) == ipow(3, 8));

  Partition coupled{{{0, 1, 2}, {3, 4, 5}}};
  CHECK_THROWS_AS(partition_plan(path, coupled, {2, 3}), PreconditionError);
  Partition missing{{{0}, {4}}};
  CHECK_THROWS_AS(partition_plan(path, missing, {2, 3}), InvalidArgument);
}

TEST_CASE("chain plan") {
  const DecouplingPlan c = chain_plan(chain_graph(8), {3, 4});
  REQUIRE(c.depth() == 3);
  CHECK(c.rounds[0] == std::vector{2, 5});
  CHECK(c.rounds[1] == std::vector{0, 1, 2, 5, 6, 7});
  CHECK(chain_plan(chain_graph(20), {0, 1}).depth() == 3);
  CHECK_THROWS_AS(chain_plan(lattice_graph({3, 3}), {0, 1}), PreconditionError);
  CHECK_THROWS_AS(chain_plan(chain_graph(6), {1, 3}), PreconditionError);
}

TEST_CASE("apply_plan annihilates everything outside P") {
  std::mt19937_64 rng(1);
  struct Case {
    int D, N;
    std::string kind;
  };
  for (const Case& cs : {Case{2, 4, "generic"}, Case{2, 5, "generic"}, Case{2, 6, "generic"}, Case{3, 4, "generic"},
                         Case{2, 8, "chain"}, Case{3, 5, "partition"}}) {
    const InteractionGraph g = chain_graph(cs.N);
    const SymbolicHamiltonian h = random_two_body(cs.D, g, rng);
    const QuditPair p{1, 2};
    DecouplingPlan plan;
    if (cs.kind == "generic") plan = generic_recursive_plan(cs.N, p);
    else if (cs.kind == "chain") plan = chain_plan(g, p);
    else plan = partition_plan(g, lattice_partition(1, {cs.N}), p);
    const DecoupledHamiltonian d = apply_plan(h, plan);
    CHECK(d.scale > 0.0);
    const auto [off, keep] = decoupling_defects(h, d, p);
    CHECK(off < 1e-12);
    CHECK(keep < 1e-12);
    // The expression realizes the same effective Hamiltonian.
    const SymbolicHamiltonian eff = effective_hamiltonian(plan_expr(plan, cs.D), h);
    CHECK(max_coefficient_diff(eff, d.hamiltonian) < 1e-12);
  }
}

TEST_CASE("decoupled evolution factorizes") {
  std::mt19937_64 rng(2);
  const int D = 2, N = 4;
  const SymbolicHamiltonian h = random_two_body(D, chain_graph(N), rng);
  const QuditPair p{0, 1};
  const DecoupledHamiltonian d = apply_plan(h, generic_recursive_plan(N, p));
  const DenseOperator u = expm_hermitian(reconstruct(d.hamiltonian.traceless_part()), 0.8);
  const SymbolicHamiltonian hp = restrict_to_pair(d.hamiltonian.traceless_part(), p);
  const DenseOperator up = expm_hermitian(reconstruct(hp), 0.8);
  CHECK(max_abs_diff(u, kron(up, DenseOperator::identity(4))) < 1e-9);
}

TEST_CASE("restrict_to_pair orders qudits by the pair") {
  SymbolicHamiltonian h(3, 3);
  h.add(PauliString{{1, 0}, {0, 0}, {0, 2}}, 0.5);
  h.add(PauliString{{0, 1}, {1, 0}, {0, 0}}, 0.25);
  const SymbolicHamiltonian r = restrict_to_pair(h, {2, 0});
  CHECK(r.N() == 2);
  CHECK(r.size() == 1);
  CHECK(r.coefficient(PauliString{{0, 2}, {1, 0}}) == cplx(0.5));
}

TEST_CASE("route_swap examples") {
  const InteractionGraph path = chain_graph(4);
  CHECK(route_swap(path, 1, 2).empty());
  CHECK(route_swap(path, 0, 3) == std::vector<QuditPair>{{0, 1}, {1, 2}});
  CHECK(shortest_path(path, 0, 3) == std::vector{0, 1, 2, 3});

  const InteractionGraph sq = lattice_graph({4, 4});
  CHECK(shortest_path(sq, 0, 15).size() == 7);
  CHECK(route_swap(sq, 0, 15).size() == 5);

  InteractionGraph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_THROWS_AS(route_swap(split, 0, 3), NotEntanglingError);
}
