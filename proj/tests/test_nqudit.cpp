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
#include "hamsim/errors.hpp"
#include "hamsim/nqudit.hpp"
#include "hamsim/verify.hpp"
#include "nqudit_support.hpp"

using namespace hamsim;
using hamsim::testing::chain_graph;
using hamsim::testing::random_two_body;

namespace {

SymbolicHamiltonian zz_on(int D, int N, int u, int v) {
  SymbolicHamiltonian k(D, N);
  PauliString s = identity_string(N), t = identity_string(N);
  s[static_cast<std::size_t>(u)] = {0, 1};
  s[static_cast<std::size_t>(v)] = {0, 1};
  t[static_cast<std::size_t>(u)] = {0, D - 1};
  t[static_cast<std::size_t>(v)] = {0, D - 1};
  k.add(s, 0.5);
  k.add(t, 0.5);
  return k;
}

}  // namespace

TEST_CASE("lift_expr relabels qudits") {
  std::mt19937_64 rng(1);
  const SymbolicHamiltonian h2 = hamsim::testing::random_hamiltonian(2, 2, rng);
  const GateLayer l{{CliffordGate::fourier(2), CliffordGate::phase(2)}};
  const SimExpr e2 = weighted_sum({{0.4, conj(l, primitive(2, 2))}, {0.6, primitive(2, 2)}});
  const SimExpr lifted = lift_expr(e2, 3, {2, 0}, primitive(2, 3));
  SymbolicHamiltonian h3(2, 3);
  hamsim::testing::add_on_pair(h3, h2, 2, 0);
  const SymbolicHamiltonian want = restrict_to_pair(effective_hamiltonian(lifted, h3), {2, 0});
  CHECK(max_coefficient_diff(want, effective_hamiltonian(e2, h2)) < 1e-12);
}

TEST_CASE("sequence_schedules shares repeated parts") {
  PulseSchedule a;
  a.D = 2;
  a.N = 3;
  a.main.push_back(ScheduleOp::make_evolve(0.5));
  PulseSchedule b = a;
  b.main.push_back(ScheduleOp::make_gate(1, CliffordGate::fourier(2)));
  const PulseSchedule s = sequence_schedules({&a, &b, &a}, b);
  CHECK(s.blocks.size() == 2);
  CHECK(s.main.size() == 3);
  CHECK(s.wall_clock() == doctest::Approx(1.5));
  s.validate();
}

TEST_CASE("adjacent target compiles on its own pair") {
  std::mt19937_64 rng(2);
  const SymbolicHamiltonian h = random_two_body(2, chain_graph(3), rng);
  const SymbolicHamiltonian k = zz_on(2, 3, 1, 2);
  const NQuditResult r = compile_nqudit(h, k, 1.0, 16);
  CHECK(r.target_pair == QuditPair{1, 2});
  CHECK(r.host_pair == QuditPair{1, 2});
  CHECK(r.route.empty());
  CHECK(r.swaps.empty());
  const SymbolicHamiltonian eff = effective_hamiltonian(r.body, h).traceless_part();
  CHECK(max_coefficient_diff(eff, k) < 1e-9);
  CHECK(r.schedule.meta.at("host_pair") == "1,2");
  CHECK_FALSE(r.summary().empty());
}

TEST_CASE("distant target is routed through SWAPs") {
  std::mt19937_64 rng(3);
  const SymbolicHamiltonian h = random_two_body(2, chain_graph(3), rng);
  const SymbolicHamiltonian k = zz_on(2, 3, 0, 2);
  NQuditOptions opt;
  opt.swap_slices = 128;
  const NQuditResult r = compile_nqudit(h, k, 1.0, 128, opt);
  CHECK(r.target_pair == QuditPair{0, 2});
  CHECK(r.route == std::vector<QuditPair>{{0, 1}});
  CHECK(r.host_pair == QuditPair{1, 2});
  CHECK(r.swaps.size() == 1);
  CHECK(r.schedule.meta.at("swaps") == "2");
  const FidelityReport rep = verify_schedule(r.schedule, h, k, 1.0, 5e-2);
  CHECK(rep.passed());
}

TEST_CASE("strategies and errors") {
  std::mt19937_64 rng(4);
  const InteractionGraph g = chain_graph(4);
  NQuditOptions chain;
  chain.strategy = NQuditOptions::Strategy::Chain;
  CHECK(make_plan(g, {1, 2}, chain, true).strategy == "chain");
  NQuditOptions lat;
  lat.strategy = NQuditOptions::Strategy::Lattice;
  lat.lattice_dims = {4};
  CHECK(make_plan(g, {1, 2}, lat, true).strategy == "lattice");
  lat.lattice_dims = {5};
  CHECK_THROWS_AS(make_plan(g, {1, 2}, lat, true), InvalidArgument);
  NQuditOptions part;
  part.strategy = NQuditOptions::Strategy::Partition;
  part.partition.blocks = {{0, 3}};
  CHECK(make_plan(g, {1, 2}, part, true).depth() == 1);
  CHECK(make_plan(g, {0, 1}, part, false).strategy == "generic");
  CHECK(strategy_name(NQuditOptions::Strategy::Chain) == "chain");

  SymbolicHamiltonian split(2, 4);
  hamsim::testing::add_on_pair(split, hamsim::testing::random_hamiltonian(2, 2, rng), 0, 1);
  hamsim::testing::add_on_pair(split, hamsim::testing::random_hamiltonian(2, 2, rng), 2, 3);
  CHECK_THROWS_AS(compile_nqudit(split, zz_on(2, 4, 0, 1), 1.0, 1), NotEntanglingError);

  const SymbolicHamiltonian h = random_two_body(2, g, rng);
  SymbolicHamiltonian three(2, 4);
  three.add(PauliString{{0, 1}, {0, 1}, {0, 1}, {0, 0}}, 1.0);
  CHECK_THROWS_AS(compile_nqudit(h, three, 1.0, 1), InvalidArgument);
  NQuditOptions principal;
  principal.principal = QuditPair{2, 3};
  CHECK_THROWS_AS(compile_nqudit(h, zz_on(2, 4, 0, 1), 1.0, 1, principal), InvalidArgument);
}
