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
#include "hamsim/linalg.hpp"
#include "hamsim/sim_ir.hpp"
#include "hamsim/verify.hpp"
#include "support.hpp"

using namespace hamsim;

namespace {

DenseOperator layer_matrix(const GateLayer& layer) {
  DenseOperator m = layer.gates[0].matrix();
  for (std::size_t q = 1; q < layer.gates.size(); ++q) m = kron(m, layer.gates[q].matrix());
  return m;
}

/// Dense recursion over the DAG, independent of the symbolic evaluator.
DenseOperator dense_effective(const SimExpr& e, const DenseOperator& h) {
  switch (e->kind()) {
    case SimNode::Kind::Primitive:
      return h;
    case SimNode::Kind::Conj: {
      const DenseOperator u = layer_matrix(e->layer());
      return u * dense_effective(e->body(), h) * u.adjoint();
    }
    case SimNode::Kind::Sum: {
      DenseOperator out(h.dim());
      for (const auto& [w, c] : e->terms()) out.add_scaled(w, dense_effective(c, h));
      return out;
    }
    case SimNode::Kind::Local:
      return embed_local(e->local(), e->qudit(), e->D(), e->N());
  }
  return {};
}

SimExpr random_expr(int D, int N, std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_real_distribution<double> w(0.1, 1.0);
  if (depth == 0) return primitive(D, N);
  switch (pick(rng)) {
    case 0: {
      GateLayer layer = GateLayer::identity(D, N);
      for (int q = 0; q < N; ++q) {
        if (q % 2 == 0) layer.gates[q] = CliffordGate::fourier(D).then(CliffordGate::phase(D));
        else layer.gates[q] = LocalGate::dense(hamsim::testing::random_unitary(D, rng));
      }
      return conj(layer, random_expr(D, N, rng, depth - 1));
    }
    case 1:
      return weighted_sum({{w(rng), random_expr(D, N, rng, depth - 1)}, {w(rng), random_expr(D, N, rng, depth - 1)}});
    default: {
      const SimExpr loc = local_term(D, N, 0, hamsim::testing::random_hermitian(D, rng));
      return weighted_sum({{w(rng), random_expr(D, N, rng, depth - 1)}, {w(rng), loc}});
    }
  }
}

}  // namespace

TEST_CASE("conj examples") {
  SymbolicHamiltonian h(2, 2);
  h.add(PauliString{{0, 1}, {0, 1}}, 1.0);
  const SimExpr p = primitive(2, 2);
  CHECK(conj(GateLayer::identity(2, 2), p) == p);

  const GateLayer f{{CliffordGate::fourier(2), LocalGate::identity(2)}};
  const SymbolicHamiltonian eff = effective_hamiltonian(conj(f, p), h);
  // F Z F^dagger = X^{-1} = X for qubits.
  CHECK(std::abs(eff.coefficient(PauliString{{1, 0}, {0, 1}}) - 1.0) < 1e-12);
  CHECK(eff.size() == 1);

  // Nested conjugations fold into one node.
  const SimExpr twice = conj(f, conj(f, p));
  CHECK(twice->kind() == SimNode::Kind::Conj);
  CHECK(twice->body() == p);
}

TEST_CASE("weighted_sum examples") {
  SymbolicHamiltonian h(2, 2);
  h.add(PauliString{{0, 1}, {0, 0}}, 1.0);
  h.add(PauliString{{0, 0}, {0, 1}}, 1.0);
  const SimExpr p = primitive(2, 2);
  const SimExpr single = weighted_sum({{1.0, p}});
  CHECK(max_coefficient_diff(effective_hamiltonian(single, h), h) == 0.0);

  // Repeated children merge; a lone unit weight returns the child itself.
  const SimExpr merged = weighted_sum({{0.25, p}, {0.75, p}, {0.0, conj_pauli(PauliString{{1, 0}, {0, 0}}, p)}});
  CHECK(merged == p);
  const SimExpr doubled = weighted_sum({{0.5, p}, {1.5, p}});
  REQUIRE(doubled->terms().size() == 1);
  CHECK(doubled->terms()[0].first == doctest::Approx(2.0));

  std::mt19937_64 rng(1);
  const SymbolicHamiltonian hr = hamsim::testing::random_hamiltonian(3, 2, rng);
  const GateLayer la{{CliffordGate::phase(3), CliffordGate::fourier(3)}};
  const GateLayer lb{{LocalGate::dense(hamsim::testing::random_unitary(3, rng)), CliffordGate::multiplier(3, 2)}};
  const SimExpr ea = conj(la, primitive(3, 2)), eb = conj(lb, primitive(3, 2));
  const SymbolicHamiltonian expected =
      cplx(0.3) * effective_hamiltonian(ea, hr) + cplx(0.7) * effective_hamiltonian(eb, hr);
  CHECK(max_coefficient_diff(effective_hamiltonian(weighted_sum({{0.3, ea}, {0.7, eb}}), hr), expected) < 1e-10);

  CHECK_THROWS_AS(weighted_sum({}), InvalidArgument);
  CHECK_THROWS_AS(weighted_sum({{1.0, primitive(2, 2)}, {1.0, primitive(3, 2)}}), InvalidArgument);
}

TEST_CASE("negate") {
  SymbolicHamiltonian zz(2, 2);
  zz.add(PauliString{{0, 1}, {0, 1}}, 1.0);
  const SimExpr n = negate(primitive(2, 2));
  CHECK(n->terms().size() == 15);
  SymbolicHamiltonian eff = effective_hamiltonian(n, zz);
  eff.prune();
  CHECK(eff.size() == 1);
  CHECK(std::abs(eff.coefficient(PauliString{{0, 1}, {0, 1}}) + 1.0) < 1e-12);
  CHECK(std::abs(eff.identity_coefficient()) < 1e-15);

  // D^N tr(J) I - J with a trace.
  std::mt19937_64 rng(2);
  SymbolicHamiltonian h = hamsim::testing::random_hamiltonian(3, 2, rng);
  h.add(identity_string(2), 0.4);
  const SymbolicHamiltonian en = effective_hamiltonian(negate(primitive(3, 2)), h);
  const double trace = reconstruct(h).trace().real();
  SymbolicHamiltonian expected = cplx(-1.0) * h;
  expected.add(identity_string(2), 9.0 * trace);
  CHECK(max_coefficient_diff(en, expected) < 1e-10);
}

TEST_CASE("effective_hamiltonian against a dense recursion") {
  std::mt19937_64 rng(3);
  for (int D : {2, 3}) {
    const SymbolicHamiltonian h = hamsim::testing::random_hamiltonian(D, 2, rng);
    const DenseOperator hd = reconstruct(h);
    CHECK(max_coefficient_diff(effective_hamiltonian(primitive(D, 2), h), h) == 0.0);
    for (int trial = 0; trial < 5; ++trial) {
      const SimExpr e = random_expr(D, 2, rng, 4);
      CHECK(max_abs_diff(reconstruct(effective_hamiltonian(e, h)), dense_effective(e, hd)) < 1e-10);
    }
  }
}

TEST_CASE("local_term validation") {
  CHECK_THROWS_AS(local_term(2, 2, 0, DenseOperator{{0.0, 1.0}, {0.0, 0.0}}), NotHermitianError);
  CHECK_THROWS_AS(local_term(2, 2, 2, DenseOperator::identity(2)), InvalidArgument);
}

TEST_CASE("cost and leaf counts") {
  const SimExpr p = primitive(2, 2);
  const SimExpr a = conj_pauli(PauliString{{1, 0}, {0, 0}}, p);
  const SimExpr s = weighted_sum({{0.5, p}, {1.5, a}});
  CHECK(cost(s) == doctest::Approx(2.0));
  CHECK(leaf_count(s) == 2);
  const SimExpr nested = weighted_sum({{2.0, s}, {1.0, a}});
  CHECK(leaf_count(nested) == 3);
  CHECK(node_count(nested) == 4);
  CHECK(cost(nested) == doctest::Approx(5.0));
}

TEST_CASE("lower examples") {
  const SimExpr p = primitive(2, 2);
  const PulseSchedule s1 = lower(p, {1, 0.8}).flattened();
  REQUIRE(s1.main.size() == 1);
  CHECK(s1.main[0].kind == ScheduleOp::Kind::Evolve);
  CHECK(s1.main[0].duration == doctest::Approx(0.8));

  const GateLayer f{{CliffordGate::fourier(2).then(CliffordGate::phase(2)), LocalGate::identity(2)}};
  const PulseSchedule s2 = lower(conj(f, p), {1, 1.0}).flattened();
  REQUIRE(s2.main.size() == 3);
  CHECK(s2.main[0].kind == ScheduleOp::Kind::Gate);
  CHECK(s2.main[0].qudit == 0);
  CHECK(max_abs_diff(s2.main[0].gate.matrix(), f.gates[0].inverse().matrix()) < 1e-12);
  CHECK(s2.main[1].kind == ScheduleOp::Kind::Evolve);
  CHECK(max_abs_diff(s2.main[2].gate.matrix(), f.gates[0].matrix()) < 1e-12);

  // Execution oracle for the sandwich: U exp(-iHt) U^dagger.
  std::mt19937_64 rng(4);
  const SymbolicHamiltonian h = hamsim::testing::random_hamiltonian(2, 2, rng);
  const DenseOperator u = kron(f.gates[0].matrix(), DenseOperator::identity(2));
  const DenseOperator expected = u * expm_hermitian(reconstruct(h), 1.0) * u.adjoint();
  CHECK(max_abs_diff(execute_schedule(s2, h), expected) < 1e-12);

  const SimExpr two = weighted_sum({{1.0, p}, {1.0, conj(f, p)}});
  const PulseSchedule s3 = lower(two, {4, 1.0});
  CHECK(s3.wall_clock() == doctest::Approx(2.0));
  int evolves = 0;
  for (const ScheduleOp& op : s3.flattened().main) evolves += op.kind == ScheduleOp::Kind::Evolve ? 1 : 0;
  CHECK(evolves == 8);

  CHECK_THROWS_AS(lower(weighted_sum({{-1.0, p}}), {1, 1.0}), PreconditionError);
  CHECK_THROWS_AS(lower(p, {0, 1.0}), InvalidArgument);
}

TEST_CASE("lowered schedules converge to the effective evolution") {
  std::mt19937_64 rng(5);
  const SymbolicHamiltonian h = hamsim::testing::random_hamiltonian(2, 2, rng);
  const GateLayer f{{CliffordGate::fourier(2), CliffordGate::phase(2)}};
  const SimExpr e = weighted_sum({{0.6, primitive(2, 2)}, {0.9, conj(f, primitive(2, 2))}});
  const auto pts = trotter_error_scan(e, h, 1.0, {8, 16, 32, 64});
  for (double r : convergence_ratios(pts)) CHECK(r >= 1.5);
  CHECK(fit_first_order_constant(pts, 1.0) > 0.0);
}
