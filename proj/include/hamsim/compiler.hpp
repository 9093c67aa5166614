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

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hamsim/dense.hpp"
#include "hamsim/local_gate.hpp"
#include "hamsim/pauli.hpp"
#include "hamsim/schedule.hpp"
#include "hamsim/sim_ir.hpp"

namespace hamsim {

/// Exponents of the secured Z^a (x) Z^b coupling and the derived integers:
/// a = f c, b = f d (mod D), gcd(c, d) = 1, l c + m d = 1.
struct CouplingParams {
  int a = 0, b = 0;
  int c = 0, d = 0;
  int f = 0;
  int l = 0, m = 0;
};

struct StageSnapshot {
  std::string name;
  /// Computed directly from the previous snapshot, independently of `expr`.
  SymbolicHamiltonian hamiltonian;
  SimExpr expr;
  /// max |snapshot - effective_hamiltonian(expr)| over non-identity terms.
  double residual = 0.0;
};

/// A conjugation by X^{-r} (x) X^{-s} with a non-negative weight.
struct PhaseTerm {
  int r = 0;
  int s = 0;
  double weight = 0.0;
};

struct CompilationTrace {
  PauliString coupling;
  cplx coupling_coefficient;
  CouplingParams params;
  std::vector<cplx> beta;      // coefficients of (Z^c (x) Z^d)^n in H3
  std::vector<double> gamma;   // solution of M gamma = e_f + e_{-f}
  double gamma_max_imag = 0.0;
  double gamma_shift = 0.0;    // gamma' = gamma + shift, all >= 0
  cplx beta_f;                 // coefficient of Z^a (x) Z^b in H4
  std::vector<PhaseTerm> kappa_terms;
  bool kappa_fallback = false;
  std::vector<StageSnapshot> stages;  // H1 .. H8
  std::size_t product_terms = 0;
  std::size_t local_terms = 0;
  std::size_t max_uhlmann_terms = 0;
  double cost = 0.0;
  std::uint64_t leaves = 0;
  double dropped_identity = 0.0;
  bool prime_fast_path = false;

  const StageSnapshot& stage(const std::string& name) const;
  /// Human-readable multi-line summary.
  std::string summary() const;
};

/// The genuine two-qudit term of largest magnitude; among terms within 10% of
/// it, the lexicographically smallest (j1, k1, j2, k2). Throws
/// NotEntanglingError when there is none.
PauliString find_coupling(const SymbolicHamiltonian& h);

struct Step1Result {
  SimExpr expr;
  GateLayer layer;
  CouplingParams params;
};
Step1Result step1_secure_zz(int D, const PauliString& coupling);

/// Derives (c, d, f, l, m) from (a, b).
CouplingParams coupling_params(int D, int a, int b);

/// Average of conjugations by Z^l (x) Z^m over all D^2 pairs.
SimExpr step2_diagonal_twirl(const SimExpr& e1);
std::vector<PauliString> step2_group(int D);

/// Average over l of conjugations by (X^{-d} (x) X^{c})^l.
SimExpr step3_power_filter(const SimExpr& e2, const CouplingParams& p, int D);
std::vector<PauliString> step3_group(const CouplingParams& p, int D);

/// Solves M gamma = e_f + e_{-f} with M_{nj} = omega^{nj}. Throws
/// PreconditionError if the solution is not real within 1e-10.
std::vector<double> solve_gamma(int D, int f, double* max_imag = nullptr);

struct Step4Result {
  SimExpr expr;
  std::vector<double> gamma;
  double shift = 0.0;
  double max_imag = 0.0;
};
/// Sum over j of gamma'_j conjugations by (X^{-l} (x) X^{-m})^j with
/// gamma'_j = gamma_j - min gamma, which differs from the signed sum only by a
/// multiple of the identity.
Step4Result step4_pair_isolation(const SimExpr& e3, const CouplingParams& p, int D);

struct Step5Result {
  SimExpr expr;
  std::vector<PhaseTerm> terms;
  bool fallback = false;
};
/// Non-negative combination of conjugations of e4 by X^{-r} (x) X^{-s} whose
/// Z^a (x) Z^b coefficient is kappa, given that e4 has coefficient beta.
/// Tries {X^0, X^{-1} (x) I} first and flags any other choice.
Step5Result step5_kappa(const SimExpr& e4, const CouplingParams& p, cplx beta, cplx kappa, int D);

/// H7+ plus its conjugate by I (x) M(-1).
SimExpr step8_symmetrize(const SimExpr& e7, int D);

/// Z^a + Z^{-a} as a D x D matrix.
DenseOperator z_pair(int D, int a);

/// Sum over n, m of c_n c'_m (U_n (x) V_m) e8 (U_n (x) V_m)^dagger realizing
/// J (x) J'. Returns the zero expression if J or J' vanishes.
SimExpr step6_product(const SimExpr& e8, const CouplingParams& p, const DenseOperator& j, const DenseOperator& jp,
                      int D, std::size_t* max_terms = nullptr);

/// K = k0 I + L0 (x) I + I (x) L1 + sum_r A_r (x) B_r with traceless
/// Hermitian factors (operator Schmidt form over a Hermitian Pauli basis).
struct TargetDecomposition {
  double identity = 0.0;
  DenseOperator local0, local1;
  std::vector<std::pair<DenseOperator, DenseOperator>> products;
};
TargetDecomposition decompose_target(const SymbolicHamiltonian& k);

/// Traceless Hermitian basis of D x D matrices, orthonormal under
/// tr(A B): W + W^dagger and i(W - W^dagger) per conjugate pair,
/// omega^{jk/2} W for self-conjugate W.
std::vector<DenseOperator> hermitian_pauli_basis(int D);

struct PipelineOptions {
  bool prime_fast_path = false;
};

/// Stages H1 .. H8 for resource h, ending with the expression for
/// (Z^a + Z^{-a}) (x) (Z^b + Z^{-b}).
struct Pipeline {
  CompilationTrace trace;
  SimExpr e8;
};
Pipeline build_pipeline(const SymbolicHamiltonian& h, const PipelineOptions& opt = {});

struct CompileResult {
  SimExpr expr;
  PulseSchedule schedule;
  CompilationTrace trace;
};

/// Expression whose effective Hamiltonian is K up to a multiple of the
/// identity, lowered with n slices over time t.
CompileResult compile_full(const SymbolicHamiltonian& h, const SymbolicHamiltonian& k, double t, std::uint64_t n,
                           const PipelineOptions& opt = {});

/// Prime D: secures Z (x) Z with PEG plus multipliers, then averages
/// conjugations by X^l (x) X^{-l}. Returns the stage-3 expression. Throws
/// PreconditionError for composite D.
struct FastPathResult {
  SimExpr e3;
  GateLayer layer;
  CouplingParams general;  // a, b from the general step 1
};
FastPathResult prime_fast_path(const SymbolicHamiltonian& h);

/// pi (I - SWAP) / 2 on two qudits.
SymbolicHamiltonian swap_generator(int D);

}  // namespace hamsim
