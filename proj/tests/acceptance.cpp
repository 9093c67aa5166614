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


// Acceptance run: one PASS/FAIL line per criterion. Thresholds and time
// limits are fixed below; the process exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hamsim/clifford.hpp"
#include "hamsim/compiler.hpp"
#include "hamsim/decoupling.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/linalg.hpp"
#include "hamsim/majorization.hpp"
#include "hamsim/modular.hpp"
#include "hamsim/nqudit.hpp"
#include "hamsim/pauli.hpp"
#include "hamsim/verify.hpp"
#include "nqudit_support.hpp"
#include "support.hpp"

using namespace hamsim;
using hamsim::testing::omega;
using hamsim::testing::shift_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 1 ---------------------------------------------------------------------------
constexpr double kPauliTol = 1e-12;

Outcome pauli_algebra() {
  double worst = 0.0;
  for (int D = 2; D <= 6; ++D) {
    std::vector<DenseOperator> m;
    for (PauliLabel p : all_labels(D)) m.push_back(shift_clock(p.j, p.k, D));
    const auto labels = all_labels(D);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      worst = std::max(worst, max_abs_diff(label_matrix(labels[a], D), m[a]));
      for (std::size_t b = 0; b < labels.size(); ++b) {
        const DenseOperator pq = m[a] * m[b];
        auto [r, ph] = compose_labels(labels[a], labels[b], D);
        DenseOperator rhs = shift_clock(r.j, r.k, D);
        rhs *= phase_value(ph, D);
        worst = std::max(worst, max_abs_diff(pq, rhs));
        DenseOperator qp = m[b] * m[a];
        qp *= phase_value(commutation_phase(labels[a], labels[b], D), D);
        worst = std::max(worst, max_abs_diff(pq, qp));
      }
    }
  }
  return {worst < kPauliTol, "max residual " + fmt("%.2e", worst)};
}

// 2 ---------------------------------------------------------------------------
constexpr double kTwirlTol = 1e-10;

Outcome twirl_identity() {
  std::mt19937_64 rng(2002);
  double worst = 0.0;
  for (int D = 2; D <= 6; ++D)
    for (int i = 0; i < 50; ++i)
      worst = std::max(worst, full_pauli_twirl_identity_check(hamsim::testing::random_matrix(D, rng), D));
  for (int D : {2, 3})
    for (int i = 0; i < 50; ++i)
      worst = std::max(worst, full_pauli_twirl_identity_check(hamsim::testing::random_matrix(D * D, rng), D));
  return {worst < kTwirlTol, "max residual " + fmt("%.2e", worst)};
}

// 3 ---------------------------------------------------------------------------
constexpr double kGateTol = 1e-12;

double conj_residual(const DenseOperator& u, const DenseOperator& in, const DenseOperator& out, cplx phase) {
  DenseOperator rhs = out;
  rhs *= phase;
  return max_abs_diff(u * in * u.adjoint(), rhs);
}

Outcome normalizer_gates() {
  double worst = 0.0;
  for (int D = 2; D <= 7; ++D) {
    const DenseOperator X = shift_clock(1, 0, D), Z = shift_clock(0, 1, D);
    const DenseOperator f = CliffordGate::fourier(D).matrix();
    worst = std::max(worst, conj_residual(f, X, Z, 1.0));
    worst = std::max(worst, conj_residual(f, Z, shift_clock(D - 1, 0, D), 1.0));
    const DenseOperator p = CliffordGate::phase(D).matrix();
    const cplx half = D % 2 == 0 ? omega(0.5, D) : cplx(1.0);
    worst = std::max(worst, conj_residual(p, X, X * Z, half));
    worst = std::max(worst, conj_residual(p, Z, Z, 1.0));
    for (int a = 1; a < D; ++a) {
      if (std::gcd(a, D) != 1) continue;
      const DenseOperator m = CliffordGate::multiplier(D, a).matrix();
      const int ainv = static_cast<int>(mod_inverse(a, D));
      worst = std::max(worst, conj_residual(m, X, shift_clock(a, 0, D), 1.0));
      worst = std::max(worst, conj_residual(m, Z, shift_clock(0, ainv, D), 1.0));
    }
  }
  return {worst < kGateTol, "max residual " + fmt("%.2e", worst)};
}

// 4 ---------------------------------------------------------------------------
constexpr double kPegTol = 1e-12;
constexpr double kPeg105Tol = 1e-9;

/// U p U^dagger = c Z^g with |c| = 1.
double reduces_to(const DenseOperator& u, const DenseOperator& p, const DenseOperator& zg) {
  const DenseOperator img = u * p * u.adjoint();
  const cplx c = (zg.adjoint() * img).trace() / static_cast<double>(zg.dim());
  DenseOperator rhs = zg;
  rhs *= c;
  return std::max(std::abs(std::abs(c) - 1.0), max_abs_diff(img, rhs));
}

Outcome peg_lemma() {
  double worst = 0.0;
  bool exact = true;
  for (int D = 2; D <= 10; ++D)
    for (PauliLabel p : all_labels(D)) {
      if (p.is_identity()) continue;
      const PegResult r = peg_reduce(D, p.j, p.k);
      const int g = std::gcd(p.j, p.k);
      exact = exact && r.gcd == g;
      worst = std::max(worst, reduces_to(r.gate.matrix(), shift_clock(p.j, p.k, D), shift_clock(0, g, D)));
    }
  const PegResult big = peg_reduce(105, 104, 80);
  const std::vector<PauliLabel> chain{{104, 80}, {24, 80}, {24, 8}, {0, 8}};
  const bool chain_ok = big.gcd == 8 && big.chain == chain;
  const double r105 = reduces_to(big.gate.matrix(), shift_clock(104, 80, 105), shift_clock(0, 8, 105));
  return {exact && chain_ok && worst < kPegTol && r105 < kPeg105Tol,
          "D<=10 residual " + fmt("%.2e", worst) + ", D=105 chain " + (chain_ok ? "ok" : "wrong") + " residual " +
              fmt("%.2e", r105)};
}

// 5 ---------------------------------------------------------------------------
constexpr double kLemmaMatrixTol = 1e-10;

Outcome number_lemma() {
  long cases = 0, failures = 0;
  for (std::int64_t D = 2; D <= 12; ++D)
    for (std::int64_t l = 0; l < D; ++l)
      for (std::int64_t m = 0; m < D; ++m) {
        if (std::gcd(l, m) != 1) continue;
        for (std::int64_t j = 0; j < D; ++j)
          for (std::int64_t k = 0; k < D; ++k) {
            ++cases;
            int count = 0;
            std::int64_t found = -1;
            for (std::int64_t n = 0; n < D; ++n)
              if (mod(n * l - j, D) == 0 && mod(n * m - k, D) == 0) ++count, found = n;
            const bool cond = mod(j * m - k * l, D) == 0;
            bool ok = cond == (count == 1) && count <= 1;
            if (cond) {
              ok = ok && lemma_witness(j, k, l, m, D) == found;
            } else {
              try {
                lemma_witness(j, k, l, m, D);
                ok = false;
              } catch (const PreconditionError&) {
              }
            }
            failures += ok ? 0 : 1;
          }
      }
  // Matrix form: after the PEG gate sends X^l Z^m to Z, X^j Z^k goes to Z^n.
  double worst = 0.0;
  for (int D = 2; D <= 8; ++D)
    for (int l = 0; l < D; ++l)
      for (int m = 0; m < D; ++m) {
        if (std::gcd(l, m) != 1) continue;
        const DenseOperator u = peg_reduce(D, l, m).gate.matrix();
        for (int j = 0; j < D; ++j)
          for (int k = 0; k < D; ++k) {
            if (mod(static_cast<std::int64_t>(j) * m - static_cast<std::int64_t>(k) * l, D) != 0) continue;
            const auto n = static_cast<int>(lemma_witness(j, k, l, m, D));
            worst = std::max(worst, reduces_to(u, shift_clock(j, k, D), shift_clock(0, n, D)));
          }
      }
  return {failures == 0 && worst < kLemmaMatrixTol,
          std::to_string(cases) + " cases, " + std::to_string(failures) + " failures, matrix residual " +
              fmt("%.2e", worst)};
}

// 6 ---------------------------------------------------------------------------
constexpr double kUhlmannTol = 1e-8;
constexpr double kWeightFloor = -1e-12;

Outcome uhlmann() {
  std::mt19937_64 rng(6006);
  double worst = 0.0, min_w = 0.0;
  std::size_t max_terms_over = 0;
  bool count_ok = true;
  for (std::size_t D = 2; D <= 8; ++D)
    for (int i = 0; i < 100; ++i) {
      const DenseOperator a = hamsim::testing::random_traceless_hermitian(D, rng);
      const DenseOperator b = hamsim::testing::random_traceless_hermitian(D, rng);
      const UhlmannDecomposition d = traceless_decompose(a, b);
      worst = std::max(worst, uhlmann_residual(d, a, b));
      for (double w : d.weights) min_w = std::min(min_w, w);
      if (d.size() > D * D) count_ok = false;
      max_terms_over = std::max(max_terms_over, d.size());
    }
  return {worst <= kUhlmannTol && min_w >= kWeightFloor && count_ok,
          "max residual " + fmt("%.2e", worst) + ", min weight " + fmt("%.2e", min_w) + ", max terms " +
              std::to_string(max_terms_over)};
}

// 7 ---------------------------------------------------------------------------
constexpr double kStageTol = 1e-9;
constexpr double kGammaImagTol = 1e-10;

PauliString zz(std::int64_t a, std::int64_t b, int D) {
  return PauliString{{0, static_cast<int>(mod(a, D))}, {0, static_cast<int>(mod(b, D))}};
}

Outcome stage_contracts() {
  std::mt19937_64 rng(7007);
  double worst = 0.0, worst_imag = 0.0;
  int fallbacks = 0, runs = 0;
  for (int D = 2; D <= 6; ++D)
    for (int i = 0; i < 20; ++i) {
      ++runs;
      const SymbolicHamiltonian h = hamsim::testing::random_hamiltonian(D, 2, rng);
      const Pipeline pipe = build_pipeline(h);
      const CompilationTrace& tr = pipe.trace;
      const CouplingParams& p = tr.params;
      worst_imag = std::max(worst_imag, tr.gamma_max_imag);
      fallbacks += tr.kappa_fallback ? 1 : 0;
      for (const StageSnapshot& s : tr.stages) worst = std::max(worst, s.residual);
      // H2: diagonal terms only.
      for (const auto& [s, c] : effective_hamiltonian(tr.stage("H2").expr, h).terms())
        if (s[0].j != 0 || s[1].j != 0) worst = std::max(worst, std::abs(c));
      // H3: powers of Z^c (x) Z^d only, with beta_f tied to the coupling.
      for (const auto& [s, c] : effective_hamiltonian(tr.stage("H3").expr, h).terms()) {
        bool on_line = false;
        for (int n = 0; n < D; ++n) on_line = on_line || s == zz(static_cast<std::int64_t>(n) * p.c, static_cast<std::int64_t>(n) * p.d, D);
        if (!on_line) worst = std::max(worst, std::abs(c));
      }
      const double mult = zz(p.a, p.b, D) == zz(-p.a, -p.b, D) ? 2.0 : 1.0;
      worst = std::max(worst, std::abs(std::abs(tr.beta_f) - mult * std::abs(tr.coupling_coefficient)));
      // H4: the pair Z^a (x) Z^b, Z^-a (x) Z^-b only.
      const SymbolicHamiltonian e4 = effective_hamiltonian(tr.stage("H4").expr, h).traceless_part();
      for (const auto& [s, c] : e4.terms())
        if (s != zz(p.a, p.b, D) && s != zz(-p.a, -p.b, D)) worst = std::max(worst, std::abs(c));
      // H6 and H8 closed forms.
      SymbolicHamiltonian want6(D, 2);
      want6.add(zz(p.a, p.b, D), 1.0);
      want6.add(zz(-p.a, -p.b, D), 1.0);
      worst = std::max(worst, max_coefficient_diff(effective_hamiltonian(tr.stage("H6").expr, h).traceless_part(), want6));
      const SymbolicHamiltonian want8 = decompose_operator(kron(z_pair(D, p.a), z_pair(D, p.b)), D, 2);
      worst = std::max(worst, max_coefficient_diff(effective_hamiltonian(pipe.e8, h).traceless_part(),
                                                   want8.traceless_part()));
    }
  return {worst < kStageTol && worst_imag < kGammaImagTol,
          std::to_string(runs) + " pipelines, max defect " + fmt("%.2e", worst) + ", max imag(gamma) " +
              fmt("%.2e", worst_imag) + ", kappa fallback in " + std::to_string(fallbacks)};
}

// 8 ---------------------------------------------------------------------------
constexpr double kFastPathTol = 1e-9;

Outcome prime_fast_path_check() {
  std::mt19937_64 rng(8008);
  double worst = 0.0;
  bool positive = true;
  for (int D : {2, 3, 5, 7})
    for (int i = 0; i < 5; ++i) {
      const SymbolicHamiltonian h = hamsim::testing::random_hamiltonian(D, 2, rng);
      const FastPathResult fp = prime_fast_path(h);
      const SymbolicHamiltonian fast = effective_hamiltonian(fp.e3, h);
      const SymbolicHamiltonian gen = effective_hamiltonian(build_pipeline(h).trace.stage("H3").expr, h);
      const CouplingParams& g = fp.general;
      double ratio = 0.0;
      for (int n = 1; n < D; ++n) {
        const cplx cf = fast.coefficient(zz(n, n, D));
        const cplx cg = gen.coefficient(zz(static_cast<std::int64_t>(n) * g.a, static_cast<std::int64_t>(n) * g.b, D));
        const cplx r = cf / cg;
        if (!(r.real() > 0.0)) positive = false;
        if (ratio == 0.0) ratio = std::abs(r);
        worst = std::max(worst, std::abs(r - ratio) / ratio);
      }
      // Nothing off the diagonal line survives.
      double off = 0.0;
      for (const auto& [s, c] : fast.traceless_part().terms())
        if (!(s[0].j == 0 && s[1].j == 0 && s[0].k == s[1].k)) off = std::max(off, std::abs(c));
      worst = std::max(worst, off);
    }
  return {positive && worst < kFastPathTol, "max relative deviation " + fmt("%.2e", worst)};
}

// 9 ---------------------------------------------------------------------------
constexpr double kEndToEndTol = 1e-2;
constexpr std::uint64_t kEndToEndSlices = 256;
constexpr double kMinRatio = 1.5;

Outcome end_to_end() {
  std::mt19937_64 rng(9009);
  bool ok = true;
  std::string detail;
  const std::vector<std::uint64_t> ns{64, 128, 256, 512};
  for (int D = 2; D <= 5; ++D) {
    const SymbolicHamiltonian h = hamsim::testing::random_hamiltonian(D, 2, rng);
    SymbolicHamiltonian zzk(D, 2);
    zzk.add(zz(1, 1, D), 0.5);
    zzk.add(zz(-1, -1, D), 0.5);
    const SymbolicHamiltonian targets[3] = {zzk, swap_generator(D), hamsim::testing::random_hamiltonian(D, 2, rng)};
    const char* names[3] = {"ZZ", "SWAP", "rand"};
    for (int t = 0; t < 3; ++t) {
      const CompileResult r = compile_full(h, targets[t], 1.0, kEndToEndSlices);
      const auto pts = trotter_error_scan(r.expr, h, targets[t], 1.0, ns);
      const auto ratios = convergence_ratios(pts);
      double dist256 = 0.0;
      for (const auto& p : pts)
        if (p.n == kEndToEndSlices) dist256 = p.error;
      const double min_ratio = *std::min_element(ratios.begin(), ratios.end());
      const bool pass = dist256 <= kEndToEndTol && min_ratio >= kMinRatio;
      ok = ok && pass;
      detail += " D" + std::to_string(D) + "/" + names[t] + ":" + fmt("%.1e", dist256) + "," + fmt("%.2f", min_ratio);
    }
  }
  return {ok, "distance@256,min ratio" + detail};
}

// 10 --------------------------------------------------------------------------
constexpr double kOffPTol = 1e-12;
constexpr double kFactorTol = 1e-9;

Outcome decoupling() {
  std::mt19937_64 rng(1010);
  struct Case {
    int D, N;
    bool chain;
  };
  bool ok = true;
  std::string detail;
  for (const Case& cs : {Case{2, 4, false}, Case{2, 5, false}, Case{2, 6, false}, Case{3, 4, false}, Case{2, 8, true}}) {
    InteractionGraph g(cs.N);
    if (cs.chain) {
      g = hamsim::testing::chain_graph(cs.N);
    } else {
      for (int u = 0; u < cs.N; ++u)
        for (int v = u + 1; v < cs.N; ++v) g.add_edge(u, v);
    }
    SymbolicHamiltonian h = hamsim::testing::random_two_body(cs.D, g, rng);
    const QuditPair p = cs.chain ? QuditPair{3, 4} : QuditPair{0, 1};
    const DecouplingPlan plan = cs.chain ? chain_plan(g, p) : generic_recursive_plan(cs.N, p);
    const DecoupledHamiltonian d = apply_plan(h, plan);
    double off = 0.0, keep = 0.0;
    for (const auto& [s, c] : d.hamiltonian.terms()) {
      bool inside = true;
      for (int q = 0; q < cs.N; ++q)
        if (!s[static_cast<std::size_t>(q)].is_identity() && q != p.first && q != p.second) inside = false;
      if (!inside) off = std::max(off, std::abs(c));
    }
    for (const auto& [s, c] : restrict_to_pair(h, p).terms()) {
      PauliString w = identity_string(cs.N);
      w[static_cast<std::size_t>(p.first)] = s[0];
      w[static_cast<std::size_t>(p.second)] = s[1];
      if (!is_identity(w)) keep = std::max(keep, std::abs(d.hamiltonian.coefficient(w) - d.scale * c));
    }
    // Closed-form term count.
    int rounds = 3;
    if (!cs.chain) {
      rounds = 1;
      while ((1 << (rounds - 1)) < cs.N - 2) ++rounds;
    }
    std::uint64_t closed = 1;
    for (int i = 0; i < 2 * rounds; ++i) closed *= static_cast<std::uint64_t>(cs.D);
    const bool count_ok = plan.flattened_count(cs.D) == closed && leaf_count(plan_expr(plan, cs.D)) == closed &&
                          static_cast<int>(plan.depth()) == rounds;
    // exp(-i H' t) = u_P (x) I.
    const double t = 0.9;
    const DenseOperator full = expm_hermitian(reconstruct(d.hamiltonian), t);
    const DenseOperator up = expm_hermitian(reconstruct(restrict_to_pair(d.hamiltonian, p)), t);
    const double factor = unitary_distance(full, embed_pair(up, p.first, p.second, cs.D, cs.N));
    const bool pass = off < kOffPTol && keep < kOffPTol && d.scale > 0.0 && count_ok && factor < kFactorTol;
    ok = ok && pass;
    detail += " (D" + std::to_string(cs.D) + ",N" + std::to_string(cs.N) + (cs.chain ? ",chain" : ",generic") +
              ":count " + std::to_string(closed) + (count_ok ? "" : "!") + ",off " + fmt("%.0e", off) + ",dense " +
              fmt("%.0e", factor) + ")";
  }
  return {ok, detail.substr(1)};
}

// 11 --------------------------------------------------------------------------
constexpr double kRoutedTol = 5e-2;
constexpr std::uint64_t kRoutedSlices = 512;

Outcome routed() {
  std::mt19937_64 rng(1111);
  const int D = 2, N = 4;
  const SymbolicHamiltonian h = hamsim::testing::random_two_body(D, hamsim::testing::chain_graph(N), rng);
  SymbolicHamiltonian k(D, N);
  k.add(PauliString{{0, 1}, {0, 0}, {0, 0}, {0, 1}}, 1.0);
  NQuditOptions opt;
  opt.swap_slices = kRoutedSlices;
  const NQuditResult r = compile_nqudit(h, k, 1.0, kRoutedSlices, opt);
  const FidelityReport rep = verify_schedule(r.schedule, h, k, 1.0, kRoutedTol);
  // Two SWAP stages before the body and their mirror after it.
  const bool route_ok = r.route.size() == 2 && r.schedule.meta.at("swaps") == "4";
  return {rep.passed() && route_ok, "route length " + std::to_string(r.route.size()) + ", swap stages " +
                                        r.schedule.meta.at("swaps") + ", distance " + fmt("%.2e", rep.distance)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Pauli algebra exactness", 10.0, pauli_algebra},
      {2, "full Pauli twirl identity", 10.0, twirl_identity},
      {3, "normalizer gates", 5.0, normalizer_gates},
      {4, "PEG lemma", 30.0, peg_lemma},
      {5, "number lemma", 30.0, number_lemma},
      {6, "Uhlmann corollary", 60.0, uhlmann},
      {7, "two-qudit pipeline stage contracts", 120.0, stage_contracts},
      {8, "prime fast path", 30.0, prime_fast_path_check},
      {9, "end-to-end two-qudit simulation", 600.0, end_to_end},
      {10, "decoupling", 300.0, decoupling},
      {11, "routed coupling", 300.0, routed},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.time_limit_s;
    const bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %d (%s): %s; %.2fs of %.0fs%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs, c.time_limit_s, in_time ? "" : " (over time limit)");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
