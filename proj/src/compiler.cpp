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


#include "hamsim/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hamsim/clifford.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/linalg.hpp"
#include "hamsim/majorization.hpp"
#include "hamsim/modular.hpp"

namespace hamsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int imod(std::int64_t x, int D) { return static_cast<int>(mod(x, D)); }

PauliLabel zpow(std::int64_t k, int D) { return make_label(0, k, D); }
PauliLabel xpow(std::int64_t j, int D) { return make_label(j, 0, D); }

PauliString pair_string(PauliLabel p, PauliLabel q) { return {p, q}; }

cplx omega(std::int64_t p, int D) { return std::polar(1.0, kTwoPi * static_cast<double>(mod(p, D)) / D); }

void require_two_qudit(const SymbolicHamiltonian& h, const char* who) {
  if (h.N() != 2) throw InvalidArgument(std::string(who) + ": expected a two-qudit Hamiltonian");
}

void require_hermitian(const SymbolicHamiltonian& h, const char* who) {
  const double scale = std::max(1.0, h.max_abs_coefficient());
  if (h.hermiticity_defect() > 1e-10 * scale) throw NotHermitianError(std::string(who) + ": Hamiltonian is not Hermitian");
}

// Conjugation by X^{-r} (x) X^{-s} multiplies the Z^a (x) Z^b coefficient by
// omega^{ra + sb}.
PauliString phase_word(int r, int s, int D) { return pair_string(xpow(-r, D), xpow(-s, D)); }

SymbolicHamiltonian z_sum_product(int D, int a, int b) {
  SymbolicHamiltonian out(D, 2);
  for (int sa : {1, -1})
    for (int sb : {1, -1}) out.add(pair_string(zpow(sa * a, D), zpow(sb * b, D)), 1.0);
  return out;
}

double nonidentity_residual(const SymbolicHamiltonian& snap, const SymbolicHamiltonian& eff) {
  return max_coefficient_diff(snap.traceless_part(), eff.traceless_part());
}

StageSnapshot make_stage(std::string name, SymbolicHamiltonian snap, SimExpr expr, const SymbolicHamiltonian& h) {
  snap.prune();
  StageSnapshot st{std::move(name), std::move(snap), std::move(expr), 0.0};
  st.residual = nonidentity_residual(st.hamiltonian, effective_hamiltonian(st.expr, h));
  return st;
}

DenseOperator partial_trace_first(const DenseOperator& k, int D) {
  DenseOperator out(static_cast<std::size_t>(D));
  const auto d = static_cast<std::size_t>(D);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out(r, c) += k(i * d + r, i * d + c);
  return out;
}

DenseOperator partial_trace_second(const DenseOperator& k, int D) {
  DenseOperator out(static_cast<std::size_t>(D));
  const auto d = static_cast<std::size_t>(D);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out(r, c) += k(r * d + i, c * d + i);
  return out;
}

// Re tr(A B) without forming the product.
double trace_product_real(const DenseOperator& a, const DenseOperator& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += (a(i, j) * b(j, i)).real();
  return s;
}

}  // namespace

const StageSnapshot& CompilationTrace::stage(const std::string& name) const {
  for (const StageSnapshot& s : stages)
    if (s.name == name) return s;
  throw InvalidArgument("CompilationTrace: no stage named " + name);
}

std::string CompilationTrace::summary() const {
  std::ostringstream os;
  os.precision(12);
  os << "coupling " << string_to_text(coupling) << " coefficient " << coupling_coefficient.real() << "+"
     << coupling_coefficient.imag() << "i\n";
  os << "params a=" << params.a << " b=" << params.b << " c=" << params.c << " d=" << params.d << " f=" << params.f
     << " l=" << params.l << " m=" << params.m << "\n";
  os << "prime_fast_path " << (prime_fast_path ? "yes" : "no") << "\n";
  os << "gamma";
  for (double g : gamma) os << ' ' << g;
  os << "\ngamma_max_imag " << gamma_max_imag << "\ngamma_shift " << gamma_shift << "\n";
  os << "beta_f " << beta_f.real() << "+" << beta_f.imag() << "i\n";
  os << "kappa_terms";
  for (const PhaseTerm& t : kappa_terms) os << " (" << t.r << "," << t.s << "," << t.weight << ")";
  os << "\nkappa_fallback " << (kappa_fallback ? "yes" : "no") << "\n";
  for (const StageSnapshot& s : stages) os << "stage " << s.name << " terms " << s.hamiltonian.size() << " residual " << s.residual << "\n";
  os << "product_terms " << product_terms << "\nlocal_terms " << local_terms << "\nmax_uhlmann_terms "
     << max_uhlmann_terms << "\ncost " << cost << "\nleaves " << leaves << "\ndropped_identity " << dropped_identity
     << "\n";
  return os.str();
}

PauliString find_coupling(const SymbolicHamiltonian& h) {
  require_two_qudit(h, "find_coupling");
  const double tau = kPruneTolerance * std::max(1.0, h.max_abs_coefficient());
  double best = 0.0;
  for (const auto& [s, c] : h.terms())
    if (weight(s) == 2 && std::abs(c) > tau) best = std::max(best, std::abs(c));
  if (best == 0.0) throw NotEntanglingError("Hamiltonian has no two-qudit coupling term");
  // The term map is ordered lexicographically by (j1, k1, j2, k2).
  for (const auto& [s, c] : h.terms())
    if (weight(s) == 2 && std::abs(c) >= 0.9 * best) return s;
  throw NotEntanglingError("Hamiltonian has no two-qudit coupling term");
}

CouplingParams coupling_params(int D, int a, int b) {
  a = imod(a, D);
  b = imod(b, D);
  if (a == 0 && b == 0) throw InvalidArgument("coupling_params: a and b are both zero");
  CouplingParams p;
  p.a = a;
  p.b = b;
  if (b == 0) {
    p.c = 1, p.d = 0, p.f = a;
  } else if (a == 0) {
    p.c = 0, p.d = 1, p.f = b;
  } else {
    const auto g = static_cast<int>(gcd_nonneg(a, b));
    p.c = a / g, p.d = b / g, p.f = g;
  }
  const ExtGcdResult e = ext_gcd(p.c, p.d);
  p.l = imod(e.r, D);
  p.m = imod(e.s, D);
  return p;
}

Step1Result step1_secure_zz(int D, const PauliString& coupling) {
  if (coupling.size() != 2 || weight(coupling) != 2) throw InvalidArgument("step1: coupling must act on both qudits");
  const PegResult p0 = peg_reduce(D, coupling[0].j, coupling[0].k);
  const PegResult p1 = peg_reduce(D, coupling[1].j, coupling[1].k);
  Step1Result out;
  out.layer.gates = {LocalGate(p0.gate), LocalGate(p1.gate)};
  out.expr = conj(out.layer, primitive(D, 2));
  out.params = coupling_params(D, p0.gcd, p1.gcd);
  return out;
}

std::vector<PauliString> step2_group(int D) {
  std::vector<PauliString> g;
  for (int l = 0; l < D; ++l)
    for (int m = 0; m < D; ++m) g.push_back(pair_string(zpow(l, D), zpow(m, D)));
  return g;
}

SimExpr step2_diagonal_twirl(const SimExpr& e1) {
  const int D = e1->D();
  const double w = 1.0 / (static_cast<double>(D) * D);
  std::vector<std::pair<double, SimExpr>> terms;
  for (const PauliString& g : step2_group(D)) terms.emplace_back(w, conj_pauli(g, e1));
  return weighted_sum(std::move(terms));
}

std::vector<PauliString> step3_group(const CouplingParams& p, int D) {
  std::vector<PauliString> g;
  for (int l = 0; l < D; ++l)
    g.push_back(pair_string(xpow(-static_cast<std::int64_t>(p.d) * l, D), xpow(static_cast<std::int64_t>(p.c) * l, D)));
  return g;
}

SimExpr step3_power_filter(const SimExpr& e2, const CouplingParams& p, int D) {
  std::vector<std::pair<double, SimExpr>> terms;
  for (const PauliString& g : step3_group(p, D)) terms.emplace_back(1.0 / D, conj_pauli(g, e2));
  return weighted_sum(std::move(terms));
}

std::vector<double> solve_gamma(int D, int f, double* max_imag) {
  const auto d = static_cast<std::size_t>(D);
  DenseOperator m(d);
  for (std::size_t n = 0; n < d; ++n)
    for (std::size_t j = 0; j < d; ++j) m(n, j) = omega(static_cast<std::int64_t>(n * j), D);
  std::vector<cplx> rhs(d, 0.0);
  rhs[static_cast<std::size_t>(imod(f, D))] += 1.0;
  rhs[static_cast<std::size_t>(imod(-f, D))] += 1.0;
  const std::vector<cplx> g = solve_linear(m, rhs);
  double im = 0.0;
  std::vector<double> out;
  for (const cplx& v : g) {
    im = std::max(im, std::abs(v.imag()));
    out.push_back(v.real());
  }
  if (max_imag) *max_imag = im;
  if (im >= 1e-10) throw PreconditionError("solve_gamma: solution is not real (max imaginary part " + std::to_string(im) + ")");
  return out;
}

Step4Result step4_pair_isolation(const SimExpr& e3, const CouplingParams& p, int D) {
  Step4Result out;
  out.gamma = solve_gamma(D, p.f, &out.max_imag);
  const double lo = *std::min_element(out.gamma.begin(), out.gamma.end());
  out.shift = -lo;
  std::vector<std::pair<double, SimExpr>> terms;
  for (int j = 0; j < D; ++j) {
    const double w = out.gamma[static_cast<std::size_t>(j)] - lo;
    if (w == 0.0) continue;
    const PauliString g = pair_string(xpow(-static_cast<std::int64_t>(p.l) * j, D), xpow(-static_cast<std::int64_t>(p.m) * j, D));
    terms.emplace_back(w, conj_pauli(g, e3));
  }
  out.expr = terms.empty() ? zero_expr(D, 2) : weighted_sum(std::move(terms));
  return out;
}

Step5Result step5_kappa(const SimExpr& e4, const CouplingParams& p, cplx beta, cplx kappa, int D) {
  if (std::abs(beta) < 1e-14) throw PreconditionError("step5: beta vanishes");
  const bool coincide = (2 * p.a) % D == 0 && (2 * p.b) % D == 0;
  const cplx target = coincide ? cplx(2.0 * kappa.real(), 0.0) : kappa;
  const cplx rho = target / beta;
  Step5Result out;
  auto emit = [&]() {
    std::vector<std::pair<double, SimExpr>> terms;
    for (const PhaseTerm& t : out.terms)
      if (t.weight > 0.0) terms.emplace_back(t.weight, conj_pauli(phase_word(t.r, t.s, D), e4));
    out.expr = terms.empty() ? zero_expr(D, 2) : weighted_sum(std::move(terms));
  };
  if (std::abs(rho) == 0.0) {
    emit();
    return out;
  }
  // Preferred basis {1, omega^a}.
  const cplx wa = omega(p.a, D);
  if (!coincide && std::abs(wa.imag()) > 1e-12) {
    const double y = rho.imag() / wa.imag();
    const double x = rho.real() - y * wa.real();
    const double eps = 1e-12 * std::abs(rho);
    if (x >= -eps && y >= -eps) {
      out.terms = {{0, 0, std::max(x, 0.0)}, {1, 0, std::max(y, 0.0)}};
      emit();
      return out;
    }
  }
  out.fallback = true;
  // Achievable phases omega^{ra + sb} form the multiples of gcd(a, b, D).
  const auto gp = static_cast<int>(gcd_nonneg(gcd_nonneg(p.a, p.b), D));
  const int count = D / gp;
  auto witness = [&](int e) {
    for (int r = 0; r < D; ++r)
      for (int s = 0; s < D; ++s)
        if (imod(static_cast<std::int64_t>(r) * p.a + static_cast<std::int64_t>(s) * p.b, D) == e) return std::pair{r, s};
    throw PreconditionError("step5: unreachable phase exponent");
  };
  if (coincide) {
    const int e = rho.real() >= 0.0 ? 0 : D / 2;
    const auto [r, s] = witness(e);
    out.terms = {{r, s, std::abs(rho.real())}};
    emit();
    return out;
  }
  double arg = std::arg(rho);
  if (arg < 0.0) arg += kTwoPi;
  const double step = kTwoPi * gp / D;
  const int t0 = std::min(count - 1, static_cast<int>(std::floor(arg / step)));
  const int t1 = (t0 + 1) % count;
  const int e0 = t0 * gp, e1 = t1 * gp;
  const cplx u0 = omega(e0, D), u1 = omega(e1, D);
  // x u0 + y u1 = rho over the reals.
  const double det = u0.real() * u1.imag() - u0.imag() * u1.real();
  const double x = (rho.real() * u1.imag() - rho.imag() * u1.real()) / det;
  const double y = (u0.real() * rho.imag() - u0.imag() * rho.real()) / det;
  const auto [r0, s0] = witness(e0);
  const auto [r1, s1] = witness(e1);
  out.terms = {{r0, s0, std::max(x, 0.0)}, {r1, s1, std::max(y, 0.0)}};
  emit();
  return out;
}

SimExpr step8_symmetrize(const SimExpr& e7, int D) {
  GateLayer layer = GateLayer::identity(D, 2);
  layer.gates[1] = LocalGate(CliffordGate::multiplier(D, D - 1));
  return weighted_sum({{1.0, e7}, {1.0, conj(layer, e7)}});
}

DenseOperator z_pair(int D, int a) {
  std::vector<double> diag(static_cast<std::size_t>(D));
  for (int z = 0; z < D; ++z) diag[static_cast<std::size_t>(z)] = 2.0 * std::cos(kTwoPi * static_cast<double>(mod(static_cast<std::int64_t>(a) * z, D)) / D);
  return DenseOperator::diagonal(std::span<const double>(diag));
}

SimExpr step6_product(const SimExpr& e8, const CouplingParams& p, const DenseOperator& j, const DenseOperator& jp, int D,
                      std::size_t* max_terms) {
  const UhlmannDecomposition dj = traceless_decompose(j, z_pair(D, p.a));
  const UhlmannDecomposition djp = traceless_decompose(jp, z_pair(D, p.b));
  if (max_terms) *max_terms = std::max(dj.size(), djp.size());
  if (dj.size() == 0 || djp.size() == 0) return zero_expr(D, 2);
  std::vector<LocalGate> left, right;
  for (const DenseOperator& u : dj.unitaries) left.push_back(LocalGate::dense(u));
  for (const DenseOperator& v : djp.unitaries) right.push_back(LocalGate::dense(v));
  std::vector<std::pair<double, SimExpr>> terms;
  for (std::size_t n = 0; n < dj.size(); ++n)
    for (std::size_t m = 0; m < djp.size(); ++m) {
      const double w = dj.weights[n] * djp.weights[m];
      if (w == 0.0) continue;
      terms.emplace_back(w, conj(GateLayer{{left[n], right[m]}}, e8));
    }
  return terms.empty() ? zero_expr(D, 2) : weighted_sum(std::move(terms));
}

std::vector<DenseOperator> hermitian_pauli_basis(int D) {
  std::vector<DenseOperator> basis;
  const double pair_norm = 1.0 / std::sqrt(2.0 * D);
  const double self_norm = 1.0 / std::sqrt(static_cast<double>(D));
  for (const PauliLabel& w : all_labels(D)) {
    if (w.is_identity()) continue;
    const PauliLabel wbar = make_label(-w.j, -w.k, D);
    if (wbar < w) continue;
    const DenseOperator m = label_matrix(w, D);
    if (wbar == w) {
      const cplx ph = phase_value(make_phase(static_cast<std::int64_t>(w.j) * w.k, D), D);
      basis.push_back((ph * self_norm) * m);
      continue;
    }
    const DenseOperator md = m.adjoint();
    basis.push_back(cplx(pair_norm) * (m + md));
    basis.push_back(cplx(0.0, pair_norm) * (m - md));
  }
  return basis;
}

TargetDecomposition decompose_target(const SymbolicHamiltonian& k) {
  require_two_qudit(k, "decompose_target");
  require_hermitian(k, "decompose_target");
  const int D = k.D();
  const auto d = static_cast<std::size_t>(D);
  const DenseOperator km = reconstruct(k);
  TargetDecomposition out;
  out.identity = km.trace().real() / static_cast<double>(d * d);
  const DenseOperator id = DenseOperator::identity(d);
  out.local0 = cplx(1.0 / D) * partial_trace_second(km, D) - cplx(out.identity) * id;
  out.local1 = cplx(1.0 / D) * partial_trace_first(km, D) - cplx(out.identity) * id;
  DenseOperator coupling = km - cplx(out.identity) * DenseOperator::identity(d * d);
  coupling -= kron(out.local0, id);
  coupling -= kron(id, out.local1);

  const std::vector<DenseOperator> basis = hermitian_pauli_basis(D);
  std::vector<std::vector<double>> c(basis.size(), std::vector<double>(basis.size(), 0.0));
  double cmax = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      c[a][b] = trace_product_real(kron(basis[a], basis[b]), coupling);
      cmax = std::max(cmax, std::abs(c[a][b]));
    }
  const double tol = 1e-12 * std::max(1.0, cmax);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    DenseOperator partner(d);
    bool any = false;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (std::abs(c[a][b]) <= tol) continue;
      partner.add_scaled(c[a][b], basis[b]);
      any = true;
    }
    if (any) out.products.emplace_back(basis[a], std::move(partner));
  }
  return out;
}

namespace {

struct FrontEnd {
  SimExpr e1, e3;
  GateLayer layer;
  CouplingParams params;
  std::vector<PauliString> step3;
};

FrontEnd general_front(const SymbolicHamiltonian& h, const PauliString& coupling) {
  const int D = h.D();
  Step1Result s1 = step1_secure_zz(D, coupling);
  FrontEnd fe;
  fe.e1 = s1.expr;
  fe.layer = s1.layer;
  fe.params = s1.params;
  fe.step3 = step3_group(fe.params, D);
  fe.e3 = step3_power_filter(step2_diagonal_twirl(fe.e1), fe.params, D);
  return fe;
}

std::vector<PauliString> fast_step3_group(int D) {
  std::vector<PauliString> g;
  for (int l = 0; l < D; ++l) g.push_back(pair_string(xpow(l, D), xpow(-l, D)));
  return g;
}

}  // namespace

FastPathResult prime_fast_path(const SymbolicHamiltonian& h) {
  require_two_qudit(h, "prime_fast_path");
  const int D = h.D();
  if (!is_prime(D)) throw PreconditionError("prime_fast_path: D=" + std::to_string(D) + " is not prime");
  const PauliString coupling = find_coupling(h);
  const Step1Result s1 = step1_secure_zz(D, coupling);
  FastPathResult out;
  out.general = s1.params;
  // M(a) sends Z^a to Z.
  out.layer.gates = {s1.layer.gates[0].then(LocalGate(CliffordGate::multiplier(D, s1.params.a))),
                     s1.layer.gates[1].then(LocalGate(CliffordGate::multiplier(D, s1.params.b)))};
  const SimExpr e2 = step2_diagonal_twirl(conj(out.layer, primitive(D, 2)));
  std::vector<std::pair<double, SimExpr>> terms;
  for (const PauliString& g : fast_step3_group(D)) terms.emplace_back(1.0 / D, conj_pauli(g, e2));
  out.e3 = weighted_sum(std::move(terms));
  return out;
}

Pipeline build_pipeline(const SymbolicHamiltonian& h, const PipelineOptions& opt) {
  require_two_qudit(h, "build_pipeline");
  require_hermitian(h, "build_pipeline");
  const int D = h.D();
  Pipeline out;
  CompilationTrace& tr = out.trace;
  tr.coupling = find_coupling(h);
  tr.coupling_coefficient = h.coefficient(tr.coupling);
  tr.prime_fast_path = opt.prime_fast_path;

  FrontEnd fe;
  if (opt.prime_fast_path) {
    FastPathResult fp = prime_fast_path(h);
    fe.layer = fp.layer;
    fe.e1 = conj(fp.layer, primitive(D, 2));
    fe.params = coupling_params(D, 1, 1);
    fe.step3 = fast_step3_group(D);
    fe.e3 = fp.e3;
  } else {
    fe = general_front(h, tr.coupling);
  }
  const CouplingParams& p = fe.params;
  tr.params = p;

  const SymbolicHamiltonian h1 = conjugate_by_layer(h, fe.layer);
  const std::vector<PauliString> g2 = step2_group(D);
  const SymbolicHamiltonian h2 = twirl(h1, g2);
  const SymbolicHamiltonian h3 = twirl(h2, fe.step3);
  tr.stages.push_back(make_stage("H1", h1, fe.e1, h));
  tr.stages.push_back(make_stage("H2", h2, step2_diagonal_twirl(fe.e1), h));
  tr.stages.push_back(make_stage("H3", h3, fe.e3, h));

  for (int n = 0; n < D; ++n)
    tr.beta.push_back(h3.coefficient(pair_string(zpow(static_cast<std::int64_t>(n) * p.c, D), zpow(static_cast<std::int64_t>(n) * p.d, D))));
  if (std::abs(tr.beta[static_cast<std::size_t>(imod(p.f, D))]) < 1e-14)
    throw PreconditionError("pipeline: beta_f vanishes");

  Step4Result s4 = step4_pair_isolation(fe.e3, p, D);
  tr.gamma = s4.gamma;
  tr.gamma_max_imag = s4.max_imag;
  tr.gamma_shift = s4.shift;
  SymbolicHamiltonian h4(D, 2);
  h4.add(pair_string(zpow(p.a, D), zpow(p.b, D)), tr.beta[static_cast<std::size_t>(imod(p.f, D))]);
  h4.add(pair_string(zpow(-p.a, D), zpow(-p.b, D)), tr.beta[static_cast<std::size_t>(imod(-p.f, D))]);
  tr.stages.push_back(make_stage("H4", h4, s4.expr, h));
  tr.beta_f = h4.coefficient(pair_string(zpow(p.a, D), zpow(p.b, D)));

  const PauliString x1 = phase_word(1, 0, D);
  tr.stages.push_back(make_stage("H5", conjugate_by_pauli_word(h4, x1), conj_pauli(x1, s4.expr), h));

  Step5Result s5 = step5_kappa(s4.expr, p, tr.beta_f, 1.0, D);
  tr.kappa_terms = s5.terms;
  tr.kappa_fallback = s5.fallback;
  SymbolicHamiltonian h6(D, 2);
  h6.add(pair_string(zpow(p.a, D), zpow(p.b, D)), 1.0);
  h6.add(pair_string(zpow(-p.a, D), zpow(-p.b, D)), 1.0);
  tr.stages.push_back(make_stage("H6", h6, s5.expr, h));

  GateLayer flip = GateLayer::identity(D, 2);
  flip.gates[1] = LocalGate(CliffordGate::multiplier(D, D - 1));
  SymbolicHamiltonian h7(D, 2);
  h7.add(pair_string(zpow(p.a, D), zpow(-p.b, D)), 1.0);
  h7.add(pair_string(zpow(-p.a, D), zpow(p.b, D)), 1.0);
  tr.stages.push_back(make_stage("H7", h7, conj(flip, s5.expr), h));

  out.e8 = step8_symmetrize(s5.expr, D);
  tr.stages.push_back(make_stage("H8", z_sum_product(D, p.a, p.b), out.e8, h));
  return out;
}

CompileResult compile_full(const SymbolicHamiltonian& h, const SymbolicHamiltonian& k, double t, std::uint64_t n,
                           const PipelineOptions& opt) {
  require_two_qudit(h, "compile_full");
  require_two_qudit(k, "compile_full");
  if (k.D() != h.D()) throw InvalidArgument("compile_full: resource and target dimensions differ");
  if (n == 0) throw InvalidArgument("compile_full: need at least one slice");
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("compile_full: time must be finite and non-negative");
  const int D = h.D();
  Pipeline pipe = build_pipeline(h, opt);
  const TargetDecomposition td = decompose_target(k);

  CompileResult out;
  out.trace = std::move(pipe.trace);
  std::vector<std::pair<double, SimExpr>> terms;
  for (const auto& [ja, jb] : td.products) {
    std::size_t mt = 0;
    SimExpr prod = step6_product(pipe.e8, out.trace.params, ja, jb, D, &mt);
    out.trace.max_uhlmann_terms = std::max(out.trace.max_uhlmann_terms, mt);
    if (prod->kind() == SimNode::Kind::Sum && prod->terms().empty()) continue;
    terms.emplace_back(1.0, std::move(prod));
    ++out.trace.product_terms;
  }
  const double lt = 1e-12 * std::max(1.0, k.max_abs_coefficient());
  if (td.local0.max_abs() > lt) {
    terms.emplace_back(1.0, local_term(D, 2, 0, td.local0));
    ++out.trace.local_terms;
  }
  if (td.local1.max_abs() > lt) {
    terms.emplace_back(1.0, local_term(D, 2, 1, td.local1));
    ++out.trace.local_terms;
  }
  out.expr = terms.empty() ? zero_expr(D, 2) : weighted_sum(std::move(terms));
  out.trace.cost = cost(out.expr);
  out.trace.leaves = leaf_count(out.expr);
  const SymbolicHamiltonian eff = effective_hamiltonian(out.expr, h);
  out.trace.dropped_identity = eff.identity_coefficient().real() - td.identity;

  out.schedule = lower(out.expr, TrotterConfig{n, t});
  std::ostringstream di;
  di.precision(17);
  di << out.trace.dropped_identity;
  out.schedule.meta["dropped_identity"] = di.str();
  out.schedule.meta["coupling"] = string_to_text(out.trace.coupling, ",");
  if (out.trace.kappa_fallback) out.schedule.meta["kappa_fallback"] = "1";
  return out;
}

SymbolicHamiltonian swap_generator(int D) {
  const auto d = static_cast<std::size_t>(D);
  DenseOperator m(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t r = i * d + j;
      m(r, r) += std::numbers::pi / 2.0;
      m(j * d + i, r) -= std::numbers::pi / 2.0;
    }
  SymbolicHamiltonian out = decompose_operator(m, D, 2);
  out.prune();
  return out;
}

}  // namespace hamsim
