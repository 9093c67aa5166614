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


#include "hamsim/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hamsim/errors.hpp"
#include "hamsim/modular.hpp"

namespace hamsim {

PauliPhase make_phase(std::int64_t numerator, int D) {
  return PauliPhase{static_cast<int>(mod(numerator, 2 * static_cast<std::int64_t>(D)))};
}

PauliPhase omega_power(std::int64_t power, int D) { return make_phase(2 * mod(power, D), D); }

PauliPhase add_phase(PauliPhase a, PauliPhase b, int D) {
  return make_phase(static_cast<std::int64_t>(a.numerator) + b.numerator, D);
}

cplx phase_value(PauliPhase p, int D) {
  // Exact values on the axes keep products of phases free of drift.
  const int twoD = 2 * D;
  const int n = p.numerator;
  if (n == 0) return {1.0, 0.0};
  if (2 * n == twoD) return {-1.0, 0.0};
  if (4 * n == twoD) return {0.0, 1.0};
  if (4 * n == 3 * twoD) return {0.0, -1.0};
  return std::polar(1.0, std::numbers::pi * n / D);
}

PauliLabel make_label(std::int64_t j, std::int64_t k, int D) {
  return PauliLabel{static_cast<int>(mod(j, D)), static_cast<int>(mod(k, D))};
}

std::pair<PauliLabel, PauliPhase> compose_labels(PauliLabel p, PauliLabel q, int D) {
  return {make_label(p.j + q.j, p.k + q.k, D), omega_power(static_cast<std::int64_t>(p.k) * q.j, D)};
}

PauliPhase commutation_phase(PauliLabel p, PauliLabel q, int D) {
  return omega_power(static_cast<std::int64_t>(p.k) * q.j - static_cast<std::int64_t>(p.j) * q.k, D);
}

PauliPhase conjugation_phase(PauliLabel w, PauliLabel p, int D) {
  return omega_power(static_cast<std::int64_t>(w.k) * p.j - static_cast<std::int64_t>(w.j) * p.k, D);
}

std::pair<PauliLabel, PauliPhase> adjoint_label(PauliLabel p, int D) {
  return {make_label(-p.j, -p.k, D), omega_power(static_cast<std::int64_t>(p.j) * p.k, D)};
}

DenseOperator label_matrix(PauliLabel p, int D) {
  DenseOperator m(static_cast<std::size_t>(D));
  for (int z = 0; z < D; ++z) {
    m(static_cast<std::size_t>((z + p.j) % D), static_cast<std::size_t>(z)) =
        phase_value(omega_power(static_cast<std::int64_t>(p.k) * z, D), D);
  }
  return m;
}

bool is_identity(const PauliString& s) {
  return std::all_of(s.begin(), s.end(), [](const PauliLabel& l) { return l.is_identity(); });
}

int weight(const PauliString& s) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), [](const PauliLabel& l) { return !l.is_identity(); }));
}

PauliString identity_string(int N) { return PauliString(static_cast<std::size_t>(N)); }

PauliWord compose_words(const PauliWord& a, const PauliWord& b, int D) {
  if (a.labels.size() != b.labels.size()) throw InvalidArgument("compose_words: length mismatch");
  PauliWord out{PauliString(a.labels.size()), add_phase(a.phase, b.phase, D)};
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    const auto [lab, ph] = compose_labels(a.labels[i], b.labels[i], D);
    out.labels[i] = lab;
    out.phase = add_phase(out.phase, ph, D);
  }
  return out;
}

PauliPhase conjugation_phase(const PauliString& w, const PauliString& p, int D) {
  if (w.size() != p.size()) throw InvalidArgument("conjugation_phase: length mismatch");
  std::int64_t e = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    e += static_cast<std::int64_t>(w[i].k) * p[i].j - static_cast<std::int64_t>(w[i].j) * p[i].k;
  return omega_power(e, D);
}

DenseOperator matrix_of_word(const PauliWord& w, int D, std::size_t dense_limit) {
  DenseOperator m = matrix_of_string(w.labels, D, dense_limit);
  m *= phase_value(w.phase, D);
  return m;
}

namespace {

// Visits the nonzero entries (row, col, value) of a Pauli string's matrix.
template <class F>
void for_each_entry(const PauliString& s, int D, std::size_t dim, F&& f) {
  const std::size_t N = s.size();
  std::vector<int> z(N, 0);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t row = 0;
    std::int64_t e = 0;
    for (std::size_t i = 0; i < N; ++i) {
      row = row * static_cast<std::size_t>(D) + static_cast<std::size_t>((z[i] + s[i].j) % D);
      e += static_cast<std::int64_t>(s[i].k) * z[i];
    }
    f(row, col, e);
    for (std::size_t i = N; i-- > 0;) {
      if (++z[i] < D) break;
      z[i] = 0;
    }
  }
}

std::vector<cplx> omega_table(int D) {
  std::vector<cplx> t(static_cast<std::size_t>(D));
  for (int i = 0; i < D; ++i) t[static_cast<std::size_t>(i)] = phase_value(omega_power(i, D), D);
  return t;
}

}  // namespace

DenseOperator matrix_of_string(const PauliString& s, int D, std::size_t dense_limit) {
  const std::size_t dim = dense_dimension(D, static_cast<int>(s.size()), dense_limit);
  for (const PauliLabel& l : s)
    if (l.j < 0 || l.j >= D || l.k < 0 || l.k >= D) throw InvalidArgument("Pauli label out of range");
  const std::vector<cplx> om = omega_table(D);
  DenseOperator m(dim);
  for_each_entry(s, D, dim, [&](std::size_t r, std::size_t c, std::int64_t e) {
    m(r, c) = om[static_cast<std::size_t>(mod(e, D))];
  });
  return m;
}

SymbolicHamiltonian::SymbolicHamiltonian(int D, int N) : D_(D), N_(N) {
  if (D < 2) throw InvalidArgument("SymbolicHamiltonian: D must be at least 2");
  if (N < 1) throw InvalidArgument("SymbolicHamiltonian: N must be at least 1");
}

void SymbolicHamiltonian::check(const PauliString& s) const {
  if (s.size() != static_cast<std::size_t>(N_)) throw InvalidArgument("Pauli string length does not match N");
  for (const PauliLabel& l : s)
    if (l.j < 0 || l.j >= D_ || l.k < 0 || l.k >= D_) throw InvalidArgument("Pauli label out of range");
}

void SymbolicHamiltonian::add(const PauliString& s, cplx c) {
  check(s);
  terms_[s] += c;
}

void SymbolicHamiltonian::add(const PauliWord& w, cplx c) { add(w.labels, c * phase_value(w.phase, D_)); }

cplx SymbolicHamiltonian::coefficient(const PauliString& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

void SymbolicHamiltonian::set(const PauliString& s, cplx c) {
  check(s);
  terms_[s] = c;
}

double SymbolicHamiltonian::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [s, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void SymbolicHamiltonian::prune(double rel_tol) {
  const double cut = rel_tol * max_abs_coefficient();
  std::erase_if(terms_, [cut](const auto& kv) { return std::abs(kv.second) <= cut; });
}

SymbolicHamiltonian& SymbolicHamiltonian::operator+=(const SymbolicHamiltonian& o) {
  if (o.D_ != D_ || o.N_ != N_) throw InvalidArgument("SymbolicHamiltonian +=: shape mismatch");
  for (const auto& [s, c] : o.terms_) terms_[s] += c;
  return *this;
}

SymbolicHamiltonian& SymbolicHamiltonian::operator-=(const SymbolicHamiltonian& o) {
  if (o.D_ != D_ || o.N_ != N_) throw InvalidArgument("SymbolicHamiltonian -=: shape mismatch");
  for (const auto& [s, c] : o.terms_) terms_[s] -= c;
  return *this;
}

SymbolicHamiltonian& SymbolicHamiltonian::operator*=(cplx s) {
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

cplx SymbolicHamiltonian::identity_coefficient() const { return coefficient(identity_string(N_)); }

SymbolicHamiltonian SymbolicHamiltonian::traceless_part() const {
  SymbolicHamiltonian out = *this;
  out.erase(identity_string(N_));
  return out;
}

SymbolicHamiltonian SymbolicHamiltonian::adjoint() const {
  SymbolicHamiltonian out(D_, N_);
  for (const auto& [s, c] : terms_) {
    PauliString t(s.size());
    std::int64_t e = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      t[i] = make_label(-s[i].j, -s[i].k, D_);
      e += static_cast<std::int64_t>(s[i].j) * s[i].k;
    }
    out.terms_[t] += std::conj(c) * phase_value(omega_power(e, D_), D_);
  }
  return out;
}

double SymbolicHamiltonian::hermiticity_defect() const { return max_coefficient_diff(*this, adjoint()); }

double max_coefficient_diff(const SymbolicHamiltonian& a, const SymbolicHamiltonian& b) {
  double m = 0.0;
  for (const auto& [s, c] : a.terms()) m = std::max(m, std::abs(c - b.coefficient(s)));
  for (const auto& [s, c] : b.terms())
    if (!a.terms().contains(s)) m = std::max(m, std::abs(c));
  return m;
}

SymbolicHamiltonian decompose_operator(const DenseOperator& m, int D, int N) {
  const std::size_t dim = dense_dimension(D, N, m.dim() < kDefaultDenseLimit ? kDefaultDenseLimit : m.dim());
  if (m.dim() != dim) throw InvalidArgument("decompose_operator: matrix dimension is not D^N");
  const std::vector<cplx> om = omega_table(D);
  SymbolicHamiltonian h(D, N);
  const std::size_t nlabels = static_cast<std::size_t>(D) * static_cast<std::size_t>(D);
  std::vector<std::size_t> idx(static_cast<std::size_t>(N), 0);
  PauliString s(static_cast<std::size_t>(N));
  while (true) {
    for (std::size_t i = 0; i < s.size(); ++i)
      s[i] = PauliLabel{static_cast<int>(idx[i] / static_cast<std::size_t>(D)),
                        static_cast<int>(idx[i] % static_cast<std::size_t>(D))};
    cplx tr = 0.0;
    for_each_entry(s, D, dim, [&](std::size_t r, std::size_t c, std::int64_t e) {
      tr += std::conj(om[static_cast<std::size_t>(mod(e, D))]) * m(r, c);
    });
    tr /= static_cast<double>(dim);
    if (std::abs(tr) > 0.0) h.set(s, tr);
    std::size_t i = idx.size();
    while (i-- > 0) {
      if (++idx[i] < nlabels) break;
      idx[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  h.prune();
  return h;
}

DenseOperator reconstruct(const SymbolicHamiltonian& h, std::size_t dense_limit) {
  const std::size_t dim = dense_dimension(h.D(), h.N(), dense_limit);
  const std::vector<cplx> om = omega_table(h.D());
  DenseOperator m(dim);
  for (const auto& [s, c] : h.terms()) {
    for_each_entry(s, h.D(), dim, [&](std::size_t r, std::size_t col, std::int64_t e) {
      m(r, col) += c * om[static_cast<std::size_t>(mod(e, h.D()))];
    });
  }
  return m;
}

SymbolicHamiltonian conjugate_by_pauli_word(const SymbolicHamiltonian& h, const PauliString& w) {
  if (w.size() != static_cast<std::size_t>(h.N())) throw InvalidArgument("conjugate_by_pauli_word: length mismatch");
  SymbolicHamiltonian out(h.D(), h.N());
  for (const auto& [s, c] : h.terms()) out.set(s, c * phase_value(conjugation_phase(w, s, h.D()), h.D()));
  return out;
}

SymbolicHamiltonian twirl(const SymbolicHamiltonian& h, std::span<const PauliString> group) {
  if (group.empty()) throw InvalidArgument("twirl: empty group");
  SymbolicHamiltonian out(h.D(), h.N());
  const double inv = 1.0 / static_cast<double>(group.size());
  for (const auto& [s, c] : h.terms()) {
    cplx acc = 0.0;
    for (const PauliString& g : group) acc += phase_value(conjugation_phase(g, s, h.D()), h.D());
    acc *= inv;
    if (std::abs(acc) > 1e-13) out.set(s, c * acc);
  }
  out.prune();
  return out;
}

double full_pauli_twirl_identity_check(const DenseOperator& j, int D) {
  int N = 0;
  std::size_t dim = 1;
  while (dim < j.dim()) {
    dim *= static_cast<std::size_t>(D);
    ++N;
  }
  if (dim != j.dim() || N == 0) throw InvalidArgument("full_pauli_twirl_identity_check: dimension is not D^N");
  DenseOperator acc(dim);
  const std::size_t nlabels = static_cast<std::size_t>(D) * static_cast<std::size_t>(D);
  std::size_t total = 1;
  for (int i = 0; i < N; ++i) total *= nlabels;
  PauliString s(static_cast<std::size_t>(N));
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = s.size(); i-- > 0;) {
      s[i] = PauliLabel{static_cast<int>((c % nlabels) / static_cast<std::size_t>(D)),
                        static_cast<int>(c % static_cast<std::size_t>(D))};
      c /= nlabels;
    }
    const DenseOperator w = matrix_of_string(s, D, dim);
    acc += w * j * w.adjoint();
  }
  acc -= (static_cast<double>(dim) * j.trace()) * DenseOperator::identity(dim);
  return acc.max_abs();
}

std::vector<PauliLabel> all_labels(int D) {
  std::vector<PauliLabel> out;
  out.reserve(static_cast<std::size_t>(D * D));
  for (int j = 0; j < D; ++j)
    for (int k = 0; k < D; ++k) out.push_back({j, k});
  return out;
}

std::string label_to_string(PauliLabel p) {
  if (p.is_identity()) return "I";
  std::string out;
  if (p.j != 0) out += p.j == 1 ? "X" : "X^" + std::to_string(p.j);
  if (p.k != 0) out += p.k == 1 ? "Z" : "Z^" + std::to_string(p.k);
  return out;
}

std::string string_to_text(const PauliString& s, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += sep;
    out += label_to_string(s[i]);
  }
  return out;
}

}  // namespace hamsim
