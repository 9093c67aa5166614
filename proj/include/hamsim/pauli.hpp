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

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamsim/dense.hpp"

namespace hamsim {

/// Exponent of the exact phase e^{i pi numerator / D}, i.e. a power of
/// omega^{1/2} with omega = e^{2 pi i / D}. Always reduced into [0, 2D).
struct PauliPhase {
  int numerator = 0;
  friend bool operator==(const PauliPhase&, const PauliPhase&) = default;
};

PauliPhase make_phase(std::int64_t numerator, int D);
/// omega^{power} as an exact phase.
PauliPhase omega_power(std::int64_t power, int D);
PauliPhase add_phase(PauliPhase a, PauliPhase b, int D);
cplx phase_value(PauliPhase p, int D);

/// X^j Z^k with 0 <= j, k < D.
struct PauliLabel {
  int j = 0;
  int k = 0;
  bool is_identity() const { return j == 0 && k == 0; }
  friend auto operator<=>(const PauliLabel&, const PauliLabel&) = default;
};

PauliLabel make_label(std::int64_t j, std::int64_t k, int D);

/// (X^{jp} Z^{kp})(X^{jq} Z^{kq}) = omega^{kp jq} X^{jp+jq} Z^{kp+kq}.
std::pair<PauliLabel, PauliPhase> compose_labels(PauliLabel p, PauliLabel q, int D);

/// The phase c with p q = c q p, namely omega^{kp jq - jp kq}.
PauliPhase commutation_phase(PauliLabel p, PauliLabel q, int D);

/// The phase c with w p w^dagger = c p, namely omega^{kw jp - jw kp}.
PauliPhase conjugation_phase(PauliLabel w, PauliLabel p, int D);

/// (X^j Z^k)^dagger = omega^{jk} X^{-j} Z^{-k}.
std::pair<PauliLabel, PauliPhase> adjoint_label(PauliLabel p, int D);

/// The D x D matrix of X^j Z^k: X|z> = |z+1>, Z|z> = omega^z |z>.
DenseOperator label_matrix(PauliLabel p, int D);

using PauliString = std::vector<PauliLabel>;

bool is_identity(const PauliString& s);
/// Number of non-identity factors.
int weight(const PauliString& s);
PauliString identity_string(int N);

/// A phase-tracked tensor product of labels.
struct PauliWord {
  PauliString labels;
  PauliPhase phase;
  friend bool operator==(const PauliWord&, const PauliWord&) = default;
};

PauliWord compose_words(const PauliWord& a, const PauliWord& b, int D);
/// Phase c with w p w^dagger = c p for N-qudit strings.
PauliPhase conjugation_phase(const PauliString& w, const PauliString& p, int D);

/// Kronecker product of label matrices times the phase. Qudit 0 is the most
/// significant factor.
DenseOperator matrix_of_word(const PauliWord& w, int D, std::size_t dense_limit = kDefaultDenseLimit);
DenseOperator matrix_of_string(const PauliString& s, int D, std::size_t dense_limit = kDefaultDenseLimit);

inline constexpr double kPruneTolerance = 1e-12;

/// Sparse Pauli expansion sum_w c_w w of an operator on N qudits. The phase of
/// each word is folded into its coefficient.
class SymbolicHamiltonian {
 public:
  using TermMap = std::map<PauliString, cplx>;

  SymbolicHamiltonian() = default;
  SymbolicHamiltonian(int D, int N);

  int D() const { return D_; }
  int N() const { return N_; }
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Accumulates c into the coefficient of `s` (validated).
  void add(const PauliString& s, cplx c);
  void add(const PauliWord& w, cplx c);
  cplx coefficient(const PauliString& s) const;
  void set(const PauliString& s, cplx c);
  void erase(const PauliString& s) { terms_.erase(s); }

  double max_abs_coefficient() const;
  /// Drops coefficients with |c| <= rel_tol * max |c|.
  void prune(double rel_tol = kPruneTolerance);

  SymbolicHamiltonian& operator+=(const SymbolicHamiltonian& o);
  SymbolicHamiltonian& operator-=(const SymbolicHamiltonian& o);
  SymbolicHamiltonian& operator*=(cplx s);
  friend SymbolicHamiltonian operator+(SymbolicHamiltonian a, const SymbolicHamiltonian& b) { return a += b; }
  friend SymbolicHamiltonian operator-(SymbolicHamiltonian a, const SymbolicHamiltonian& b) { return a -= b; }
  friend SymbolicHamiltonian operator*(cplx s, SymbolicHamiltonian a) { return a *= s; }

  /// Coefficient of the identity string.
  cplx identity_coefficient() const;
  /// Copy without the identity term.
  SymbolicHamiltonian traceless_part() const;
  SymbolicHamiltonian adjoint() const;
  /// Max coefficient gap between this and its adjoint.
  double hermiticity_defect() const;

 private:
  void check(const PauliString& s) const;

  int D_ = 2;
  int N_ = 1;
  TermMap terms_;
};

/// Max coefficient difference over the union of supports.
double max_coefficient_diff(const SymbolicHamiltonian& a, const SymbolicHamiltonian& b);

/// Coefficients r_w = tr(w^dagger M) / D^N for every string.
SymbolicHamiltonian decompose_operator(const DenseOperator& m, int D, int N);

DenseOperator reconstruct(const SymbolicHamiltonian& h, std::size_t dense_limit = kDefaultDenseLimit);

/// w H w^dagger.
SymbolicHamiltonian conjugate_by_pauli_word(const SymbolicHamiltonian& h, const PauliString& w);

/// (1/|group|) sum_g g H g^dagger.
SymbolicHamiltonian twirl(const SymbolicHamiltonian& h, std::span<const PauliString> group);

/// ||sum_w w J w^dagger - D^N tr(J) I||_max over all D^{2N} strings w, where
/// J acts on N qudits.
double full_pauli_twirl_identity_check(const DenseOperator& j, int D);

/// All D^2 single-qudit labels in (j, k) lexicographic order.
std::vector<PauliLabel> all_labels(int D);

/// "X^2Z" style rendering of a label; "I" for the identity.
std::string label_to_string(PauliLabel p);
std::string string_to_text(const PauliString& s, std::string_view sep = " (x) ");

}  // namespace hamsim
