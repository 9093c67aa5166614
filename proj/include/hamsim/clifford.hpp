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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamsim/dense.hpp"
#include "hamsim/pauli.hpp"

namespace hamsim {

/// One single-qudit normalizer generator.
struct CliffordGenerator {
  enum class Kind {
    Fourier,         // F: |j> -> D^{-1/2} sum_k omega^{jk} |k>
    FourierInverse,  // F'
    Phase,           // P: |j> -> omega^{j(j-1)/2}|j> (odd D), omega^{j^2/2}|j> (even D)
    PhaseInverse,    // P'
    Multiplier,      // M(a): |j> -> |aj>
    Pauli,           // W(j,k) = X^j Z^k
    PauliInverse,    // W'(j,k) = (X^j Z^k)^dagger
  };
  Kind kind = Kind::Fourier;
  int a = 0;  // multiplier parameter, or the X exponent of a Pauli factor
  int b = 0;  // Z exponent of a Pauli factor
  friend bool operator==(const CliffordGenerator&, const CliffordGenerator&) = default;
};

/// Image of X and Z under conjugation U (.) U^dagger.
struct LabelAction {
  PauliLabel x_image;
  PauliPhase x_phase;
  PauliLabel z_image;
  PauliPhase z_phase;
};

/// A word in the generators, applied left to right: for "A.B" the unitary
/// is B*A, so A acts first.
class CliffordGate {
 public:
  CliffordGate() = default;
  explicit CliffordGate(int D);
  CliffordGate(int D, std::vector<CliffordGenerator> gens);

  static CliffordGate identity(int D) { return CliffordGate(D); }
  static CliffordGate fourier(int D);
  static CliffordGate fourier_inverse(int D);
  static CliffordGate phase(int D);
  static CliffordGate phase_inverse(int D);
  /// Throws InvalidArgument unless gcd(a, D) == 1.
  static CliffordGate multiplier(int D, int a);
  static CliffordGate pauli(int D, PauliLabel p);

  int D() const { return D_; }
  const std::vector<CliffordGenerator>& generators() const { return gens_; }
  std::size_t length() const { return gens_.size(); }
  bool is_identity_word() const { return gens_.empty(); }

  /// this, then `next`.
  CliffordGate then(const CliffordGate& next) const;
  CliffordGate inverse() const;
  CliffordGate power(int n) const;

  /// Dense unitary.
  DenseOperator matrix() const;
  /// Images of X and Z, with exact phases.
  LabelAction action() const;

  friend bool operator==(const CliffordGate&, const CliffordGate&) = default;

 private:
  int D_ = 2;
  std::vector<CliffordGenerator> gens_;
};

/// Exact image U p U^dagger = phase * X^j' Z^k'.
std::pair<PauliLabel, PauliPhase> act_on_label(const CliffordGate& g, PauliLabel p);

/// Image of a labelled operator under an action summary.
std::pair<PauliLabel, PauliPhase> apply_action(const LabelAction& a, PauliLabel p, int D);

DenseOperator generator_matrix(const CliffordGenerator& g, int D);

struct PegResult {
  CliffordGate gate;
  int gcd = 0;
  /// Intermediate (j, k) pairs, starting with the input and ending at (0, gcd).
  std::vector<PauliLabel> chain;
};

/// A gate U with U X^j Z^k U^dagger proportional to Z^{gcd(j,k)}, built from
/// Euclid's algorithm on (j, k). Throws InvalidArgument for (0, 0).
PegResult peg_reduce(int D, int j, int k);

/// "F.P'.M(3).W(1,0)"; "I" for the empty word.
std::string format_gate(const CliffordGate& g);
/// Inverse of format_gate. Throws InvalidArgument on malformed input.
CliffordGate parse_gate(std::string_view text, int D);

}  // namespace hamsim
