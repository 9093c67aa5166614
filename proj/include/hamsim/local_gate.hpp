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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamsim/clifford.hpp"
#include "hamsim/dense.hpp"

namespace hamsim {

/// A single-qudit unitary: either an exact normalizer word or an arbitrary
/// dense D x D unitary.
class LocalGate {
 public:
  LocalGate() = default;
  LocalGate(CliffordGate g);  // NOLINT(google-explicit-constructor)
  /// Throws InvalidArgument unless `u` is unitary within 1e-9.
  static LocalGate dense(DenseOperator u);
  static LocalGate identity(int D) { return LocalGate(CliffordGate(D)); }

  int D() const;
  bool is_clifford() const { return clifford_.has_value(); }
  const CliffordGate& clifford() const { return *clifford_; }
  bool is_identity() const;

  DenseOperator matrix() const;
  LocalGate inverse() const;
  /// this, then `next` (unitary next * this).
  LocalGate then(const LocalGate& next) const;

  friend bool operator==(const LocalGate&, const LocalGate&) = default;

 private:
  std::optional<CliffordGate> clifford_;
  DenseOperator dense_;
};

/// One gate per qudit, applied simultaneously.
struct GateLayer {
  std::vector<LocalGate> gates;

  static GateLayer identity(int D, int N);
  int N() const { return static_cast<int>(gates.size()); }
  bool is_identity() const;
  GateLayer inverse() const;
  /// this, then `next`.
  GateLayer then(const GateLayer& next) const;
  bool all_clifford() const;
  friend bool operator==(const GateLayer&, const GateLayer&) = default;
};

/// Clifford grammar plus "U[re,im,re,im,...]" for a dense unitary given in
/// row-major order.
std::string format_local_gate(const LocalGate& g);
LocalGate parse_local_gate(std::string_view text, int D);

}  // namespace hamsim
