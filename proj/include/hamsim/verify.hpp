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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hamsim/dense.hpp"
#include "hamsim/pauli.hpp"
#include "hamsim/schedule.hpp"
#include "hamsim/sim_ir.hpp"

namespace hamsim {

struct ExecuteOptions {
  std::size_t dense_limit = kDefaultDenseLimit;
  /// Upper bound on memoized block unitaries, in bytes.
  std::size_t cache_bytes = std::size_t{256} << 20;
};

/// Ordered product of the schedule's gate layers and resource evolutions.
DenseOperator execute_schedule(const PulseSchedule& s, const SymbolicHamiltonian& h, const ExecuteOptions& opt = {});
DenseOperator execute_schedule(const PulseSchedule& s, const DenseOperator& h, const ExecuteOptions& opt = {});

struct FidelityReport {
  double distance = 0.0;
  double per_slice_error = 0.0;
  double dropped_identity = 0.0;
  double verify_seconds = 0.0;
  std::uint64_t slices = 1;
  double time = 0.0;
  double resource_time = 0.0;
  double tolerance = 0.0;
  bool passed() const { return distance <= tolerance; }
  /// Flat "key=value" lines.
  std::string to_text() const;
};

/// Executes `s` under `h` and compares against exp(-i target t).
FidelityReport verify_schedule(const PulseSchedule& s, const SymbolicHamiltonian& h, const SymbolicHamiltonian& target,
                               double t, double tol, const ExecuteOptions& opt = {});

struct TrotterPoint {
  std::uint64_t n;
  double error;
};

/// Distance between the lowered schedule of e at each n and
/// exp(-i t effective_hamiltonian(e)).
std::vector<TrotterPoint> trotter_error_scan(const SimExpr& e, const SymbolicHamiltonian& h, double t,
                                             const std::vector<std::uint64_t>& ns, const ExecuteOptions& opt = {});

/// Same, against an explicit target Hamiltonian.
std::vector<TrotterPoint> trotter_error_scan(const SimExpr& e, const SymbolicHamiltonian& h,
                                             const SymbolicHamiltonian& target, double t,
                                             const std::vector<std::uint64_t>& ns, const ExecuteOptions& opt = {});

/// error(n_i) / error(n_{i+1}) for consecutive points.
std::vector<double> convergence_ratios(const std::vector<TrotterPoint>& pts);

/// Least-squares C in error ~ C t^2 / n.
double fit_first_order_constant(const std::vector<TrotterPoint>& pts, double t);

}  // namespace hamsim
