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
#include <vector>

#include "hamsim/compiler.hpp"
#include "hamsim/decoupling.hpp"
#include "hamsim/schedule.hpp"

namespace hamsim {

struct NQuditOptions {
  enum class Strategy { Generic, Chain, Partition, Lattice };
  Strategy strategy = Strategy::Generic;
  Partition partition;           // Strategy::Partition
  std::vector<int> lattice_dims; // Strategy::Lattice; rank = size
  bool periodic = false;
  /// Pair carrying the target interaction; inferred from the target's support
  /// when absent.
  std::optional<QuditPair> principal;
  std::uint64_t swap_slices = 256;
  PipelineOptions pipeline;
};

/// "generic", "chain", "partition" or "lattice".
std::string strategy_name(NQuditOptions::Strategy s);

/// Decoupling plan isolating `p` under the chosen strategy. A partition read
/// from a file describes the principal pair only; other pairs use the generic
/// plan.
DecouplingPlan make_plan(const InteractionGraph& g, QuditPair p, const NQuditOptions& opt, bool principal);

/// Copies a two-qudit expression onto qudits (p.first, p.second) of an
/// N-qudit system, replacing every primitive by `primitive_n`.
SimExpr lift_expr(const SimExpr& e2, int N, QuditPair p, const SimExpr& primitive_n);

/// Runs the parts in order, each part once. Repeated parts share blocks. The
/// header (t, slices, meta) comes from `header`.
PulseSchedule sequence_schedules(const std::vector<const PulseSchedule*>& parts, const PulseSchedule& header);

struct SwapStage {
  QuditPair edge;
  DecouplingPlan plan;
  CompilationTrace trace;
  PulseSchedule schedule;
};

struct NQuditResult {
  QuditPair target_pair;  // support of K
  QuditPair host_pair;    // where the relabelled K is compiled
  std::vector<QuditPair> route;
  DecouplingPlan plan;
  CompilationTrace trace;
  SimExpr body;
  std::vector<SwapStage> swaps;
  PulseSchedule schedule;
  std::string summary() const;
};

/// Compiles a target supported on at most two qudits of an N >= 3 system:
/// decouples the host pair, compiles there, and conjugates by SWAP chains
/// when the target pair is not adjacent. Throws NotEntanglingError when the
/// interaction graph is disconnected.
NQuditResult compile_nqudit(const SymbolicHamiltonian& h, const SymbolicHamiltonian& k, double t, std::uint64_t n,
                            const NQuditOptions& opt = {});

}  // namespace hamsim
