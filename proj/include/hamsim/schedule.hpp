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
#include <map>
#include <string>
#include <vector>

#include "hamsim/dense.hpp"
#include "hamsim/local_gate.hpp"

namespace hamsim {

/// One schedule instruction. Durations and local-Hamiltonian times are in
/// units of inverse energy of the resource Hamiltonian (hbar = 1).
struct ScheduleOp {
  enum class Kind {
    Gate,     // instantaneous single-qudit unitary
    Evolve,   // evolve under the resource Hamiltonian
    HEvolve,  // instantaneous exp(-i J duration) for a local Hermitian J
    Call,     // run a block `count` times with its durations scaled
  };
  Kind kind = Kind::Evolve;
  int qudit = 0;
  LocalGate gate;
  double duration = 0.0;
  DenseOperator hamiltonian;
  int block = -1;
  double scale = 1.0;
  std::uint64_t count = 1;

  static ScheduleOp make_gate(int qudit, LocalGate g);
  static ScheduleOp make_evolve(double duration);
  static ScheduleOp make_hevolve(int qudit, double duration, DenseOperator j);
  static ScheduleOp make_call(int block, double scale, std::uint64_t count = 1);
};

struct ScheduleBlock {
  std::vector<ScheduleOp> ops;
};

/// Gate layers and timed evolutions in execution order. The flat form uses
/// only Gate and Evolve in `main`; the structured form shares repeated
/// sub-sequences through blocks.
struct PulseSchedule {
  int D = 2;
  int N = 2;
  double t = 0.0;
  std::uint64_t slices = 1;
  std::vector<ScheduleBlock> blocks;
  std::vector<ScheduleOp> main;
  std::map<std::string, std::string> meta;

  bool is_flat() const { return blocks.empty(); }
  /// Total evolve time under the resource Hamiltonian.
  double wall_clock() const;
  /// Number of primitive ops after full expansion (saturates at UINT64_MAX).
  std::uint64_t flat_size() const;
  /// Expands every call; HEvolve becomes a dense Gate and gates on the same
  /// qudit between two evolutions are merged into one. Throws
  /// InvalidArgument if the result would exceed `max_ops`.
  PulseSchedule flattened(std::uint64_t max_ops = 10'000'000) const;
  /// Structural checks: block references in range and acyclic, non-negative
  /// durations, qudit indices in range, gate dimensions equal D.
  void validate() const;
};

/// Text form:
///   qudit-schedule v1
///   D <int> N <int> t <float> slices <int>
///   meta <key> <value>
///   block <id> ... end
///   gate <qudit> <gate>
///   evolve <duration>
///   hevolve <qudit> <duration> H[re,im,...] (row-major Hermitian)
///   call <block-id> <scale> [count]
std::string emit_schedule(const PulseSchedule& s);
PulseSchedule parse_schedule(const std::string& text);

}  // namespace hamsim
