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

#include <random>
#include <vector>

#include "hamsim/decoupling.hpp"
#include "support.hpp"

namespace hamsim::testing {

/// Places a two-qudit Hamiltonian on qudits (u, v) of N.
inline void add_on_pair(SymbolicHamiltonian& out, const SymbolicHamiltonian& h2, int u, int v) {
  for (const auto& [s, c] : h2.terms()) {
    PauliString w = identity_string(out.N());
    w[static_cast<std::size_t>(u)] = s[0];
    w[static_cast<std::size_t>(v)] = s[1];
    out.add(w, c);
  }
}

/// Random two-body Hamiltonian with one random Hermitian coupling per edge.
inline SymbolicHamiltonian random_two_body(int D, const InteractionGraph& g, std::mt19937_64& rng) {
  SymbolicHamiltonian h(D, g.size());
  for (const auto& [u, v] : g.edges()) add_on_pair(h, random_hamiltonian(D, 2, rng), u, v);
  h.prune();
  return h;
}

inline InteractionGraph chain_graph(int N) { return lattice_graph({N}); }

}  // namespace hamsim::testing
