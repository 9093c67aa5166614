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

#include "hamsim/pauli.hpp"

namespace hamsim {

/// Parses the `qudit-ham v1` format:
///   qudit-ham v1
///   D <int> N <int>
///   term <j1> <k1> ... <jN> <kN> <re> <im>
/// with `#` comments. Throws ParseError (with the line number) on syntax,
/// range or duplicate-term errors, and NotHermitianError naming the first
/// term whose conjugate partner does not match.
SymbolicHamiltonian parse_hamiltonian(const std::string& text);

/// Canonical form: terms in label order, coefficients with 17 significant
/// digits, exact zeros omitted.
std::string emit_hamiltonian(const SymbolicHamiltonian& h);

/// Throws NotHermitianError naming the first mismatched conjugate pair.
void require_hermitian_terms(const SymbolicHamiltonian& h, double tol = 1e-9);

/// Whole file as a string. Throws Error when it cannot be read.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hamsim
