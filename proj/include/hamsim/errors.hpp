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

#include <stdexcept>
#include <string>

namespace hamsim {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad argument: out-of-range label, wrong dimension, malformed input value.
struct InvalidArgument : Error {
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

/// D^N exceeds the configured dense limit.
struct DenseLimitError : Error {
  using Error::Error;
};

/// Hamiltonian has no genuine two-body coupling (or its coupling graph is
/// disconnected where connectivity is required).
struct NotEntanglingError : Error {
  using Error::Error;
};

/// Input operator was required to be Hermitian and is not.
struct NotHermitianError : Error {
  using Error::Error;
};

/// Text input did not conform to its grammar. `line` is 1-based, 0 if unknown.
struct ParseError : Error {
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  int line;
};

}  // namespace hamsim
