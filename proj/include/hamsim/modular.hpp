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

namespace hamsim {

/// r*l + s*m == g with g >= 0.
struct ExtGcdResult {
  std::int64_t g;
  std::int64_t r;
  std::int64_t s;
};

/// Extended Euclid. Throws InvalidArgument when both inputs are zero.
ExtGcdResult ext_gcd(std::int64_t l, std::int64_t m);

/// Non-negative gcd; gcd(0, 0) == 0.
std::int64_t gcd_nonneg(std::int64_t a, std::int64_t b);

/// Representative of x in [0, d).
constexpr std::int64_t mod(std::int64_t x, std::int64_t d) {
  const std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

/// a^{-1} mod d. Throws InvalidArgument unless gcd(a, d) == 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t d);

/// The unique n in [0, D) with n*l == j and n*m == k (mod D), given
/// gcd(l, m) == 1 and j*m == k*l (mod D). Throws PreconditionError naming
/// which hypothesis failed.
std::int64_t lemma_witness(std::int64_t j, std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t D);

bool is_prime(std::int64_t n);

}  // namespace hamsim
