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


#include "hamsim/modular.hpp"

#include "hamsim/errors.hpp"

namespace hamsim {

ExtGcdResult ext_gcd(std::int64_t l, std::int64_t m) {
  if (l == 0 && m == 0) throw InvalidArgument("ext_gcd: both arguments are zero");
  std::int64_t old_r = l, r = m;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t gcd_nonneg(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) return 0;
  return ext_gcd(a, b).g;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t d) {
  if (d < 1) throw InvalidArgument("mod_inverse: modulus must be positive");
  const std::int64_t am = mod(a, d);
  if (d == 1) return 0;
  if (am == 0) throw InvalidArgument("mod_inverse: argument not invertible");
  const ExtGcdResult e = ext_gcd(am, d);
  if (e.g != 1) throw InvalidArgument("mod_inverse: argument not coprime to modulus");
  return mod(e.r, d);
}

std::int64_t lemma_witness(std::int64_t j, std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t D) {
  if (D < 1) throw InvalidArgument("lemma_witness: modulus must be positive");
  if (gcd_nonneg(l, m) != 1) throw PreconditionError("lemma_witness: gcd(l, m) != 1");
  if (mod(j * m - k * l, D) != 0) throw PreconditionError("lemma_witness: j*m != k*l (mod D)");
  const ExtGcdResult e = ext_gcd(l, m);
  return mod(mod(j, D) * mod(e.r, D) + mod(k, D) * mod(e.s, D), D);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace hamsim
