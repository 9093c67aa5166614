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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "hamsim/kernels.hpp"

namespace hamsim::kernels {

#ifndef HAMSIM_HAVE_AVX2
// Stubs so the symbols exist on builds without the AVX2 translation unit;
// backend_available() keeps them unreachable.
namespace avx2 {
void cgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) noexcept { scalar::cgemm(n, a, b, c); }
void caxpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) noexcept { scalar::caxpy(n, alpha, x, y); }
void crot(std::size_t n, cplx* x, cplx* y, cplx g00, cplx g01, cplx g10, cplx g11) noexcept {
  scalar::crot(n, x, y, g00, g01, g10, g11);
}
}  // namespace avx2
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(HAMSIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() noexcept {
  const bool avx2 = cpu_has_avx2();
  if (const char* env = std::getenv("HAMSIM_KERNELS")) {
    const std::string_view v(env);
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2" && avx2) return Backend::Avx2;
  }
  return avx2 ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& backend_slot() noexcept {
  static std::atomic<Backend> slot{initial_backend()};
  return slot;
}

}  // namespace

Backend active_backend() noexcept { return backend_slot().load(std::memory_order_relaxed); }

bool backend_available(Backend b) noexcept { return b == Backend::Scalar || cpu_has_avx2(); }

bool set_backend(Backend b) noexcept {
  if (!backend_available(b)) return false;
  backend_slot().store(b, std::memory_order_relaxed);
  return true;
}

std::string_view backend_name(Backend b) noexcept { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void cgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) noexcept {
  if (active_backend() == Backend::Avx2) {
    avx2::cgemm(n, a, b, c);
  } else {
    scalar::cgemm(n, a, b, c);
  }
}

void caxpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) noexcept {
  if (active_backend() == Backend::Avx2) {
    avx2::caxpy(n, alpha, x, y);
  } else {
    scalar::caxpy(n, alpha, x, y);
  }
}

void crot(std::size_t n, cplx* x, cplx* y, cplx g00, cplx g01, cplx g10, cplx g11) noexcept {
  if (active_backend() == Backend::Avx2) {
    avx2::crot(n, x, y, g00, g01, g10, g11);
  } else {
    scalar::crot(n, x, y, g00, g01, g10, g11);
  }
}

}  // namespace hamsim::kernels
