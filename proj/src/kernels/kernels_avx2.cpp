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

// Compiled with -mavx2 -mfma. Only reached after the dispatcher has confirmed
// CPU support.

#include <immintrin.h>

#include "hamsim/kernels.hpp"

namespace hamsim::kernels::avx2 {

namespace {

// Two interleaved complex numbers per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// alpha * x for a broadcast alpha = (ar, ai).
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d x) {
  const __m256d xs = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xs));
}

inline void tail_mul_acc(cplx alpha, cplx x, cplx& y) {
  const double yr = y.real() + (alpha.real() * x.real() - alpha.imag() * x.imag());
  const double yi = y.imag() + (alpha.real() * x.imag() + alpha.imag() * x.real());
  y = {yr, yi};
}

}  // namespace

void caxpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) noexcept {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    store2(y + j, _mm256_add_pd(load2(y + j), cmul_bcast(ar, ai, load2(x + j))));
  }
  for (; j < n; ++j) tail_mul_acc(alpha, x[j], y[j]);
}

void cgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) noexcept {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
      caxpy(n, aik, b + k * n, crow);
    }
  }
}

void crot(std::size_t n, cplx* x, cplx* y, cplx g00, cplx g01, cplx g10, cplx g11) noexcept {
  const __m256d g00r = _mm256_set1_pd(g00.real()), g00i = _mm256_set1_pd(g00.imag());
  const __m256d g01r = _mm256_set1_pd(g01.real()), g01i = _mm256_set1_pd(g01.imag());
  const __m256d g10r = _mm256_set1_pd(g10.real()), g10i = _mm256_set1_pd(g10.imag());
  const __m256d g11r = _mm256_set1_pd(g11.real()), g11i = _mm256_set1_pd(g11.imag());
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d xv = load2(x + j);
    const __m256d yv = load2(y + j);
    const __m256d nx = _mm256_add_pd(cmul_bcast(g00r, g00i, xv), cmul_bcast(g01r, g01i, yv));
    const __m256d ny = _mm256_add_pd(cmul_bcast(g10r, g10i, xv), cmul_bcast(g11r, g11i, yv));
    store2(x + j, nx);
    store2(y + j, ny);
  }
  for (; j < n; ++j) {
    const cplx xv = x[j], yv = y[j];
    cplx nx = 0.0, ny = 0.0;
    tail_mul_acc(g00, xv, nx);
    tail_mul_acc(g01, yv, nx);
    tail_mul_acc(g10, xv, ny);
    tail_mul_acc(g11, yv, ny);
    x[j] = nx;
    y[j] = ny;
  }
}

}  // namespace hamsim::kernels::avx2
