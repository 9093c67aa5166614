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

#include <complex>
#include <cstddef>
#include <string_view>

/// Complex double-precision inner loops used by the dense verifier.
///
/// Every kernel has a portable scalar reference implementation and, on x86-64,
/// an AVX2/FMA variant. The variant is chosen once at startup from CPUID and
/// can be overridden with `set_backend` or the `HAMSIM_KERNELS` environment
/// variable (`scalar` or `avx2`). Both variants accumulate in the same order
/// per output element, so results agree to a few ulps.
namespace hamsim::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

Backend active_backend() noexcept;
bool backend_available(Backend b) noexcept;
/// Returns false (and leaves the backend unchanged) if `b` is not available.
bool set_backend(Backend b) noexcept;
std::string_view backend_name(Backend b) noexcept;

/// c = a * b for square n x n row-major matrices. `c` must not alias a or b.
void cgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) noexcept;

/// y += alpha * x
void caxpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) noexcept;

/// In-place 2x2 mixing of two vectors:
/// x' = g00 x + g01 y ; y' = g10 x + g11 y.
void crot(std::size_t n, cplx* x, cplx* y, cplx g00, cplx g01, cplx g10, cplx g11) noexcept;

// Backend-specific entry points, exposed for equivalence testing.
namespace scalar {
void cgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) noexcept;
void caxpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) noexcept;
void crot(std::size_t n, cplx* x, cplx* y, cplx g00, cplx g01, cplx g10, cplx g11) noexcept;
}  // namespace scalar

namespace avx2 {
void cgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) noexcept;
void caxpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) noexcept;
void crot(std::size_t n, cplx* x, cplx* y, cplx g00, cplx g01, cplx g10, cplx g11) noexcept;
}  // namespace avx2

}  // namespace hamsim::kernels
