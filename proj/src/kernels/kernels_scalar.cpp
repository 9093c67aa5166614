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

#include "hamsim/kernels.hpp"

namespace hamsim::kernels::scalar {

namespace {
// Explicit real arithmetic: std::complex operator* carries NaN recovery
// branches we don't want, and this pins the rounding sequence the AVX2
// variant reproduces.
inline void mul_acc(double ar, double ai, double br, double bi, double& cr, double& ci) {
  cr += ar * br - ai * bi;
  ci += ar * bi + ai * br;
}
}  // namespace

void cgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) noexcept {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[i * n + k].real();
      const double ai = a[i * n + k].imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const cplx* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        double cr = crow[j].real();
        double ci = crow[j].imag();
        mul_acc(ar, ai, brow[j].real(), brow[j].imag(), cr, ci);
        crow[j] = {cr, ci};
      }
    }
  }
}

void caxpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) noexcept {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t j = 0; j < n; ++j) {
    double yr = y[j].real();
    double yi = y[j].imag();
    mul_acc(ar, ai, x[j].real(), x[j].imag(), yr, yi);
    y[j] = {yr, yi};
  }
}

void crot(std::size_t n, cplx* x, cplx* y, cplx g00, cplx g01, cplx g10, cplx g11) noexcept {
  for (std::size_t j = 0; j < n; ++j) {
    const double xr = x[j].real(), xi = x[j].imag();
    const double yr = y[j].real(), yi = y[j].imag();
    double nxr = 0.0, nxi = 0.0, nyr = 0.0, nyi = 0.0;
    mul_acc(g00.real(), g00.imag(), xr, xi, nxr, nxi);
    mul_acc(g01.real(), g01.imag(), yr, yi, nxr, nxi);
    mul_acc(g10.real(), g10.imag(), xr, xi, nyr, nyi);
    mul_acc(g11.real(), g11.imag(), yr, yi, nyr, nyi);
    x[j] = {nxr, nxi};
    y[j] = {nyr, nyi};
  }
}

}  // namespace hamsim::kernels::scalar
