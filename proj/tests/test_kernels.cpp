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


#include <random>
#include <vector>

#include "doctest.h"
#include "hamsim/dense.hpp"
#include "hamsim/kernels.hpp"
#include "hamsim/linalg.hpp"
#include "support.hpp"

using namespace hamsim;
namespace k = hamsim::kernels;

namespace {

std::vector<cplx> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  std::vector<cplx> v(n);
  for (cplx& x : v) x = cplx(nd(rng), nd(rng));
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Textbook triple loop.
std::vector<cplx> naive_gemm(std::size_t n, const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t l = 0; l < n; ++l) s += a[i * n + l] * b[l * n + j];
      c[i * n + j] = s;
    }
  return c;
}

}  // namespace

TEST_CASE("scalar kernels match textbook loops") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 17u, 32u}) {
    const auto a = random_vector(n * n, rng), b = random_vector(n * n, rng);
    std::vector<cplx> c(n * n);
    k::scalar::cgemm(n, a.data(), b.data(), c.data());
    CHECK(max_diff(c, naive_gemm(n, a, b)) < 1e-12 * static_cast<double>(n));

    auto y = random_vector(n, rng);
    const auto x = random_vector(n, rng);
    auto expected = y;
    const cplx alpha(0.3, -1.2);
    for (std::size_t i = 0; i < n; ++i) expected[i] += alpha * x[i];
    k::scalar::caxpy(n, alpha, x.data(), y.data());
    CHECK(max_diff(y, expected) < 1e-14);

    auto u = random_vector(n, rng), v = random_vector(n, rng);
    const auto u0 = u, v0 = v;
    const cplx g00(0.6, 0.1), g01(-0.2, 0.5), g10(0.3, 0.3), g11(0.9, -0.4);
    k::scalar::crot(n, u.data(), v.data(), g00, g01, g10, g11);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(u[i] - (g00 * u0[i] + g01 * v0[i])) < 1e-14);
      CHECK(std::abs(v[i] - (g10 * u0[i] + g11 * v0[i])) < 1e-14);
    }
  }
}

TEST_CASE("avx2 kernels agree with scalar kernels") {
  if (!k::backend_available(k::Backend::Avx2)) {
    MESSAGE("avx2 backend unavailable on this machine; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto a = random_vector(n * n, rng), b = random_vector(n * n, rng);
    std::vector<cplx> cs(n * n), cv(n * n);
    k::scalar::cgemm(n, a.data(), b.data(), cs.data());
    k::avx2::cgemm(n, a.data(), b.data(), cv.data());
    CHECK(max_diff(cs, cv) < 1e-13 * static_cast<double>(n));

    const auto x = random_vector(n, rng);
    auto ys = random_vector(n, rng);
    auto yv = ys;
    k::scalar::caxpy(n, cplx(0.7, 0.2), x.data(), ys.data());
    k::avx2::caxpy(n, cplx(0.7, 0.2), x.data(), yv.data());
    CHECK(max_diff(ys, yv) < 1e-14);

    auto us = random_vector(n, rng), vs = random_vector(n, rng);
    auto uv = us, vv = vs;
    const cplx g00(0.6, 0.1), g01(-0.2, 0.5), g10(0.3, 0.3), g11(0.9, -0.4);
    k::scalar::crot(n, us.data(), vs.data(), g00, g01, g10, g11);
    k::avx2::crot(n, uv.data(), vv.data(), g00, g01, g10, g11);
    CHECK(max_diff(us, uv) < 1e-14);
    CHECK(max_diff(vs, vv) < 1e-14);
  }
}

TEST_CASE("backend switching gives the same dense results") {
  std::mt19937_64 rng(3);
  const DenseOperator m = hamsim::testing::random_hermitian(27, rng);
  const k::Backend original = k::active_backend();
  REQUIRE(k::set_backend(k::Backend::Scalar));
  CHECK(k::active_backend() == k::Backend::Scalar);
  const DenseOperator us = expm_hermitian(m, 0.8);
  const DenseOperator ps = us * m;
  if (k::set_backend(k::Backend::Avx2)) {
    const DenseOperator uv = expm_hermitian(m, 0.8);
    CHECK(max_abs_diff(us, uv) < 1e-12);
    CHECK(max_abs_diff(ps, uv * m) < 1e-11);
  }
  k::set_backend(original);
  CHECK(k::backend_name(k::Backend::Scalar) == "scalar");
  CHECK(k::backend_name(k::Backend::Avx2) == "avx2");
}
