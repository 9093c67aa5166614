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


#include "hamsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hamsim/errors.hpp"
#include "hamsim/kernels.hpp"

namespace hamsim {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const DenseOperator& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eig(const DenseOperator& m, double hermitian_tol) {
  const std::size_t n = m.dim();
  if (hermiticity_defect(m) > hermitian_tol * std::max(1.0, m.max_abs())) {
    throw NotHermitianError("hermitian_eig: input is not Hermitian");
  }
  DenseOperator a = m;
  // vt holds V transposed so column rotations of V become row rotations.
  DenseOperator vt = DenseOperator::identity(n);
  const double threshold = 1e-12 * std::max(1.0, m.frobenius_norm());

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const cplx ph = apq / r;  // e^{i phi}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx phc = std::conj(ph);
        // A <- A J, columns p and q.
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * phc * aiq;
          a(i, q) = s * aip + c * phc * aiq;
        }
        // A <- J^dagger A, rows p and q.
        kernels::crot(n, a.row(p), a.row(q), c, -s * ph, s, c * ph);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        kernels::crot(n, vt.row(p), vt.row(q), c, -s * phc, s, c * phc);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenSystem es{std::vector<double>(n), DenseOperator(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    es.values[k] = a(src, src).real();
    const cplx* col = vt.row(src);
    cplx phase = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(col[i]) > 1e-8) {
        phase = std::conj(col[i]) / std::abs(col[i]);
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = col[i] * phase;
  }
  return es;
}

DenseOperator expm_from_eig(const EigenSystem& es, double t) {
  const std::size_t n = es.values.size();
  DenseOperator scaled = es.vectors;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) scaled(r, c) *= std::polar(1.0, -es.values[c] * t);
  return scaled * es.vectors.adjoint();
}

DenseOperator expm_hermitian(const DenseOperator& h, double t) { return expm_from_eig(hermitian_eig(h), t); }

double op_norm(const DenseOperator& m) {
  if (m.dim() == 0) return 0.0;
  const DenseOperator g = m.adjoint() * m;
  // Symmetrize away roundoff before the Hermitian solve.
  const DenseOperator h = 0.5 * (g + g.adjoint());
  return std::sqrt(std::max(0.0, hermitian_eig(h).values.back()));
}

double unitary_distance(const DenseOperator& u, const DenseOperator& v) {
  if (u.dim() != v.dim()) throw InvalidArgument("unitary_distance: dimension mismatch");
  const cplx tr = (u.adjoint() * v).trace();
  const cplx phase = std::abs(tr) > 1e-300 ? std::conj(tr) / std::abs(tr) : cplx(1.0);
  DenseOperator diff = u;
  diff.add_scaled(-phase, v);
  return op_norm(diff);
}

std::vector<cplx> solve_linear(const DenseOperator& a_in, std::vector<cplx> b) {
  const std::size_t n = a_in.dim();
  if (b.size() != n) throw InvalidArgument("solve_linear: size mismatch");
  DenseOperator a = a_in;
  const double scale = std::max(1e-300, a.max_abs());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) < 1e-13 * scale) throw PreconditionError("solve_linear: singular matrix");
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = a(i, k) / a(k, k);
      if (f == cplx(0.0)) continue;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      b[i] -= f * b[k];
    }
  }
  std::vector<cplx> x(n);
  for (std::size_t i = n; i-- > 0;) {
    cplx s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * x[c];
    x[i] = s / a(i, i);
  }
  return x;
}

}  // namespace hamsim
