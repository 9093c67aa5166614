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

#include "hamsim/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hamsim/errors.hpp"
#include "hamsim/kernels.hpp"

namespace hamsim {

std::size_t dense_dimension(int D, int N, std::size_t limit) {
  if (D < 2 || N < 1) throw InvalidArgument("dense_dimension: need D >= 2 and N >= 1");
  std::size_t dim = 1;
  for (int i = 0; i < N; ++i) {
    dim *= static_cast<std::size_t>(D);
    if (dim > limit) {
      throw DenseLimitError("D^N = " + std::to_string(D) + "^" + std::to_string(N) +
                            " exceeds the dense limit " + std::to_string(limit));
    }
  }
  return dim;
}

DenseOperator::DenseOperator(std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()), data_(rows.size() * rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw InvalidArgument("DenseOperator: rows must form a square matrix");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * dim_));
    ++r;
  }
}

DenseOperator DenseOperator::identity(std::size_t dim) {
  DenseOperator m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseOperator DenseOperator::diagonal(std::span<const cplx> diag) {
  DenseOperator m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

DenseOperator DenseOperator::diagonal(std::span<const double> diag) {
  DenseOperator m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx DenseOperator::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DenseOperator::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double DenseOperator::max_abs() const {
  double m = 0.0;
  for (const cplx& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool DenseOperator::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& o) {
  if (o.dim_ != dim_) throw InvalidArgument("DenseOperator +=: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& o) {
  if (o.dim_ != dim_) throw InvalidArgument("DenseOperator -=: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

DenseOperator& DenseOperator::operator*=(cplx s) {
  for (cplx& v : data_) v *= s;
  return *this;
}

void DenseOperator::add_scaled(cplx s, const DenseOperator& o) {
  if (o.dim_ != dim_) throw InvalidArgument("DenseOperator add_scaled: dimension mismatch");
  kernels::caxpy(data_.size(), s, o.data_.data(), data_.data());
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw InvalidArgument("DenseOperator *: dimension mismatch");
  DenseOperator c(a.dim_);
  kernels::cgemm(a.dim_, a.data_.data(), b.data_.data(), c.data_.data());
  return c;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  DenseOperator out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0)) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double hermiticity_defect(const DenseOperator& m) {
  double d = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = r; c < m.dim(); ++c) d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
  return d;
}

double unitarity_defect(const DenseOperator& u) {
  return max_abs_diff(u.adjoint() * u, DenseOperator::identity(u.dim()));
}

namespace {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

void check_local(const DenseOperator& m, const DenseOperator& u, int qudit, int D, int N) {
  if (u.dim() != static_cast<std::size_t>(D)) throw InvalidArgument("local gate must be D x D");
  if (qudit < 0 || qudit >= N) throw InvalidArgument("local gate qudit index out of range");
  if (m.dim() != ipow(D, N)) throw InvalidArgument("operator dimension is not D^N");
}

}  // namespace

void apply_local_left(DenseOperator& m, const DenseOperator& u, int qudit, int D, int N) {
  check_local(m, u, qudit, D, N);
  const std::size_t dim = m.dim();
  const std::size_t stride = ipow(D, N - 1 - qudit);
  const std::size_t block = stride * static_cast<std::size_t>(D);
  DenseOperator out(dim);
  for (std::size_t hi = 0; hi < dim; hi += block)
    for (std::size_t a = 0; a < static_cast<std::size_t>(D); ++a)
      for (std::size_t b = 0; b < static_cast<std::size_t>(D); ++b) {
        const cplx uab = u(a, b);
        if (uab == cplx(0.0)) continue;
        for (std::size_t lo = 0; lo < stride; ++lo)
          kernels::caxpy(dim, uab, m.row(hi + b * stride + lo), out.row(hi + a * stride + lo));
      }
  m = std::move(out);
}

void apply_local_right(DenseOperator& m, const DenseOperator& u, int qudit, int D, int N) {
  check_local(m, u, qudit, D, N);
  const std::size_t dim = m.dim();
  const std::size_t stride = ipow(D, N - 1 - qudit);
  const std::size_t block = stride * static_cast<std::size_t>(D);
  DenseOperator out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const cplx* in = m.row(r);
    cplx* o = out.row(r);
    for (std::size_t hi = 0; hi < dim; hi += block)
      for (std::size_t a = 0; a < static_cast<std::size_t>(D); ++a)
        for (std::size_t b = 0; b < static_cast<std::size_t>(D); ++b) {
          const cplx uba = u(b, a);
          if (uba == cplx(0.0)) continue;
          kernels::caxpy(stride, uba, in + hi + b * stride, o + hi + a * stride);
        }
  }
  m = std::move(out);
}

DenseOperator embed_local(const DenseOperator& u, int qudit, int D, int N) {
  DenseOperator m = DenseOperator::identity(ipow(D, N));
  apply_local_left(m, u, qudit, D, N);
  return m;
}

DenseOperator embed_pair(const DenseOperator& u, int q0, int q1, int D, int N) {
  if (u.dim() != ipow(D, 2)) throw InvalidArgument("embed_pair: operator must be D^2 x D^2");
  if (q0 == q1 || q0 < 0 || q1 < 0 || q0 >= N || q1 >= N) throw InvalidArgument("embed_pair: bad qudit pair");
  const std::size_t dim = ipow(D, N);
  const std::size_t s0 = ipow(D, N - 1 - q0), s1 = ipow(D, N - 1 - q1);
  const auto digit = [D](std::size_t idx, std::size_t stride) { return (idx / stride) % static_cast<std::size_t>(D); };
  DenseOperator out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::size_t r0 = digit(r, s0), r1 = digit(r, s1);
    const std::size_t rest = r - r0 * s0 - r1 * s1;
    for (std::size_t c0 = 0; c0 < static_cast<std::size_t>(D); ++c0)
      for (std::size_t c1 = 0; c1 < static_cast<std::size_t>(D); ++c1) {
        const std::size_t c = rest + c0 * s0 + c1 * s1;
        out(r, c) = u(r0 * static_cast<std::size_t>(D) + r1, c0 * static_cast<std::size_t>(D) + c1);
      }
  }
  return out;
}

}  // namespace hamsim
