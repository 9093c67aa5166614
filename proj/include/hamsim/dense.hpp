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
#include <initializer_list>
#include <span>
#include <vector>

namespace hamsim {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultDenseLimit = 1024;

/// D^N, throwing DenseLimitError when it exceeds `limit`.
std::size_t dense_dimension(int D, int N, std::size_t limit = kDefaultDenseLimit);

/// Square complex matrix, row-major. Qudit 0 is the most significant tensor
/// factor (Kronecker order).
class DenseOperator {
 public:
  DenseOperator() = default;
  explicit DenseOperator(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  DenseOperator(std::initializer_list<std::initializer_list<cplx>> rows);

  static DenseOperator identity(std::size_t dim);
  static DenseOperator diagonal(std::span<const cplx> diag);
  static DenseOperator diagonal(std::span<const double> diag);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }
  cplx* row(std::size_t r) { return data_.data() + r * dim_; }
  const cplx* row(std::size_t r) const { return data_.data() + r * dim_; }

  DenseOperator adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  DenseOperator& operator+=(const DenseOperator& o);
  DenseOperator& operator-=(const DenseOperator& o);
  DenseOperator& operator*=(cplx s);
  /// this += s * o
  void add_scaled(cplx s, const DenseOperator& o);

  friend DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
  friend DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
  friend DenseOperator operator*(cplx s, DenseOperator a) { return a *= s; }
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
  friend bool operator==(const DenseOperator&, const DenseOperator&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

/// Max entrywise |a - b|.
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

/// ||M - M^dagger||_max
double hermiticity_defect(const DenseOperator& m);

/// ||U^dagger U - I||_max
double unitarity_defect(const DenseOperator& u);

/// In-place M <- (I (x) U_q (x) I) M for a D x D gate on qudit q of N.
void apply_local_left(DenseOperator& m, const DenseOperator& u, int qudit, int D, int N);

/// In-place M <- M (I (x) U_q (x) I).
void apply_local_right(DenseOperator& m, const DenseOperator& u, int qudit, int D, int N);

/// I (x) ... (x) U_q (x) ... (x) I as a dense D^N operator.
DenseOperator embed_local(const DenseOperator& u, int qudit, int D, int N);

/// Embeds a D^2 x D^2 operator acting on (q0, q1) into N qudits. q0 is the
/// more significant factor of `u`.
DenseOperator embed_pair(const DenseOperator& u, int q0, int q1, int D, int N);

}  // namespace hamsim
