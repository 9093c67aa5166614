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


#include "hamsim/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hamsim/errors.hpp"
#include "hamsim/linalg.hpp"

namespace hamsim {

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> RealMatrix::apply(std::span<const double> x) const {
  if (x.size() != n) throw InvalidArgument("RealMatrix::apply: size mismatch");
  std::vector<double> y(n, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

RealMatrix operator*(const RealMatrix& x, const RealMatrix& y) {
  if (x.n != y.n) throw InvalidArgument("RealMatrix *: size mismatch");
  RealMatrix z(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k)
      for (std::size_t j = 0; j < x.n; ++j) z(i, j) += x(i, k) * y(k, j);
  return z;
}

std::vector<double> sorted_descending(std::span<const double> x) {
  std::vector<double> v(x.begin(), x.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

bool majorizes(std::span<const double> x, std::span<const double> y, double tol) {
  if (x.size() != y.size()) throw InvalidArgument("majorizes: length mismatch");
  const std::vector<double> xs = sorted_descending(x), ys = sorted_descending(y);
  double px = 0.0, py = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    px += xs[i];
    py += ys[i];
    if (px > py + tol) return false;
  }
  return std::abs(px - py) <= tol;
}

RealMatrix doubly_stochastic_map(std::span<const double> x_in, std::span<const double> y_in) {
  if (!majorizes(x_in, y_in)) throw PreconditionError("doubly_stochastic_map: x is not majorized by y");
  const std::vector<double> x = sorted_descending(x_in);
  std::vector<double> z = sorted_descending(y_in);
  const std::size_t n = x.size();
  double scale = 0.0;
  for (double v : z) scale = std::max(scale, std::abs(v));
  const double eps = 1e-13 * std::max(1.0, scale);

  RealMatrix s = RealMatrix::identity(n);
  for (std::size_t step = 0; step < n; ++step) {
    // j: last coordinate where z still exceeds x; k: first later one below x.
    std::size_t j = n;
    for (std::size_t i = n; i-- > 0;) {
      if (x[i] < z[i] - eps) {
        j = i;
        break;
      }
    }
    if (j == n) break;
    std::size_t k = n;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (x[i] > z[i] + eps) {
        k = i;
        break;
      }
    }
    if (k == n) break;
    const double delta = std::min(z[j] - x[j], x[k] - z[k]);
    const double mix = delta / (z[j] - z[k]);  // 1 - lambda
    RealMatrix t = RealMatrix::identity(n);
    t(j, j) = t(k, k) = 1.0 - mix;
    t(j, k) = t(k, j) = mix;
    const double zj = z[j], zk = z[k];
    z[j] = (1.0 - mix) * zj + mix * zk;
    z[k] = mix * zj + (1.0 - mix) * zk;
    s = t * s;
  }
  return s;
}

RealMatrix permutation_matrix(const Permutation& p) {
  RealMatrix m(p.size());
  for (std::size_t r = 0; r < p.size(); ++r) m(r, p[r]) = 1.0;
  return m;
}

namespace {

// Kuhn augmenting-path matching on the rows in [first_row, n) using the
// columns not in `used`.
bool has_perfect_matching(const std::vector<std::vector<bool>>& allowed, std::size_t first_row,
                          const std::vector<bool>& used) {
  const std::size_t n = allowed.size();
  std::vector<std::size_t> match_col(n, n);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t r, std::vector<bool>& seen) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!allowed[r][c] || used[c] || seen[c]) continue;
      seen[c] = true;
      if (match_col[c] == n || augment(match_col[c], seen)) {
        match_col[c] = r;
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = first_row; r < n; ++r) {
    std::vector<bool> seen(n, false);
    if (!augment(r, seen)) return false;
  }
  return true;
}

std::vector<std::vector<bool>> threshold_graph(const RealMatrix& s, double t) {
  std::vector<std::vector<bool>> g(s.n, std::vector<bool>(s.n));
  for (std::size_t r = 0; r < s.n; ++r)
    for (std::size_t c = 0; c < s.n; ++c) g[r][c] = s(r, c) >= t;
  return g;
}

Permutation lexicographic_matching(const std::vector<std::vector<bool>>& allowed) {
  const std::size_t n = allowed.size();
  Permutation p(n);
  std::vector<bool> used(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    bool placed = false;
    for (std::size_t c = 0; c < n && !placed; ++c) {
      if (!allowed[r][c] || used[c]) continue;
      used[c] = true;
      if (has_perfect_matching(allowed, r + 1, used)) {
        p[r] = c;
        placed = true;
      } else {
        used[c] = false;
      }
    }
    if (!placed) throw PreconditionError("birkhoff_decompose: no perfect matching");
  }
  return p;
}

}  // namespace

std::vector<WeightedPermutation> birkhoff_decompose(const RealMatrix& s_in) {
  const std::size_t n = s_in.n;
  if (n == 0) throw InvalidArgument("birkhoff_decompose: empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    double rs = 0.0, cs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (s_in(i, j) < -1e-10) throw InvalidArgument("birkhoff_decompose: negative entry");
      rs += s_in(i, j);
      cs += s_in(j, i);
    }
    if (std::abs(rs - 1.0) > 1e-10 || std::abs(cs - 1.0) > 1e-10) {
      throw InvalidArgument("birkhoff_decompose: matrix is not doubly stochastic");
    }
  }
  constexpr double eps = 1e-12;
  RealMatrix s = s_in;
  for (double& v : s.a)
    if (v < eps) v = 0.0;

  std::vector<WeightedPermutation> out;
  double remaining = 1.0;
  while (remaining > eps && out.size() < n * n) {
    std::vector<double> cands;
    for (double v : s.a)
      if (v > eps) cands.push_back(v);
    if (cands.empty()) break;
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    // Largest threshold still admitting a perfect matching.
    std::size_t lo = 0, hi = cands.size();
    const std::vector<bool> none(n, false);
    if (!has_perfect_matching(threshold_graph(s, cands[0]), 0, none)) break;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (has_perfect_matching(threshold_graph(s, cands[mid]), 0, none)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double w = cands[lo];
    const Permutation p = lexicographic_matching(threshold_graph(s, w));
    for (std::size_t r = 0; r < n; ++r) {
      double& v = s(r, p[r]);
      v -= w;
      if (v < eps) v = 0.0;
    }
    remaining -= w;
    out.push_back({w, p});
  }
  return out;
}

DescendingEig descending_eig(const DenseOperator& h) {
  const EigenSystem es = hermitian_eig(h);
  const std::size_t n = es.values.size();
  DescendingEig out{std::vector<double>(n), DenseOperator(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = es.values[n - 1 - i];
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, i) = es.vectors(r, n - 1 - i);
  }
  return out;
}

UhlmannDecomposition uhlmann_decompose(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("uhlmann_decompose: dimension mismatch");
  const DescendingEig ea = descending_eig(a), eb = descending_eig(b);
  double scale = 1.0;
  for (double v : eb.values) scale = std::max(scale, std::abs(v));
  if (!majorizes(ea.values, eb.values, 1e-10 * scale)) {
    throw PreconditionError("uhlmann_decompose: spectrum of A is not majorized by spectrum of B");
  }
  const RealMatrix s = doubly_stochastic_map(ea.values, eb.values);
  const std::vector<WeightedPermutation> perms = birkhoff_decompose(s);
  const DenseOperator wdag = eb.vectors.adjoint();
  UhlmannDecomposition out;
  for (const WeightedPermutation& wp : perms) {
    // (P lambda_B)_i = lambda_B[perm[i]]: V column i receives W column perm[i].
    DenseOperator u(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const std::size_t src = wp.perm[i];
      for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) u(r, c) += ea.vectors(r, i) * wdag(src, c);
    }
    out.weights.push_back(wp.weight);
    out.unitaries.push_back(std::move(u));
  }
  return out;
}

UhlmannDecomposition traceless_decompose(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("traceless_decompose: dimension mismatch");
  const double bnorm = b.max_abs();
  if (bnorm < 1e-12) throw PreconditionError("traceless_decompose: B is zero");
  if (std::abs(a.trace()) > 1e-10 * std::max(1.0, a.max_abs()) * static_cast<double>(a.dim()) ||
      std::abs(b.trace()) > 1e-10 * std::max(1.0, bnorm) * static_cast<double>(b.dim())) {
    throw PreconditionError("traceless_decompose: inputs must be traceless");
  }
  UhlmannDecomposition out;
  if (a.max_abs() < 1e-14) return out;
  const DescendingEig ea = descending_eig(a), eb = descending_eig(b);
  double c = 0.0, pa = 0.0, pb = 0.0;
  for (std::size_t k = 0; k + 1 < a.dim(); ++k) {
    pa += ea.values[k];
    pb += eb.values[k];
    c = std::max(c, pa / pb);
  }
  if (!(c > 0.0)) return out;
  DenseOperator cb = b;
  cb *= c;
  out = uhlmann_decompose(a, cb);
  out.scale = c;
  for (double& w : out.weights) w *= c;
  return out;
}

double uhlmann_residual(const UhlmannDecomposition& d, const DenseOperator& a, const DenseOperator& b) {
  DenseOperator acc = a;
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc.add_scaled(-d.weights[i], d.unitaries[i] * b * d.unitaries[i].adjoint());
  }
  return op_norm(acc);
}

}  // namespace hamsim
