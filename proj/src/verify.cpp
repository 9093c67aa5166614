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


#include "hamsim/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <unordered_map>

#include "hamsim/errors.hpp"
#include "hamsim/linalg.hpp"

namespace hamsim {

namespace {

struct CacheKey {
  int block;
  std::uint64_t scale_bits;
  bool operator==(const CacheKey&) const = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const noexcept {
    return std::hash<std::uint64_t>()(k.scale_bits * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(k.block));
  }
};

DenseOperator matrix_power(DenseOperator m, std::uint64_t n) {
  DenseOperator r = DenseOperator::identity(m.dim());
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      r = first ? m : m * r;
      first = false;
    }
    n >>= 1;
    if (n > 0) m = m * m;
  }
  return r;
}

class Executor {
 public:
  Executor(const PulseSchedule& s, const DenseOperator& h, const ExecuteOptions& opt)
      : s_(s), opt_(opt), dim_(dense_dimension(s.D, s.N, opt.dense_limit)) {
    s_.validate();
    if (h.dim() != dim_) throw InvalidArgument("execute_schedule: Hamiltonian dimension differs from D^N");
    eig_ = hermitian_eig(h);
    std::vector<std::uint64_t> sites(s.blocks.size(), 0);
    cacheable_.assign(s.blocks.size(), false);
    auto scan = [&](const std::vector<ScheduleOp>& ops) {
      for (const ScheduleOp& op : ops) {
        if (op.kind == ScheduleOp::Kind::Gate) gate_mats_.emplace(&op, op.gate.matrix());
        if (op.kind == ScheduleOp::Kind::HEvolve) local_eigs_.emplace(&op, hermitian_eig(op.hamiltonian));
        if (op.kind == ScheduleOp::Kind::Call) {
          sites[static_cast<std::size_t>(op.block)] += 1;
          if (op.count > 1) cacheable_[static_cast<std::size_t>(op.block)] = true;
        }
      }
    };
    for (const ScheduleBlock& b : s.blocks) scan(b.ops);
    scan(s.main);
    for (std::size_t b = 0; b < sites.size(); ++b)
      if (sites[b] > 1) cacheable_[b] = true;
  }

  DenseOperator run_main() {
    DenseOperator u = DenseOperator::identity(dim_);
    run(s_.main, 1.0, u);
    return u;
  }

 private:
  void run(const std::vector<ScheduleOp>& ops, double scale, DenseOperator& u) {
    for (const ScheduleOp& op : ops) {
      switch (op.kind) {
        case ScheduleOp::Kind::Gate:
          apply_local_left(u, gate_mats_.at(&op), op.qudit, s_.D, s_.N);
          break;
        case ScheduleOp::Kind::Evolve: {
          const double d = op.duration * scale;
          if (d != 0.0) u = expm_from_eig(eig_, d) * u;
          break;
        }
        case ScheduleOp::Kind::HEvolve: {
          const double d = op.duration * scale;
          if (d != 0.0) apply_local_left(u, expm_from_eig(local_eigs_.at(&op), d), op.qudit, s_.D, s_.N);
          break;
        }
        case ScheduleOp::Kind::Call: {
          const double sc = scale * op.scale;
          const std::size_t b = static_cast<std::size_t>(op.block);
          if (cacheable_[b]) {
            const DenseOperator m = block_matrix(op.block, sc);
            u = (op.count == 1 ? m : matrix_power(m, op.count)) * u;
          } else {
            for (std::uint64_t c = 0; c < op.count; ++c) run(s_.blocks[b].ops, sc, u);
          }
          break;
        }
      }
    }
  }

  DenseOperator block_matrix(int block, double scale) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &scale, sizeof bits);
    const CacheKey key{block, bits};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    DenseOperator m = DenseOperator::identity(dim_);
    run(s_.blocks[static_cast<std::size_t>(block)].ops, scale, m);
    const std::size_t bytes = dim_ * dim_ * sizeof(cplx);
    if (cache_used_ + bytes > opt_.cache_bytes) {
      cache_.clear();
      cache_used_ = 0;
    }
    if (bytes <= opt_.cache_bytes) {
      cache_.emplace(key, m);
      cache_used_ += bytes;
    }
    return m;
  }

  const PulseSchedule& s_;
  ExecuteOptions opt_;
  std::size_t dim_;
  EigenSystem eig_;
  std::vector<bool> cacheable_;
  std::unordered_map<const ScheduleOp*, DenseOperator> gate_mats_;
  std::unordered_map<const ScheduleOp*, EigenSystem> local_eigs_;
  std::unordered_map<CacheKey, DenseOperator, CacheKeyHash> cache_;
  std::size_t cache_used_ = 0;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

DenseOperator execute_schedule(const PulseSchedule& s, const DenseOperator& h, const ExecuteOptions& opt) {
  Executor ex(s, h, opt);
  return ex.run_main();
}

DenseOperator execute_schedule(const PulseSchedule& s, const SymbolicHamiltonian& h, const ExecuteOptions& opt) {
  if (h.D() != s.D || h.N() != s.N) throw InvalidArgument("execute_schedule: Hamiltonian shape differs from schedule");
  return execute_schedule(s, reconstruct(h, opt.dense_limit), opt);
}

std::string FidelityReport::to_text() const {
  std::string out;
  out += "distance=" + fmt(distance) + "\n";
  out += "per_slice_error=" + fmt(per_slice_error) + "\n";
  out += "dropped_identity=" + fmt(dropped_identity) + "\n";
  out += "verify_seconds=" + fmt(verify_seconds) + "\n";
  out += "slices=" + std::to_string(slices) + "\n";
  out += "time=" + fmt(time) + "\n";
  out += "resource_time=" + fmt(resource_time) + "\n";
  out += "tolerance=" + fmt(tolerance) + "\n";
  out += std::string("status=") + (passed() ? "pass" : "fail") + "\n";
  return out;
}

FidelityReport verify_schedule(const PulseSchedule& s, const SymbolicHamiltonian& h, const SymbolicHamiltonian& target,
                               double t, double tol, const ExecuteOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  if (target.D() != s.D || target.N() != s.N) throw InvalidArgument("verify_schedule: target shape differs from schedule");
  const DenseOperator u = execute_schedule(s, h, opt);
  const DenseOperator want = expm_hermitian(reconstruct(target, opt.dense_limit), t);
  FidelityReport r;
  r.distance = unitary_distance(u, want);
  r.slices = s.slices;
  r.per_slice_error = r.distance / static_cast<double>(std::max<std::uint64_t>(1, s.slices));
  if (auto it = s.meta.find("dropped_identity"); it != s.meta.end()) r.dropped_identity = std::stod(it->second);
  r.time = t;
  r.resource_time = s.wall_clock();
  r.tolerance = tol;
  r.verify_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<TrotterPoint> trotter_error_scan(const SimExpr& e, const SymbolicHamiltonian& h,
                                             const SymbolicHamiltonian& target, double t,
                                             const std::vector<std::uint64_t>& ns, const ExecuteOptions& opt) {
  const DenseOperator hd = reconstruct(h, opt.dense_limit);
  const DenseOperator want = expm_hermitian(reconstruct(target, opt.dense_limit), t);
  std::vector<TrotterPoint> out;
  for (std::uint64_t n : ns) {
    const PulseSchedule s = lower(e, {n, t});
    out.push_back({n, unitary_distance(execute_schedule(s, hd, opt), want)});
  }
  return out;
}

std::vector<TrotterPoint> trotter_error_scan(const SimExpr& e, const SymbolicHamiltonian& h, double t,
                                             const std::vector<std::uint64_t>& ns, const ExecuteOptions& opt) {
  return trotter_error_scan(e, h, effective_hamiltonian(e, h), t, ns, opt);
}

std::vector<double> convergence_ratios(const std::vector<TrotterPoint>& pts) {
  std::vector<double> r;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) r.push_back(pts[i].error / pts[i + 1].error);
  return r;
}

double fit_first_order_constant(const std::vector<TrotterPoint>& pts, double t) {
  // minimize sum (e_i - C x_i)^2 with x_i = t^2 / n_i
  double sxx = 0.0, sxy = 0.0;
  for (const TrotterPoint& p : pts) {
    const double x = t * t / static_cast<double>(p.n);
    sxx += x * x;
    sxy += x * p.error;
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

}  // namespace hamsim
