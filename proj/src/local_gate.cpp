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


#include "hamsim/local_gate.hpp"

#include <charconv>
#include <cstdio>

#include "hamsim/errors.hpp"

namespace hamsim {

LocalGate::LocalGate(CliffordGate g) : clifford_(std::move(g)) {}

LocalGate LocalGate::dense(DenseOperator u) {
  if (u.dim() < 2) throw InvalidArgument("LocalGate::dense: dimension must be at least 2");
  if (!u.all_finite() || unitarity_defect(u) > 1e-9) throw InvalidArgument("LocalGate::dense: matrix is not unitary");
  LocalGate g;
  g.dense_ = std::move(u);
  return g;
}

int LocalGate::D() const { return clifford_ ? clifford_->D() : static_cast<int>(dense_.dim()); }

bool LocalGate::is_identity() const {
  if (clifford_) return clifford_->is_identity_word();
  return max_abs_diff(dense_, DenseOperator::identity(dense_.dim())) == 0.0;
}

DenseOperator LocalGate::matrix() const { return clifford_ ? clifford_->matrix() : dense_; }

LocalGate LocalGate::inverse() const {
  if (clifford_) return LocalGate(clifford_->inverse());
  LocalGate g;
  g.dense_ = dense_.adjoint();
  return g;
}

LocalGate LocalGate::then(const LocalGate& next) const {
  if (next.D() != D()) throw InvalidArgument("LocalGate::then: dimension mismatch");
  if (is_identity()) return next;
  if (next.is_identity()) return *this;
  if (clifford_ && next.clifford_) return LocalGate(clifford_->then(*next.clifford_));
  LocalGate g;
  g.dense_ = next.matrix() * matrix();
  return g;
}

GateLayer GateLayer::identity(int D, int N) {
  return GateLayer{std::vector<LocalGate>(static_cast<std::size_t>(N), LocalGate::identity(D))};
}

bool GateLayer::is_identity() const {
  for (const LocalGate& g : gates)
    if (!g.is_identity()) return false;
  return true;
}

GateLayer GateLayer::inverse() const {
  GateLayer out;
  out.gates.reserve(gates.size());
  for (const LocalGate& g : gates) out.gates.push_back(g.inverse());
  return out;
}

GateLayer GateLayer::then(const GateLayer& next) const {
  if (next.gates.size() != gates.size()) throw InvalidArgument("GateLayer::then: size mismatch");
  GateLayer out;
  out.gates.reserve(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) out.gates.push_back(gates[i].then(next.gates[i]));
  return out;
}

bool GateLayer::all_clifford() const {
  for (const LocalGate& g : gates)
    if (!g.is_clifford()) return false;
  return true;
}

std::string format_local_gate(const LocalGate& g) {
  if (g.is_clifford()) return format_gate(g.clifford());
  const DenseOperator u = g.matrix();
  std::string out = "U[";
  char buf[64];
  bool first = true;
  for (const cplx& v : u.data()) {
    for (double x : {v.real(), v.imag()}) {
      if (!first) out += ',';
      first = false;
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
    }
  }
  out += ']';
  return out;
}

LocalGate parse_local_gate(std::string_view text, int D) {
  if (!text.starts_with("U[")) return LocalGate(parse_gate(text, D));
  if (!text.ends_with("]")) throw InvalidArgument("dense gate is missing ']'");
  std::string_view body = text.substr(2, text.size() - 3);
  std::vector<double> vals;
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    const std::string_view tok = body.substr(0, comma);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("malformed number in dense gate: '" + std::string(tok) + "'");
    }
    vals.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  const std::size_t d = static_cast<std::size_t>(D);
  if (vals.size() != 2 * d * d) throw InvalidArgument("dense gate must list 2*D*D numbers");
  DenseOperator u(d);
  for (std::size_t i = 0; i < d * d; ++i) u.data()[i] = {vals[2 * i], vals[2 * i + 1]};
  return LocalGate::dense(std::move(u));
}

}  // namespace hamsim
