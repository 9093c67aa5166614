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


#include "hamsim/sim_ir.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_map>

#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

void check_shape(const SimExpr& a, const SimExpr& b) {
  if (a->D() != b->D() || a->N() != b->N()) throw InvalidArgument("SimExpr shape mismatch");
}

}  // namespace

SimExpr primitive(int D, int N) {
  if (D < 2 || N < 1) throw InvalidArgument("primitive: need D >= 2 and N >= 1");
  auto n = std::make_shared<SimNode>();
  n->kind_ = SimNode::Kind::Primitive;
  n->D_ = D;
  n->N_ = N;
  return n;
}

SimExpr conj(const GateLayer& layer, SimExpr body) {
  if (!body) throw InvalidArgument("conj: null body");
  if (layer.N() != body->N()) throw InvalidArgument("conj: layer size differs from N");
  for (const LocalGate& g : layer.gates)
    if (g.D() != body->D()) throw InvalidArgument("conj: gate dimension differs from D");
  if (layer.is_identity()) return body;
  GateLayer combined = layer;
  SimExpr inner = body;
  if (body->kind() == SimNode::Kind::Conj) {
    // U (V X V^dagger) U^dagger: V acts first, then U.
    combined = body->layer().then(layer);
    inner = body->body();
    if (combined.is_identity()) return inner;
  }
  auto n = std::make_shared<SimNode>();
  n->kind_ = SimNode::Kind::Conj;
  n->D_ = body->D();
  n->N_ = body->N();
  n->layer_ = std::move(combined);
  n->body_ = std::move(inner);
  return n;
}

SimExpr conj_pauli(const PauliString& w, SimExpr body) {
  GateLayer layer;
  for (const PauliLabel& l : w)
    layer.gates.push_back(l.is_identity() ? LocalGate::identity(body->D()) : LocalGate(CliffordGate::pauli(body->D(), l)));
  return conj(layer, std::move(body));
}

SimExpr zero_expr(int D, int N) {
  auto n = std::make_shared<SimNode>();
  n->kind_ = SimNode::Kind::Sum;
  n->D_ = D;
  n->N_ = N;
  return n;
}

SimExpr weighted_sum(std::vector<std::pair<double, SimExpr>> terms) {
  if (terms.empty()) throw InvalidArgument("weighted_sum: empty term list");
  const SimExpr& first = terms.front().second;
  if (!first) throw InvalidArgument("weighted_sum: null term");
  std::vector<std::pair<double, SimExpr>> kept;
  for (auto& [w, e] : terms) {
    if (!e) throw InvalidArgument("weighted_sum: null term");
    check_shape(first, e);
    if (!std::isfinite(w)) throw InvalidArgument("weighted_sum: non-finite weight");
    if (w == 0.0) continue;
    if (e->kind() == SimNode::Kind::Sum && e->terms().empty()) continue;
    auto it = std::find_if(kept.begin(), kept.end(), [&](const auto& kv) { return kv.second == e; });
    if (it != kept.end()) {
      it->first += w;
    } else {
      kept.emplace_back(w, e);
    }
  }
  std::erase_if(kept, [](const auto& kv) { return kv.first == 0.0; });
  if (kept.size() == 1 && kept[0].first == 1.0) return kept[0].second;
  auto n = std::make_shared<SimNode>();
  n->kind_ = SimNode::Kind::Sum;
  n->D_ = first->D();
  n->N_ = first->N();
  n->terms_ = std::move(kept);
  return n;
}

SimExpr scaled(double w, SimExpr e) { return weighted_sum({{w, std::move(e)}}); }

SimExpr local_term(int D, int N, int qudit, DenseOperator j) {
  if (qudit < 0 || qudit >= N) throw InvalidArgument("local_term: qudit out of range");
  if (j.dim() != static_cast<std::size_t>(D)) throw InvalidArgument("local_term: J must be D x D");
  if (hermiticity_defect(j) > 1e-10 * std::max(1.0, j.max_abs())) throw NotHermitianError("local_term: J is not Hermitian");
  auto n = std::make_shared<SimNode>();
  n->kind_ = SimNode::Kind::Local;
  n->D_ = D;
  n->N_ = N;
  n->qudit_ = qudit;
  n->local_ = std::move(j);
  return n;
}

SimExpr negate(SimExpr e) {
  const int D = e->D(), N = e->N();
  const std::size_t nlabels = static_cast<std::size_t>(D) * static_cast<std::size_t>(D);
  std::size_t total = 1;
  for (int i = 0; i < N; ++i) total *= nlabels;
  std::vector<std::pair<double, SimExpr>> terms;
  terms.reserve(total - 1);
  PauliString w(static_cast<std::size_t>(N));
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = w.size(); i-- > 0;) {
      w[i] = PauliLabel{static_cast<int>((c % nlabels) / static_cast<std::size_t>(D)),
                        static_cast<int>(c % static_cast<std::size_t>(D))};
      c /= nlabels;
    }
    terms.emplace_back(1.0, conj_pauli(w, e));
  }
  return weighted_sum(std::move(terms));
}

SymbolicHamiltonian conjugate_by_layer(const SymbolicHamiltonian& h, const GateLayer& layer) {
  if (layer.N() != h.N()) throw InvalidArgument("conjugate_by_layer: layer size differs from N");
  const int D = h.D();
  if (layer.all_clifford()) {
    std::vector<LabelAction> actions;
    for (const LocalGate& g : layer.gates) actions.push_back(g.clifford().action());
    SymbolicHamiltonian out(D, h.N());
    for (const auto& [s, c] : h.terms()) {
      PauliString img(s.size());
      PauliPhase ph{};
      for (std::size_t i = 0; i < s.size(); ++i) {
        const auto [lab, p] = apply_action(actions[i], s[i], D);
        img[i] = lab;
        ph = add_phase(ph, p, D);
      }
      out.add(img, c * phase_value(ph, D));
    }
    out.prune();
    return out;
  }
  DenseOperator m = reconstruct(h);
  for (int q = 0; q < h.N(); ++q) {
    const LocalGate& g = layer.gates[static_cast<std::size_t>(q)];
    if (g.is_identity()) continue;
    const DenseOperator u = g.matrix();
    apply_local_left(m, u, q, D, h.N());
    apply_local_right(m, u.adjoint(), q, D, h.N());
  }
  return decompose_operator(m, D, h.N());
}

SymbolicHamiltonian effective_hamiltonian(const SimExpr& e, const SymbolicHamiltonian& h) {
  if (h.D() != e->D() || h.N() != e->N()) throw InvalidArgument("effective_hamiltonian: shape mismatch");
  std::unordered_map<const SimNode*, SymbolicHamiltonian> memo;
  std::function<const SymbolicHamiltonian&(const SimNode*)> eval = [&](const SimNode* n) -> const SymbolicHamiltonian& {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    SymbolicHamiltonian out(n->D(), n->N());
    switch (n->kind()) {
      case SimNode::Kind::Primitive:
        out = h;
        break;
      case SimNode::Kind::Conj:
        out = conjugate_by_layer(eval(n->body().get()), n->layer());
        break;
      case SimNode::Kind::Sum:
        for (const auto& [w, c] : n->terms()) {
          SymbolicHamiltonian part = eval(c.get());
          part *= w;
          out += part;
        }
        out.prune();
        break;
      case SimNode::Kind::Local: {
        const SymbolicHamiltonian one = decompose_operator(n->local(), n->D(), 1);
        for (const auto& [s, c] : one.terms()) {
          PauliString full = identity_string(n->N());
          full[static_cast<std::size_t>(n->qudit())] = s[0];
          out.add(full, c);
        }
        break;
      }
    }
    return memo.emplace(n, std::move(out)).first->second;
  };
  return eval(e.get());
}

double cost(const SimExpr& e) {
  std::unordered_map<const SimNode*, double> memo;
  std::function<double(const SimNode*)> eval = [&](const SimNode* n) -> double {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    double c = 0.0;
    switch (n->kind()) {
      case SimNode::Kind::Primitive: c = 1.0; break;
      case SimNode::Kind::Conj: c = eval(n->body().get()); break;
      case SimNode::Kind::Sum:
        for (const auto& [w, t] : n->terms()) c += std::abs(w) * eval(t.get());
        break;
      case SimNode::Kind::Local: c = 0.0; break;
    }
    memo[n] = c;
    return c;
  };
  return eval(e.get());
}

std::uint64_t leaf_count(const SimExpr& e) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::unordered_map<const SimNode*, std::uint64_t> memo;
  std::function<std::uint64_t(const SimNode*)> eval = [&](const SimNode* n) -> std::uint64_t {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::uint64_t c = 0;
    switch (n->kind()) {
      case SimNode::Kind::Primitive: c = 1; break;
      case SimNode::Kind::Conj: c = eval(n->body().get()); break;
      case SimNode::Kind::Sum:
        for (const auto& [w, t] : n->terms()) {
          const std::uint64_t x = eval(t.get());
          c = c > kMax - x ? kMax : c + x;
        }
        break;
      case SimNode::Kind::Local: c = 0; break;
    }
    memo[n] = c;
    return c;
  };
  return eval(e.get());
}

std::size_t node_count(const SimExpr& e) {
  std::unordered_map<const SimNode*, bool> seen;
  std::function<void(const SimNode*)> visit = [&](const SimNode* n) {
    if (!seen.emplace(n, true).second) return;
    if (n->kind() == SimNode::Kind::Conj) visit(n->body().get());
    if (n->kind() == SimNode::Kind::Sum)
      for (const auto& kv : n->terms()) visit(kv.second.get());
  };
  visit(e.get());
  return seen.size();
}

PulseSchedule lower(const SimExpr& e, const TrotterConfig& cfg) {
  if (cfg.n < 1) throw InvalidArgument("lower: slice count must be at least 1");
  if (!(cfg.t >= 0.0)) throw InvalidArgument("lower: total time must be non-negative");
  PulseSchedule s;
  s.D = e->D();
  s.N = e->N();
  s.t = cfg.t;
  s.slices = cfg.n;
  std::unordered_map<const SimNode*, int> ids;
  std::function<int(const SimNode*)> emit = [&](const SimNode* n) -> int {
    if (auto it = ids.find(n); it != ids.end()) return it->second;
    std::vector<ScheduleOp> ops;
    switch (n->kind()) {
      case SimNode::Kind::Primitive:
        ops.push_back(ScheduleOp::make_evolve(1.0));
        break;
      case SimNode::Kind::Local:
        ops.push_back(ScheduleOp::make_hevolve(n->qudit(), 1.0, n->local()));
        break;
      case SimNode::Kind::Conj: {
        const int child = emit(n->body().get());
        const GateLayer& layer = n->layer();
        for (int q = 0; q < n->N(); ++q) {
          const LocalGate& g = layer.gates[static_cast<std::size_t>(q)];
          if (!g.is_identity()) ops.push_back(ScheduleOp::make_gate(q, g.inverse()));
        }
        ops.push_back(ScheduleOp::make_call(child, 1.0));
        for (int q = 0; q < n->N(); ++q) {
          const LocalGate& g = layer.gates[static_cast<std::size_t>(q)];
          if (!g.is_identity()) ops.push_back(ScheduleOp::make_gate(q, g));
        }
        break;
      }
      case SimNode::Kind::Sum:
        for (const auto& [w, c] : n->terms()) {
          if (w < 0.0) throw PreconditionError("lower: negative weight; lower the negation first");
          ops.push_back(ScheduleOp::make_call(emit(c.get()), w));
        }
        break;
    }
    const int id = static_cast<int>(s.blocks.size());
    s.blocks.push_back(ScheduleBlock{std::move(ops)});
    ids[n] = id;
    return id;
  };
  const int root = emit(e.get());
  if (cfg.t > 0.0) s.main.push_back(ScheduleOp::make_call(root, cfg.t / static_cast<double>(cfg.n), cfg.n));
  return s;
}

}  // namespace hamsim
