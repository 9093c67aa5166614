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


#include "hamsim/nqudit.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

std::string pair_text(QuditPair p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

std::set<int> support(const SymbolicHamiltonian& k) {
  std::set<int> out;
  for (const auto& [s, c] : k.terms())
    for (std::size_t q = 0; q < s.size(); ++q)
      if (!s[q].is_identity()) out.insert(static_cast<int>(q));
  return out;
}

std::string plan_text(const DecouplingPlan& plan) {
  std::ostringstream os;
  os << plan.strategy << " rounds " << plan.depth();
  for (const auto& r : plan.rounds) {
    os << " {";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "}";
  }
  return os.str();
}

}  // namespace

std::string strategy_name(NQuditOptions::Strategy s) {
  switch (s) {
    case NQuditOptions::Strategy::Generic:
      return "generic";
    case NQuditOptions::Strategy::Chain:
      return "chain";
    case NQuditOptions::Strategy::Partition:
      return "partition";
    case NQuditOptions::Strategy::Lattice:
      return "lattice";
  }
  return "generic";
}

DecouplingPlan make_plan(const InteractionGraph& g, QuditPair p, const NQuditOptions& opt, bool principal) {
  switch (opt.strategy) {
    case NQuditOptions::Strategy::Generic:
      break;
    case NQuditOptions::Strategy::Chain:
      return chain_plan(g, p);
    case NQuditOptions::Strategy::Partition:
      if (principal) return partition_plan(g, opt.partition, p);
      break;
    case NQuditOptions::Strategy::Lattice: {
      const Partition part = lattice_partition(static_cast<int>(opt.lattice_dims.size()), opt.lattice_dims, opt.periodic);
      std::size_t count = 0;
      for (const auto& b : part.blocks) count += b.size();
      if (count != static_cast<std::size_t>(g.size()))
        throw InvalidArgument("lattice extents do not match the number of qudits");
      DecouplingPlan plan = partition_plan(g, part, p);
      plan.strategy = "lattice";
      return plan;
    }
  }
  return generic_recursive_plan(g.size(), p);
}

SimExpr lift_expr(const SimExpr& e2, int N, QuditPair p, const SimExpr& primitive_n) {
  if (e2->N() != 2) throw InvalidArgument("lift_expr: expected a two-qudit expression");
  const int D = e2->D();
  std::unordered_map<const SimNode*, SimExpr> memo;
  std::function<SimExpr(const SimNode*)> go = [&](const SimNode* n) -> SimExpr {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    SimExpr out;
    switch (n->kind()) {
      case SimNode::Kind::Primitive:
        out = primitive_n;
        break;
      case SimNode::Kind::Conj: {
        GateLayer layer = GateLayer::identity(D, N);
        layer.gates[static_cast<std::size_t>(p.first)] = n->layer().gates[0];
        layer.gates[static_cast<std::size_t>(p.second)] = n->layer().gates[1];
        out = conj(layer, go(n->body().get()));
        break;
      }
      case SimNode::Kind::Sum: {
        if (n->terms().empty()) {
          out = zero_expr(D, N);
          break;
        }
        std::vector<std::pair<double, SimExpr>> terms;
        for (const auto& [w, c] : n->terms()) terms.emplace_back(w, go(c.get()));
        out = weighted_sum(std::move(terms));
        break;
      }
      case SimNode::Kind::Local:
        out = local_term(D, N, n->qudit() == 0 ? p.first : p.second, n->local());
        break;
    }
    memo.emplace(n, out);
    return out;
  };
  return go(e2.get());
}

PulseSchedule sequence_schedules(const std::vector<const PulseSchedule*>& parts, const PulseSchedule& header) {
  PulseSchedule out;
  out.D = header.D;
  out.N = header.N;
  out.t = header.t;
  out.slices = header.slices;
  out.meta = header.meta;
  std::map<const PulseSchedule*, int> ids;
  for (const PulseSchedule* part : parts) {
    if (part->D != out.D || part->N != out.N) throw InvalidArgument("sequence_schedules: shape mismatch");
    auto it = ids.find(part);
    if (it == ids.end()) {
      const int offset = static_cast<int>(out.blocks.size());
      auto shift = [offset](std::vector<ScheduleOp> ops) {
        for (ScheduleOp& op : ops)
          if (op.kind == ScheduleOp::Kind::Call) op.block += offset;
        return ops;
      };
      for (const ScheduleBlock& b : part->blocks) out.blocks.push_back(ScheduleBlock{shift(b.ops)});
      out.blocks.push_back(ScheduleBlock{shift(part->main)});
      it = ids.emplace(part, static_cast<int>(out.blocks.size()) - 1).first;
    }
    out.main.push_back(ScheduleOp::make_call(it->second, 1.0));
  }
  return out;
}

std::string NQuditResult::summary() const {
  std::ostringstream os;
  os << "target_pair " << pair_text(target_pair) << "\nhost_pair " << pair_text(host_pair) << "\nroute";
  for (const QuditPair& e : route) os << ' ' << pair_text(e);
  os << "\nplan " << plan_text(plan) << "\n" << trace.summary();
  for (const SwapStage& s : swaps)
    os << "swap " << pair_text(s.edge) << " plan " << plan_text(s.plan) << " leaves " << s.trace.leaves << "\n";
  return os.str();
}

NQuditResult compile_nqudit(const SymbolicHamiltonian& h, const SymbolicHamiltonian& k, double t, std::uint64_t n,
                            const NQuditOptions& opt) {
  const int D = h.D(), N = h.N();
  if (N < 3) throw InvalidArgument("compile_nqudit: need at least three qudits");
  if (k.D() != D || k.N() != N) throw InvalidArgument("compile_nqudit: target shape differs from the resource");
  const InteractionGraph g = interaction_graph(h);
  if (!g.connected()) throw NotEntanglingError("interaction graph of the resource is not connected");

  NQuditResult out;
  const std::set<int> sup = support(k);
  if (opt.principal) {
    out.target_pair = *opt.principal;
    for (int q : sup)
      if (q != out.target_pair.first && q != out.target_pair.second)
        throw InvalidArgument("target acts on qudit " + std::to_string(q) + " outside the principal pair");
  } else if (sup.size() == 2) {
    out.target_pair = {*sup.begin(), *sup.rbegin()};
  } else if (sup.size() == 1) {
    const int q = *sup.begin();
    out.target_pair = {q, g.neighbors(q).front()};
  } else if (sup.empty()) {
    out.target_pair = *g.edges().begin();
  } else {
    throw InvalidArgument("compile_nqudit: target must act on at most two qudits");
  }
  const auto [s, tq] = out.target_pair;
  if (s == tq) throw InvalidArgument("compile_nqudit: principal pair needs two distinct qudits");
  out.route = g.has_edge(s, tq) ? std::vector<QuditPair>{} : route_swap(g, s, tq);
  out.host_pair = out.route.empty() ? out.target_pair : QuditPair{out.route.back().second, tq};

  // K on the target pair, written in host-pair order.
  SymbolicHamiltonian k2 = restrict_to_pair(k, out.target_pair);
  out.plan = make_plan(g, out.host_pair, opt, true);
  const SymbolicHamiltonian h2 = restrict_to_pair(h, out.host_pair);
  CompileResult cr = compile_full(h2, k2, t, n, opt.pipeline);
  out.trace = std::move(cr.trace);
  out.body = lift_expr(cr.expr, N, out.host_pair, plan_expr(out.plan, D));
  PulseSchedule body = lower(out.body, TrotterConfig{n, t});

  std::map<QuditPair, std::size_t> swap_index;
  for (const QuditPair& e : out.route) {
    if (swap_index.count(e)) continue;
    SwapStage st;
    st.edge = e;
    st.plan = make_plan(g, e, opt, false);
    CompileResult sr = compile_full(restrict_to_pair(h, e), swap_generator(D), 1.0, opt.swap_slices, opt.pipeline);
    st.trace = std::move(sr.trace);
    st.schedule = lower(lift_expr(sr.expr, N, e, plan_expr(st.plan, D)), TrotterConfig{opt.swap_slices, 1.0});
    swap_index[e] = out.swaps.size();
    out.swaps.push_back(std::move(st));
  }

  std::vector<const PulseSchedule*> parts;
  for (const QuditPair& e : out.route) parts.push_back(&out.swaps[swap_index[e]].schedule);
  parts.push_back(&body);
  for (auto it = out.route.rbegin(); it != out.route.rend(); ++it) parts.push_back(&out.swaps[swap_index[*it]].schedule);
  PulseSchedule header = body;
  std::ostringstream di;
  di.precision(17);
  di << out.trace.dropped_identity;
  header.meta["dropped_identity"] = di.str();
  header.meta["coupling"] = string_to_text(out.trace.coupling, ",");
  header.meta["host_pair"] = std::to_string(out.host_pair.first) + "," + std::to_string(out.host_pair.second);
  header.meta["strategy"] = out.plan.strategy;
  if (!out.route.empty()) header.meta["swaps"] = std::to_string(2 * out.route.size());
  out.schedule = sequence_schedules(parts, header);
  return out;
}

}  // namespace hamsim
