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


#include "hamsim/decoupling.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

QuditPair ordered(int u, int v) { return u < v ? QuditPair{u, v} : QuditPair{v, u}; }

void check_pair(int N, QuditPair p) {
  if (p.first == p.second || p.first < 0 || p.second < 0 || p.first >= N || p.second >= N)
    throw InvalidArgument("principal pair (" + std::to_string(p.first) + "," + std::to_string(p.second) +
                          ") is not a pair of distinct qudits below " + std::to_string(N));
}

std::vector<int> complement(int N, QuditPair p) {
  std::vector<int> s;
  for (int q = 0; q < N; ++q)
    if (q != p.first && q != p.second) s.push_back(q);
  return s;
}

std::vector<PauliString> ditwise_group(int D, int N, const std::vector<int>& subset) {
  std::vector<PauliString> g;
  for (const PauliLabel& u : all_labels(D)) {
    PauliString s = identity_string(N);
    for (int q : subset) s[static_cast<std::size_t>(q)] = u;
    g.push_back(std::move(s));
  }
  return g;
}

std::vector<int> unravel(int index, const std::vector<int>& dims) {
  std::vector<int> c(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    c[i] = index % dims[i];
    index /= dims[i];
  }
  return c;
}

int ravel(const std::vector<int>& c, const std::vector<int>& dims) {
  int idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + c[i];
  return idx;
}

int lattice_size(const std::vector<int>& dims) {
  if (dims.empty()) throw InvalidArgument("lattice: need at least one extent");
  int n = 1;
  for (int d : dims) {
    if (d < 1) throw InvalidArgument("lattice: extents must be positive");
    n *= d;
  }
  return n;
}

}  // namespace

void InteractionGraph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidArgument("InteractionGraph: bad edge");
  edges_.insert(ordered(u, v));
}

bool InteractionGraph::has_edge(int u, int v) const { return edges_.count(ordered(u, v)) > 0; }

std::vector<int> InteractionGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool InteractionGraph::connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        queue.push_back(w);
      }
  }
  return count == n_;
}

InteractionGraph interaction_graph(const SymbolicHamiltonian& h) {
  InteractionGraph g(h.N());
  for (const auto& [s, c] : h.terms()) {
    std::vector<int> support;
    for (std::size_t q = 0; q < s.size(); ++q)
      if (!s[q].is_identity()) support.push_back(static_cast<int>(q));
    if (support.size() > 2) throw InvalidArgument("interaction_graph: term " + string_to_text(s) + " acts on more than two qudits");
    if (support.size() == 2) g.add_edge(support[0], support[1]);
  }
  return g;
}

InteractionGraph lattice_graph(const std::vector<int>& dims, bool periodic) {
  const int n = lattice_size(dims);
  if (periodic)
    for (int d : dims)
      if (d % 2 != 0) throw InvalidArgument("lattice_graph: periodic boundaries need even extents");
  InteractionGraph g(n);
  for (int i = 0; i < n; ++i) {
    const std::vector<int> c = unravel(i, dims);
    for (std::size_t axis = 0; axis < dims.size(); ++axis) {
      std::vector<int> nb = c;
      if (c[axis] + 1 < dims[axis]) {
        ++nb[axis];
      } else if (periodic) {
        nb[axis] = 0;
      } else {
        continue;
      }
      g.add_edge(i, ravel(nb, dims));
    }
  }
  return g;
}

Partition lattice_partition(int r, const std::vector<int>& dims, bool periodic) {
  if (r < 1 || static_cast<std::size_t>(r) != dims.size())
    throw InvalidArgument("lattice_partition: rank must equal the number of extents");
  const int n = lattice_size(dims);
  if (periodic)
    for (int d : dims)
      if (d % 2 != 0) throw InvalidArgument("lattice_partition: periodic boundaries need even extents");
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    const std::vector<int> c = unravel(i, dims);
    int key = 0;
    for (std::size_t axis = 0; axis < dims.size(); ++axis) key |= (c[axis] & 1) << axis;
    classes[key].push_back(i);
  }
  Partition p;
  for (auto& [key, block] : classes) p.blocks.push_back(std::move(block));
  return p;
}

std::uint64_t DecouplingPlan::flattened_count(int D) const {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < rounds.size(); ++i) c *= static_cast<std::uint64_t>(D) * static_cast<std::uint64_t>(D);
  return c;
}

DecouplingPlan generic_recursive_plan(int N, QuditPair p) {
  if (N < 3) throw InvalidArgument("generic_recursive_plan: need N >= 3");
  check_pair(N, p);
  DecouplingPlan plan{N, p, {}, "generic"};
  const std::vector<int> s = complement(N, p);
  plan.rounds.push_back(s);
  std::vector<std::vector<int>> blocks{s};
  while (std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() > 1; })) {
    std::vector<std::vector<int>> next;
    std::vector<int> round;
    for (const auto& b : blocks) {
      if (b.size() == 1) {
        next.push_back(b);
        continue;
      }
      const auto half = static_cast<std::ptrdiff_t>((b.size() + 1) / 2);
      std::vector<int> first(b.begin(), b.begin() + half), second(b.begin() + half, b.end());
      round.insert(round.end(), first.begin(), first.end());
      next.push_back(std::move(first));
      next.push_back(std::move(second));
    }
    std::sort(round.begin(), round.end());
    plan.rounds.push_back(std::move(round));
    blocks = std::move(next);
  }
  return plan;
}

DecouplingPlan partition_plan(const InteractionGraph& g, const Partition& partition, QuditPair p) {
  const int N = g.size();
  check_pair(N, p);
  DecouplingPlan plan{N, p, {}, "partition"};
  std::vector<int> owner(static_cast<std::size_t>(N), -1);
  for (std::size_t bi = 0; bi < partition.blocks.size(); ++bi) {
    std::vector<int> block;
    for (int q : partition.blocks[bi]) {
      if (q < 0 || q >= N) throw InvalidArgument("partition_plan: qudit " + std::to_string(q) + " out of range");
      if (q == p.first || q == p.second) continue;
      if (owner[static_cast<std::size_t>(q)] >= 0)
        throw InvalidArgument("partition_plan: qudit " + std::to_string(q) + " appears in two blocks");
      owner[static_cast<std::size_t>(q)] = static_cast<int>(plan.rounds.size());
      block.push_back(q);
    }
    if (block.empty()) continue;
    std::sort(block.begin(), block.end());
    plan.rounds.push_back(std::move(block));
  }
  for (int q : complement(N, p))
    if (owner[static_cast<std::size_t>(q)] < 0)
      throw InvalidArgument("partition_plan: qudit " + std::to_string(q) + " is in no block");
  for (const auto& [u, v] : g.edges()) {
    const int ou = owner[static_cast<std::size_t>(u)], ov = owner[static_cast<std::size_t>(v)];
    if (ou >= 0 && ou == ov)
      throw PreconditionError("partition_plan: edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is internal to a block");
  }
  return plan;
}

DecouplingPlan chain_plan(const InteractionGraph& g, QuditPair p) {
  const int N = g.size();
  if (N < 3) throw InvalidArgument("chain_plan: need N >= 3");
  check_pair(N, p);
  for (const auto& [u, v] : g.edges())
    if (v != u + 1)
      throw PreconditionError("chain_plan: edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is not nearest-neighbour");
  const QuditPair q = ordered(p.first, p.second);
  if (q.second != q.first + 1) throw PreconditionError("chain_plan: principal pair is not adjacent on the chain");
  DecouplingPlan plan{N, p, {}, "chain"};
  std::vector<int> cut;
  if (q.first > 0) cut.push_back(q.first - 1);
  if (q.second + 1 < N) cut.push_back(q.second + 1);
  plan.rounds.push_back(cut);
  const std::vector<int> s = complement(N, p);
  plan.rounds.push_back(s);
  std::vector<int> alternate;
  for (int v : s)
    if ((v - q.second - 1) % 2 == 0) alternate.push_back(v);
  plan.rounds.push_back(alternate);
  return plan;
}

DecoupledHamiltonian apply_plan(const SymbolicHamiltonian& h, const DecouplingPlan& plan) {
  if (h.N() != plan.N) throw InvalidArgument("apply_plan: plan and Hamiltonian sizes differ");
  DecoupledHamiltonian out{h, 1.0};
  for (const auto& round : plan.rounds) {
    const std::vector<PauliString> group = ditwise_group(h.D(), h.N(), round);
    out.hamiltonian = twirl(out.hamiltonian, group);
  }
  return out;
}

SimExpr plan_expr(const DecouplingPlan& plan, int D) {
  SimExpr e = primitive(D, plan.N);
  const double w = 1.0 / (static_cast<double>(D) * D);
  for (const auto& round : plan.rounds) {
    std::vector<std::pair<double, SimExpr>> terms;
    for (const PauliString& g : ditwise_group(D, plan.N, round)) terms.emplace_back(w, conj_pauli(g, e));
    e = weighted_sum(std::move(terms));
  }
  return e;
}

SymbolicHamiltonian restrict_to_pair(const SymbolicHamiltonian& h, QuditPair p) {
  check_pair(h.N(), p);
  SymbolicHamiltonian out(h.D(), 2);
  for (const auto& [s, c] : h.terms()) {
    bool inside = true;
    for (std::size_t q = 0; q < s.size(); ++q)
      if (!s[q].is_identity() && static_cast<int>(q) != p.first && static_cast<int>(q) != p.second) inside = false;
    if (!inside) continue;
    out.add({s[static_cast<std::size_t>(p.first)], s[static_cast<std::size_t>(p.second)]}, c);
  }
  return out;
}

std::vector<int> shortest_path(const InteractionGraph& g, int s, int t) {
  const int N = g.size();
  if (s < 0 || t < 0 || s >= N || t >= N) throw InvalidArgument("shortest_path: vertex out of range");
  std::vector<int> parent(static_cast<std::size_t>(N), -2);
  parent[static_cast<std::size_t>(s)] = -1;
  std::deque<int> queue{s};
  while (!queue.empty() && parent[static_cast<std::size_t>(t)] == -2) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v))
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
  }
  if (parent[static_cast<std::size_t>(t)] == -2)
    throw NotEntanglingError("no path from qudit " + std::to_string(s) + " to qudit " + std::to_string(t) +
                             " in the interaction graph");
  std::vector<int> path;
  for (int v = t; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<QuditPair> route_swap(const InteractionGraph& g, int s, int t) {
  if (s == t) throw InvalidArgument("route_swap: endpoints coincide");
  const std::vector<int> path = shortest_path(g, s, t);
  std::vector<QuditPair> chain;
  for (std::size_t i = 0; i + 2 < path.size(); ++i) chain.emplace_back(path[i], path[i + 1]);
  return chain;
}

}  // namespace hamsim
