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


#include "hamsim/schedule.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "hamsim/errors.hpp"
#include "hamsim/linalg.hpp"

namespace hamsim {

ScheduleOp ScheduleOp::make_gate(int qudit, LocalGate g) {
  ScheduleOp op;
  op.kind = Kind::Gate;
  op.qudit = qudit;
  op.gate = std::move(g);
  return op;
}

ScheduleOp ScheduleOp::make_evolve(double duration) {
  ScheduleOp op;
  op.kind = Kind::Evolve;
  op.duration = duration;
  return op;
}

ScheduleOp ScheduleOp::make_hevolve(int qudit, double duration, DenseOperator j) {
  ScheduleOp op;
  op.kind = Kind::HEvolve;
  op.qudit = qudit;
  op.duration = duration;
  op.hamiltonian = std::move(j);
  return op;
}

ScheduleOp ScheduleOp::make_call(int block, double scale, std::uint64_t count) {
  ScheduleOp op;
  op.kind = Kind::Call;
  op.block = block;
  op.scale = scale;
  op.count = count;
  return op;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_hermitian(const DenseOperator& j) {
  std::string out = "H[";
  bool first = true;
  for (const cplx& v : j.data()) {
    for (double x : {v.real(), v.imag()}) {
      if (!first) out += ',';
      first = false;
      out += fmt_double(x);
    }
  }
  return out + "]";
}

}  // namespace

double PulseSchedule::wall_clock() const {
  std::vector<double> memo(blocks.size(), -1.0);
  std::function<double(const std::vector<ScheduleOp>&)> ops_time = [&](const std::vector<ScheduleOp>& ops) {
    double t_acc = 0.0;
    for (const ScheduleOp& op : ops) {
      if (op.kind == ScheduleOp::Kind::Evolve) t_acc += op.duration;
      if (op.kind == ScheduleOp::Kind::Call) {
        double& m = memo.at(static_cast<std::size_t>(op.block));
        if (m < 0.0) m = ops_time(blocks[static_cast<std::size_t>(op.block)].ops);
        t_acc += m * op.scale * static_cast<double>(op.count);
      }
    }
    return t_acc;
  };
  return ops_time(main);
}

std::uint64_t PulseSchedule::flat_size() const {
  std::vector<std::uint64_t> memo(blocks.size(), kSaturated);
  std::vector<bool> done(blocks.size(), false);
  std::function<std::uint64_t(const std::vector<ScheduleOp>&)> size_of = [&](const std::vector<ScheduleOp>& ops) {
    std::uint64_t n = 0;
    for (const ScheduleOp& op : ops) {
      if (op.kind != ScheduleOp::Kind::Call) {
        n = sat_add(n, 1);
        continue;
      }
      const std::size_t b = static_cast<std::size_t>(op.block);
      if (!done.at(b)) {
        memo[b] = size_of(blocks[b].ops);
        done[b] = true;
      }
      n = sat_add(n, sat_mul(memo[b], op.count));
    }
    return n;
  };
  return size_of(main);
}

PulseSchedule PulseSchedule::flattened(std::uint64_t max_ops) const {
  validate();
  if (flat_size() > max_ops) {
    throw InvalidArgument("schedule expands to more than " + std::to_string(max_ops) + " flat operations");
  }
  PulseSchedule out;
  out.D = D;
  out.N = N;
  out.t = t;
  out.slices = slices;
  out.meta = meta;
  // Gates between two evolutions merge per qudit.
  std::vector<std::optional<LocalGate>> pending(static_cast<std::size_t>(N));
  auto push_gate = [&](int q, const LocalGate& g) {
    auto& p = pending[static_cast<std::size_t>(q)];
    p = p ? p->then(g) : g;
  };
  auto flush = [&]() {
    for (int q = 0; q < N; ++q) {
      auto& p = pending[static_cast<std::size_t>(q)];
      if (p && !p->is_identity()) out.main.push_back(ScheduleOp::make_gate(q, *p));
      p.reset();
    }
  };
  std::function<void(const std::vector<ScheduleOp>&, double)> expand = [&](const std::vector<ScheduleOp>& ops,
                                                                           double scale) {
    for (const ScheduleOp& op : ops) {
      switch (op.kind) {
        case ScheduleOp::Kind::Gate:
          push_gate(op.qudit, op.gate);
          break;
        case ScheduleOp::Kind::Evolve:
          flush();
          out.main.push_back(ScheduleOp::make_evolve(op.duration * scale));
          break;
        case ScheduleOp::Kind::HEvolve:
          push_gate(op.qudit, LocalGate::dense(expm_hermitian(op.hamiltonian, op.duration * scale)));
          break;
        case ScheduleOp::Kind::Call:
          for (std::uint64_t c = 0; c < op.count; ++c)
            expand(blocks[static_cast<std::size_t>(op.block)].ops, scale * op.scale);
          break;
      }
    }
  };
  expand(main, 1.0);
  flush();
  return out;
}

void PulseSchedule::validate() const {
  if (D < 2 || N < 1) throw InvalidArgument("schedule: need D >= 2 and N >= 1");
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(blocks.size(), 0);
  std::function<void(const std::vector<ScheduleOp>&)> check = [&](const std::vector<ScheduleOp>& ops) {
    for (const ScheduleOp& op : ops) {
      switch (op.kind) {
        case ScheduleOp::Kind::Gate:
          if (op.qudit < 0 || op.qudit >= N) throw InvalidArgument("schedule: gate qudit out of range");
          if (op.gate.D() != D) throw InvalidArgument("schedule: gate dimension differs from D");
          break;
        case ScheduleOp::Kind::Evolve:
          if (!(op.duration >= 0.0)) throw InvalidArgument("schedule: negative evolve duration");
          break;
        case ScheduleOp::Kind::HEvolve:
          if (op.qudit < 0 || op.qudit >= N) throw InvalidArgument("schedule: hevolve qudit out of range");
          if (op.hamiltonian.dim() != static_cast<std::size_t>(D)) {
            throw InvalidArgument("schedule: hevolve Hamiltonian must be D x D");
          }
          if (hermiticity_defect(op.hamiltonian) > 1e-9) throw InvalidArgument("schedule: hevolve Hamiltonian is not Hermitian");
          break;
        case ScheduleOp::Kind::Call: {
          if (op.block < 0 || static_cast<std::size_t>(op.block) >= blocks.size()) {
            throw InvalidArgument("schedule: call to unknown block " + std::to_string(op.block));
          }
          if (!(op.scale >= 0.0)) throw InvalidArgument("schedule: negative call scale");
          int& st = state[static_cast<std::size_t>(op.block)];
          if (st == 1) throw InvalidArgument("schedule: recursive block " + std::to_string(op.block));
          if (st == 0) {
            st = 1;
            check(blocks[static_cast<std::size_t>(op.block)].ops);
            st = 2;
          }
          break;
        }
      }
    }
  };
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (state[b] == 0) {
      state[b] = 1;
      check(blocks[b].ops);
      state[b] = 2;
    }
  }
  check(main);
}

namespace {

void emit_ops(std::ostringstream& os, const std::vector<ScheduleOp>& ops) {
  for (const ScheduleOp& op : ops) {
    switch (op.kind) {
      case ScheduleOp::Kind::Gate:
        os << "gate " << op.qudit << ' ' << format_local_gate(op.gate) << '\n';
        break;
      case ScheduleOp::Kind::Evolve:
        os << "evolve " << fmt_double(op.duration) << '\n';
        break;
      case ScheduleOp::Kind::HEvolve:
        os << "hevolve " << op.qudit << ' ' << fmt_double(op.duration) << ' ' << format_hermitian(op.hamiltonian) << '\n';
        break;
      case ScheduleOp::Kind::Call:
        os << "call " << op.block << ' ' << fmt_double(op.scale);
        if (op.count != 1) os << ' ' << op.count;
        os << '\n';
        break;
    }
  }
}

}  // namespace

std::string emit_schedule(const PulseSchedule& s) {
  std::ostringstream os;
  os << "qudit-schedule v1\n";
  os << "D " << s.D << " N " << s.N << " t " << fmt_double(s.t) << " slices " << s.slices << '\n';
  for (const auto& [k, v] : s.meta) {
    const auto bad = [](const std::string& x) {
      return x.empty() || x.find_first_of(" \t\r\n#") != std::string::npos;
    };
    if (bad(k) || bad(v)) throw InvalidArgument("emit_schedule: meta keys and values must be single tokens");
    os << "meta " << k << ' ' << v << '\n';
  }
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    os << "block " << b << '\n';
    emit_ops(os, s.blocks[b].ops);
    os << "end\n";
  }
  emit_ops(os, s.main);
  return os.str();
}

namespace {

struct LineReader {
  std::vector<std::string> tokens;
  int line = 0;
};

double to_double(const std::string& s, int line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("malformed number '" + s + "'", line);
  return v;
}

long long to_int(const std::string& s, int line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("malformed integer '" + s + "'", line);
  return v;
}

DenseOperator parse_hermitian(const std::string& s, int D, int line) {
  if (s.size() < 3 || s.rfind("H[", 0) != 0 || s.back() != ']') throw ParseError("expected H[...]", line);
  std::vector<double> vals;
  std::string body = s.substr(2, s.size() - 3);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    vals.push_back(to_double(body.substr(pos, comma - pos), line));
    pos = comma + 1;
  }
  const std::size_t d = static_cast<std::size_t>(D);
  if (vals.size() != 2 * d * d) throw ParseError("hevolve Hamiltonian must list 2*D*D numbers", line);
  DenseOperator j(d);
  for (std::size_t i = 0; i < d * d; ++i) j.data()[i] = {vals[2 * i], vals[2 * i + 1]};
  return j;
}

}  // namespace

PulseSchedule parse_schedule(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::vector<LineReader> lines;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    LineReader lr;
    lr.line = line_no;
    for (std::string tok; ls >> tok;) lr.tokens.push_back(tok);
    if (!lr.tokens.empty()) lines.push_back(std::move(lr));
  }
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"qudit-schedule", "v1"}) {
    throw ParseError("missing 'qudit-schedule v1' header", lines.empty() ? 1 : lines[0].line);
  }
  if (lines.size() < 2) throw ParseError("missing dimension line", lines[0].line);
  const LineReader& hdr = lines[1];
  if (hdr.tokens.size() != 8 || hdr.tokens[0] != "D" || hdr.tokens[2] != "N" || hdr.tokens[4] != "t" ||
      hdr.tokens[6] != "slices") {
    throw ParseError("expected 'D <int> N <int> t <float> slices <int>'", hdr.line);
  }
  PulseSchedule s;
  s.D = static_cast<int>(to_int(hdr.tokens[1], hdr.line));
  s.N = static_cast<int>(to_int(hdr.tokens[3], hdr.line));
  s.t = to_double(hdr.tokens[5], hdr.line);
  const long long slices = to_int(hdr.tokens[7], hdr.line);
  if (s.D < 2 || s.N < 1 || slices < 1) throw ParseError("D >= 2, N >= 1 and slices >= 1 required", hdr.line);
  s.slices = static_cast<std::uint64_t>(slices);

  std::vector<ScheduleOp>* target = &s.main;
  bool in_block = false;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& tk = lines[i].tokens;
    const int ln = lines[i].line;
    const std::string& kw = tk[0];
    try {
      if (kw == "meta") {
        if (tk.size() != 3) throw ParseError("expected 'meta <key> <value>'", ln);
        s.meta[tk[1]] = tk[2];
      } else if (kw == "block") {
        if (tk.size() != 2 || in_block) throw ParseError("malformed or nested block", ln);
        if (to_int(tk[1], ln) != static_cast<long long>(s.blocks.size())) {
          throw ParseError("blocks must be numbered consecutively from 0", ln);
        }
        s.blocks.emplace_back();
        target = &s.blocks.back().ops;
        in_block = true;
      } else if (kw == "end") {
        if (tk.size() != 1 || !in_block) throw ParseError("unmatched 'end'", ln);
        target = &s.main;
        in_block = false;
      } else if (kw == "gate") {
        if (tk.size() != 3) throw ParseError("expected 'gate <qudit> <gate>'", ln);
        target->push_back(ScheduleOp::make_gate(static_cast<int>(to_int(tk[1], ln)), parse_local_gate(tk[2], s.D)));
      } else if (kw == "evolve") {
        if (tk.size() != 2) throw ParseError("expected 'evolve <duration>'", ln);
        target->push_back(ScheduleOp::make_evolve(to_double(tk[1], ln)));
      } else if (kw == "hevolve") {
        if (tk.size() != 4) throw ParseError("expected 'hevolve <qudit> <duration> H[...]'", ln);
        target->push_back(ScheduleOp::make_hevolve(static_cast<int>(to_int(tk[1], ln)), to_double(tk[2], ln),
                                                   parse_hermitian(tk[3], s.D, ln)));
      } else if (kw == "call") {
        if (tk.size() != 3 && tk.size() != 4) throw ParseError("expected 'call <block> <scale> [count]'", ln);
        const long long count = tk.size() == 4 ? to_int(tk[3], ln) : 1;
        if (count < 0) throw ParseError("negative call count", ln);
        target->push_back(ScheduleOp::make_call(static_cast<int>(to_int(tk[1], ln)), to_double(tk[2], ln),
                                                static_cast<std::uint64_t>(count)));
      } else {
        throw ParseError("unknown keyword '" + kw + "'", ln);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), ln);
    }
  }
  if (in_block) throw ParseError("unterminated block", lines.back().line);
  try {
    s.validate();
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
  return s;
}

}  // namespace hamsim
