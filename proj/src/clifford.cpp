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


#include "hamsim/clifford.hpp"

#include <charconv>
#include <cmath>

#include "hamsim/errors.hpp"
#include "hamsim/modular.hpp"

namespace hamsim {

namespace {

using Kind = CliffordGenerator::Kind;

LabelAction generator_action(const CliffordGenerator& g, int D) {
  const PauliLabel X{1, 0}, Z{0, 1};
  switch (g.kind) {
    case Kind::Fourier:
      return {{0, 1}, {}, make_label(-1, 0, D), {}};
    case Kind::FourierInverse:
      return {make_label(0, -1, D), {}, {1, 0}, {}};
    case Kind::Phase:
      return {make_label(1, 1, D), make_phase(D % 2 == 0 ? 1 : 0, D), Z, {}};
    case Kind::PhaseInverse:
      return {make_label(1, -1, D), make_phase(D % 2 == 0 ? -1 : 0, D), Z, {}};
    case Kind::Multiplier:
      return {make_label(g.a, 0, D), {}, make_label(0, mod_inverse(g.a, D), D), {}};
    case Kind::Pauli: {
      const PauliLabel w{g.a, g.b};
      return {X, conjugation_phase(w, X, D), Z, conjugation_phase(w, Z, D)};
    }
    case Kind::PauliInverse: {
      const PauliLabel w{g.a, g.b};
      return {X, make_phase(-conjugation_phase(w, X, D).numerator, D), Z,
              make_phase(-conjugation_phase(w, Z, D).numerator, D)};
    }
  }
  throw InvalidArgument("unknown Clifford generator");
}

// (phase * label)^n for n >= 0.
std::pair<PauliLabel, PauliPhase> label_power(PauliLabel l, PauliPhase ph, int n, int D) {
  std::pair<PauliLabel, PauliPhase> acc{{0, 0}, {}};
  for (int i = 0; i < n; ++i) {
    const auto [lab, p] = compose_labels(acc.first, l, D);
    acc.first = lab;
    acc.second = add_phase(add_phase(acc.second, p, D), ph, D);
  }
  return acc;
}

void validate(const CliffordGenerator& g, int D) {
  if (g.kind == Kind::Multiplier) {
    if (gcd_nonneg(mod(g.a, D), D) != 1) {
      throw InvalidArgument("multiplier parameter " + std::to_string(g.a) + " is not coprime to D=" +
                            std::to_string(D));
    }
  }
  if (g.kind == Kind::Pauli || g.kind == Kind::PauliInverse) {
    if (g.a < 0 || g.a >= D || g.b < 0 || g.b >= D) throw InvalidArgument("Pauli gate label out of range");
  }
}

CliffordGenerator normalized(CliffordGenerator g, int D) {
  if (g.kind == Kind::Multiplier) g.a = static_cast<int>(mod(g.a, D));
  return g;
}

}  // namespace

std::pair<PauliLabel, PauliPhase> apply_action(const LabelAction& a, PauliLabel p, int D) {
  const auto [xl, xp] = label_power(a.x_image, a.x_phase, p.j, D);
  const auto [zl, zp] = label_power(a.z_image, a.z_phase, p.k, D);
  const auto [lab, ph] = compose_labels(xl, zl, D);
  return {lab, add_phase(add_phase(xp, zp, D), ph, D)};
}

CliffordGate::CliffordGate(int D) : D_(D) {
  if (D < 2) throw InvalidArgument("CliffordGate: D must be at least 2");
}

CliffordGate::CliffordGate(int D, std::vector<CliffordGenerator> gens) : CliffordGate(D) {
  gens_.reserve(gens.size());
  for (const CliffordGenerator& g : gens) {
    validate(g, D);
    gens_.push_back(normalized(g, D));
  }
}

CliffordGate CliffordGate::fourier(int D) { return CliffordGate(D, {{Kind::Fourier, 0, 0}}); }
CliffordGate CliffordGate::fourier_inverse(int D) { return CliffordGate(D, {{Kind::FourierInverse, 0, 0}}); }
CliffordGate CliffordGate::phase(int D) { return CliffordGate(D, {{Kind::Phase, 0, 0}}); }
CliffordGate CliffordGate::phase_inverse(int D) { return CliffordGate(D, {{Kind::PhaseInverse, 0, 0}}); }
CliffordGate CliffordGate::multiplier(int D, int a) { return CliffordGate(D, {{Kind::Multiplier, a, 0}}); }
CliffordGate CliffordGate::pauli(int D, PauliLabel p) {
  const PauliLabel q = make_label(p.j, p.k, D);
  return CliffordGate(D, {{Kind::Pauli, q.j, q.k}});
}

CliffordGate CliffordGate::then(const CliffordGate& next) const {
  if (next.D_ != D_) throw InvalidArgument("CliffordGate::then: dimension mismatch");
  CliffordGate out = *this;
  out.gens_.insert(out.gens_.end(), next.gens_.begin(), next.gens_.end());
  return out;
}

CliffordGate CliffordGate::inverse() const {
  CliffordGate out(D_);
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) {
    CliffordGenerator g = *it;
    switch (g.kind) {
      case Kind::Fourier: g.kind = Kind::FourierInverse; break;
      case Kind::FourierInverse: g.kind = Kind::Fourier; break;
      case Kind::Phase: g.kind = Kind::PhaseInverse; break;
      case Kind::PhaseInverse: g.kind = Kind::Phase; break;
      case Kind::Multiplier: g.a = static_cast<int>(mod_inverse(g.a, D_)); break;
      case Kind::Pauli: g.kind = Kind::PauliInverse; break;
      case Kind::PauliInverse: g.kind = Kind::Pauli; break;
    }
    out.gens_.push_back(g);
  }
  return out;
}

CliffordGate CliffordGate::power(int n) const {
  const CliffordGate base = n < 0 ? inverse() : *this;
  CliffordGate out(D_);
  for (int i = 0; i < std::abs(n); ++i) out = out.then(base);
  return out;
}

DenseOperator generator_matrix(const CliffordGenerator& g, int D) {
  const std::size_t d = static_cast<std::size_t>(D);
  DenseOperator m(d);
  switch (g.kind) {
    case Kind::Fourier:
    case Kind::FourierInverse: {
      const double norm = 1.0 / std::sqrt(static_cast<double>(D));
      const int sign = g.kind == Kind::Fourier ? 1 : -1;
      for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c)
          m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
              norm * phase_value(omega_power(static_cast<std::int64_t>(sign) * r * c, D), D);
      return m;
    }
    case Kind::Phase:
    case Kind::PhaseInverse: {
      const int sign = g.kind == Kind::Phase ? 1 : -1;
      for (int j = 0; j < D; ++j) {
        // Half-power numerators: j^2 (even D) or j(j-1) (odd D), in units of omega^{1/2}.
        const std::int64_t half = D % 2 == 0 ? static_cast<std::int64_t>(j) * j : static_cast<std::int64_t>(j) * (j - 1);
        m(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = phase_value(make_phase(sign * half, D), D);
      }
      return m;
    }
    case Kind::Multiplier:
      for (int j = 0; j < D; ++j)
        m(static_cast<std::size_t>(mod(static_cast<std::int64_t>(g.a) * j, D)), static_cast<std::size_t>(j)) = 1.0;
      return m;
    case Kind::Pauli:
      return label_matrix({g.a, g.b}, D);
    case Kind::PauliInverse:
      return label_matrix({g.a, g.b}, D).adjoint();
  }
  throw InvalidArgument("unknown Clifford generator");
}

DenseOperator CliffordGate::matrix() const {
  DenseOperator u = DenseOperator::identity(static_cast<std::size_t>(D_));
  for (const CliffordGenerator& g : gens_) u = generator_matrix(g, D_) * u;
  return u;
}

LabelAction CliffordGate::action() const {
  LabelAction acc{{1, 0}, {}, {0, 1}, {}};
  for (const CliffordGenerator& g : gens_) {
    const LabelAction ga = generator_action(g, D_);
    const auto [xl, xp] = apply_action(ga, acc.x_image, D_);
    const auto [zl, zp] = apply_action(ga, acc.z_image, D_);
    acc = {xl, add_phase(acc.x_phase, xp, D_), zl, add_phase(acc.z_phase, zp, D_)};
  }
  return acc;
}

std::pair<PauliLabel, PauliPhase> act_on_label(const CliffordGate& g, PauliLabel p) {
  const int D = g.D();
  std::pair<PauliLabel, PauliPhase> cur{make_label(p.j, p.k, D), {}};
  for (const CliffordGenerator& gen : g.generators()) {
    const auto [lab, ph] = apply_action(generator_action(gen, D), cur.first, D);
    cur = {lab, add_phase(cur.second, ph, D)};
  }
  return cur;
}

PegResult peg_reduce(int D, int j_in, int k_in) {
  const PauliLabel start = make_label(j_in, k_in, D);
  if (start.is_identity()) throw InvalidArgument("peg_reduce: the identity label has no reduction");
  PegResult out{CliffordGate(D), 0, {start}};
  int j = start.j, k = start.k;
  const CliffordGenerator F{Kind::Fourier, 0, 0}, Fi{Kind::FourierInverse, 0, 0};
  const CliffordGenerator P{Kind::Phase, 0, 0}, Pi{Kind::PhaseInverse, 0, 0};
  std::vector<CliffordGenerator> gens;
  // Reduce the larger exponent first, then alternate.
  bool reduce_j = j >= k;
  while (j != 0 && k != 0) {
    if (reduce_j) {
      // X^j Z^k -> X^{j - q k} Z^k via F . P^q . F'
      const int q = j / k;
      gens.push_back(F);
      for (int i = 0; i < q; ++i) gens.push_back(P);
      gens.push_back(Fi);
      j -= q * k;
    } else {
      // X^j Z^k -> X^j Z^{k - q j} via P'^q
      const int q = k / j;
      for (int i = 0; i < q; ++i) gens.push_back(Pi);
      k -= q * j;
    }
    out.chain.push_back({j, k});
    reduce_j = !reduce_j;
  }
  if (k == 0) {
    gens.push_back(F);  // X^g -> Z^g
    k = j;
    j = 0;
    out.chain.push_back({j, k});
  }
  out.gate = CliffordGate(D, std::move(gens));
  out.gcd = k;
  return out;
}

std::string format_gate(const CliffordGate& g) {
  if (g.is_identity_word()) return "I";
  std::string out;
  for (const CliffordGenerator& gen : g.generators()) {
    if (!out.empty()) out += '.';
    switch (gen.kind) {
      case Kind::Fourier: out += "F"; break;
      case Kind::FourierInverse: out += "F'"; break;
      case Kind::Phase: out += "P"; break;
      case Kind::PhaseInverse: out += "P'"; break;
      case Kind::Multiplier: out += "M(" + std::to_string(gen.a) + ")"; break;
      case Kind::Pauli: out += "W(" + std::to_string(gen.a) + "," + std::to_string(gen.b) + ")"; break;
      case Kind::PauliInverse: out += "W'(" + std::to_string(gen.a) + "," + std::to_string(gen.b) + ")"; break;
    }
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidArgument("malformed integer in gate '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<int> parse_args(std::string_view tok, std::size_t open, std::string_view whole) {
  if (tok.size() < open + 2 || tok[open] != '(' || tok.back() != ')') {
    throw InvalidArgument("malformed gate token '" + std::string(tok) + "'");
  }
  std::string_view inner = tok.substr(open + 1, tok.size() - open - 2);
  std::vector<int> out;
  while (true) {
    const std::size_t comma = inner.find(',');
    out.push_back(parse_int(inner.substr(0, comma), whole));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

CliffordGate parse_gate(std::string_view text, int D) {
  if (text == "I") return CliffordGate(D);
  if (text.empty()) throw InvalidArgument("empty gate string");
  std::vector<CliffordGenerator> gens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    // '.' separates tokens; parentheses never contain '.'.
    std::size_t end = text.find('.', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view tok = text.substr(pos, end - pos);
    if (tok == "F") {
      gens.push_back({Kind::Fourier, 0, 0});
    } else if (tok == "F'") {
      gens.push_back({Kind::FourierInverse, 0, 0});
    } else if (tok == "P") {
      gens.push_back({Kind::Phase, 0, 0});
    } else if (tok == "P'") {
      gens.push_back({Kind::PhaseInverse, 0, 0});
    } else if (tok.starts_with("M(")) {
      const auto args = parse_args(tok, 1, text);
      if (args.size() != 1) throw InvalidArgument("M takes one argument");
      gens.push_back({Kind::Multiplier, args[0], 0});
    } else if (tok.starts_with("W'(")) {
      const auto args = parse_args(tok, 2, text);
      if (args.size() != 2) throw InvalidArgument("W' takes two arguments");
      const PauliLabel l = make_label(args[0], args[1], D);
      gens.push_back({Kind::PauliInverse, l.j, l.k});
    } else if (tok.starts_with("W(")) {
      const auto args = parse_args(tok, 1, text);
      if (args.size() != 2) throw InvalidArgument("W takes two arguments");
      const PauliLabel l = make_label(args[0], args[1], D);
      gens.push_back({Kind::Pauli, l.j, l.k});
    } else {
      throw InvalidArgument("unknown gate token '" + std::string(tok) + "'");
    }
    pos = end + 1;
  }
  return CliffordGate(D, std::move(gens));
}

}  // namespace hamsim
