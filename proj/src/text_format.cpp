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


#include "hamsim/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

long long parse_int(const std::string& s, int line, const char* what) {
  long long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(std::string("expected an integer for ") + what + ", got '" + s + "'", line);
  return v;
}

double parse_real(const std::string& s, int line) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v))
    throw ParseError("expected a finite real number, got '" + s + "'", line);
  return v;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

void require_hermitian_terms(const SymbolicHamiltonian& h, double tol) {
  const int D = h.D();
  const double scale = std::max(1.0, h.max_abs_coefficient());
  for (const auto& [s, c] : h.terms()) {
    PauliString partner(s.size());
    std::int64_t e = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      partner[i] = make_label(-s[i].j, -s[i].k, D);
      e += static_cast<std::int64_t>(s[i].j) * s[i].k;
    }
    const cplx expected = std::conj(c) * phase_value(omega_power(e, D), D);
    const cplx found = h.coefficient(partner);
    if (std::abs(found - expected) > tol * scale) {
      std::ostringstream os;
      os.precision(10);
      os << "not Hermitian: term " << string_to_text(s) << " requires its conjugate partner " << string_to_text(partner)
         << " to have coefficient " << expected.real() << (expected.imag() < 0 ? "" : "+") << expected.imag()
         << "i, found " << found.real() << (found.imag() < 0 ? "" : "+") << found.imag() << "i";
      throw NotHermitianError(os.str());
    }
  }
}

SymbolicHamiltonian parse_hamiltonian(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  int stage = 0;  // 0: expect magic, 1: expect dims, 2: terms
  SymbolicHamiltonian h;
  int D = 0, N = 0;
  while (std::getline(is, raw)) {
    ++line;
    const std::vector<std::string> t = tokens(raw);
    if (t.empty()) continue;
    if (stage == 0) {
      if (t.size() != 2 || t[0] != "qudit-ham" || t[1] != "v1") throw ParseError("expected header 'qudit-ham v1'", line);
      stage = 1;
      continue;
    }
    if (stage == 1) {
      if (t.size() != 4 || t[0] != "D" || t[2] != "N") throw ParseError("expected 'D <int> N <int>'", line);
      const long long d = parse_int(t[1], line, "D"), n = parse_int(t[3], line, "N");
      if (d < 2 || d > 4096) throw ParseError("D must lie in [2, 4096]", line);
      if (n < 1 || n > 64) throw ParseError("N must lie in [1, 64]", line);
      D = static_cast<int>(d);
      N = static_cast<int>(n);
      h = SymbolicHamiltonian(D, N);
      stage = 2;
      continue;
    }
    if (t[0] != "term") throw ParseError("expected 'term', got '" + t[0] + "'", line);
    const std::size_t want = 1 + 2 * static_cast<std::size_t>(N) + 2;
    if (t.size() != want)
      throw ParseError("term needs " + std::to_string(2 * N) + " exponents and a complex coefficient", line);
    PauliString s(static_cast<std::size_t>(N));
    for (int q = 0; q < N; ++q) {
      const long long j = parse_int(t[1 + 2 * static_cast<std::size_t>(q)], line, "an X exponent");
      const long long k = parse_int(t[2 + 2 * static_cast<std::size_t>(q)], line, "a Z exponent");
      if (j < 0 || j >= D || k < 0 || k >= D)
        throw ParseError("exponents of qudit " + std::to_string(q) + " must lie in [0, " + std::to_string(D) + ")", line);
      s[static_cast<std::size_t>(q)] = {static_cast<int>(j), static_cast<int>(k)};
    }
    const cplx c(parse_real(t[want - 2], line), parse_real(t[want - 1], line));
    if (h.terms().contains(s)) throw ParseError("duplicate term " + string_to_text(s), line);
    h.set(s, c);
  }
  if (stage == 0) throw ParseError("missing header 'qudit-ham v1'", line);
  if (stage == 1) throw ParseError("missing 'D <int> N <int>' line", line);
  require_hermitian_terms(h);
  return h;
}

std::string emit_hamiltonian(const SymbolicHamiltonian& h) {
  std::string out = "qudit-ham v1\nD " + std::to_string(h.D()) + " N " + std::to_string(h.N()) + "\n";
  for (const auto& [s, c] : h.terms()) {
    if (c == cplx(0.0)) continue;
    out += "term";
    for (const PauliLabel& l : s) out += " " + std::to_string(l.j) + " " + std::to_string(l.k);
    out += " " + fmt(c.real()) + " " + fmt(c.imag()) + "\n";
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error("failed writing '" + path + "'");
}

}  // namespace hamsim
