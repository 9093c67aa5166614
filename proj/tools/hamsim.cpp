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


// hamsim: compile, verify and inspect qudit Hamiltonian simulations.
//
// Exit codes: 0 success, 2 resource not entangling, 3 verification above
// tolerance, 4 input, output or argument error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamsim/clifford.hpp"
#include "hamsim/compiler.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/majorization.hpp"
#include "hamsim/nqudit.hpp"
#include "hamsim/text_format.hpp"
#include "hamsim/verify.hpp"

namespace {

using namespace hamsim;

constexpr int kExitOk = 0;
constexpr int kExitNotEntangling = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitInput = 4;

struct CompileArgs {
  std::string resource, target, out, trace, principal, strategy = "generic";
  double time = 1.0, tol = 1e-2;
  std::uint64_t slices = 256;
  std::uint64_t swap_slices = 0;
  bool fast_path = false, no_verify = false;
};

struct VerifyArgs {
  std::string schedule, resource, target;
  double time = 1.0, tol = 1e-2;
};

struct PegArgs {
  int d = 0, j = 0, k = 0;
};

struct UhlmannArgs {
  std::string a, b;
};

QuditPair parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InvalidArgument("--principal expects 'i,j'");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InvalidArgument("--principal expects 'i,j'");
  }
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line.substr(0, line.find('#')));
    std::vector<int> block;
    for (std::string w; ls >> w;) {
      try {
        std::size_t used = 0;
        block.push_back(std::stoi(w, &used));
        if (used != w.size()) throw std::invalid_argument(w);
      } catch (const std::exception&) {
        throw InvalidArgument("partition file: '" + w + "' is not a qudit index");
      }
    }
    if (!block.empty()) p.blocks.push_back(std::move(block));
  }
  return p;
}

// generic | chain | partition:<file> | lattice:<r>x<d1>x...x<dr>[:periodic]
void parse_strategy(const std::string& s, NQuditOptions& opt) {
  if (s == "generic") {
    opt.strategy = NQuditOptions::Strategy::Generic;
  } else if (s == "chain") {
    opt.strategy = NQuditOptions::Strategy::Chain;
  } else if (s.rfind("partition:", 0) == 0) {
    opt.strategy = NQuditOptions::Strategy::Partition;
    opt.partition = parse_partition(read_text_file(s.substr(10)));
  } else if (s.rfind("lattice:", 0) == 0) {
    opt.strategy = NQuditOptions::Strategy::Lattice;
    std::string dims = s.substr(8);
    if (const auto colon = dims.find(':'); colon != std::string::npos) {
      if (dims.substr(colon + 1) != "periodic") throw InvalidArgument("lattice strategy: unknown suffix");
      opt.periodic = true;
      dims = dims.substr(0, colon);
    }
    std::vector<int> nums;
    std::istringstream is(dims);
    for (std::string w; std::getline(is, w, 'x');) {
      try {
        nums.push_back(std::stoi(w));
      } catch (const std::exception&) {
        throw InvalidArgument("lattice strategy: expected <r>x<d1>x...");
      }
    }
    if (nums.size() < 2 || nums[0] != static_cast<int>(nums.size()) - 1)
      throw InvalidArgument("lattice strategy: rank must match the number of extents");
    opt.lattice_dims.assign(nums.begin() + 1, nums.end());
  } else {
    throw InvalidArgument("unknown strategy '" + s + "'");
  }
}

int run_compile(const CompileArgs& a) {
  const SymbolicHamiltonian h = parse_hamiltonian(read_text_file(a.resource));
  const SymbolicHamiltonian k = parse_hamiltonian(read_text_file(a.target));
  if (h.D() != k.D() || h.N() != k.N()) throw InvalidArgument("resource and target shapes differ");
  if (h.N() < 2) throw NotEntanglingError("a single qudit has no interaction graph edges");
  PulseSchedule schedule;
  std::string summary;
  if (h.N() == 2) {
    if (!a.principal.empty() && parse_pair(a.principal) != QuditPair{0, 1} && parse_pair(a.principal) != QuditPair{1, 0})
      throw InvalidArgument("--principal must name qudits 0 and 1 for two qudits");
    CompileResult r = compile_full(h, k, a.time, a.slices, PipelineOptions{a.fast_path});
    schedule = std::move(r.schedule);
    summary = r.trace.summary();
  } else {
    NQuditOptions opt;
    parse_strategy(a.strategy, opt);
    if (!a.principal.empty()) opt.principal = parse_pair(a.principal);
    opt.swap_slices = a.swap_slices ? a.swap_slices : a.slices;
    opt.pipeline.prime_fast_path = a.fast_path;
    NQuditResult r = compile_nqudit(h, k, a.time, a.slices, opt);
    schedule = std::move(r.schedule);
    summary = r.summary();
  }
  const std::string text = emit_schedule(schedule);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(a.out, text);
  }
  if (!a.trace.empty()) {
    write_text_file(a.trace, summary);
  } else {
    std::cerr << summary;
  }
  if (a.no_verify) return kExitOk;
  try {
    const FidelityReport rep = verify_schedule(schedule, h, k, a.time, a.tol);
    std::cerr << rep.to_text();
    return rep.passed() ? kExitOk : kExitTolerance;
  } catch (const DenseLimitError& e) {
    std::cerr << "verification=skipped (" << e.what() << ")\n";
    return kExitOk;
  }
}

int run_verify(const VerifyArgs& a) {
  const PulseSchedule s = parse_schedule(read_text_file(a.schedule));
  const SymbolicHamiltonian h = parse_hamiltonian(read_text_file(a.resource));
  const SymbolicHamiltonian k = parse_hamiltonian(read_text_file(a.target));
  if (h.D() != s.D || h.N() != s.N || k.D() != s.D || k.N() != s.N)
    throw InvalidArgument("schedule, resource and target shapes differ");
  const FidelityReport rep = verify_schedule(s, h, k, a.time, a.tol);
  std::cout << rep.to_text();
  return rep.passed() ? kExitOk : kExitTolerance;
}

int run_peg(const PegArgs& a) {
  if (a.d < 2) throw InvalidArgument("--d must be at least 2");
  if (a.j < 0 || a.k < 0 || a.j >= a.d || a.k >= a.d) throw InvalidArgument("--j and --k must lie in [0, D)");
  const PegResult r = peg_reduce(a.d, a.j, a.k);
  std::cout << "gate " << format_gate(r.gate) << "\n";
  std::cout << "chain";
  for (const PauliLabel& l : r.chain) std::cout << " (" << l.j << "," << l.k << ")";
  std::cout << "\nresult Z^" << r.gcd << "\n";
  return kExitOk;
}

void print_matrix(const DenseOperator& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    std::cout << "   ";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " %+.6f%+.6fi", m(r, c).real(), m(r, c).imag());
      std::cout << buf;
    }
    std::cout << "\n";
  }
}

int run_uhlmann(const UhlmannArgs& a) {
  const SymbolicHamiltonian ha = parse_hamiltonian(read_text_file(a.a));
  const SymbolicHamiltonian hb = parse_hamiltonian(read_text_file(a.b));
  if (ha.N() != 1 || hb.N() != 1 || ha.D() != hb.D()) throw InvalidArgument("uhlmann expects two single-qudit files of equal D");
  const DenseOperator am = reconstruct(ha), bm = reconstruct(hb);
  const double tol = 1e-10 * std::max(1.0, std::max(am.max_abs(), bm.max_abs()));
  UhlmannDecomposition d;
  const DescendingEig ea = descending_eig(am), eb = descending_eig(bm);
  if (majorizes(ea.values, eb.values)) {
    d = uhlmann_decompose(am, bm);
  } else if (std::abs(am.trace()) <= tol && std::abs(bm.trace()) <= tol && bm.max_abs() > tol) {
    d = traceless_decompose(am, bm);
  } else {
    throw PreconditionError("A is not majorized by B and the pair is not traceless");
  }
  double total = 0.0;
  for (double w : d.weights) total += w;
  std::cout.precision(12);
  std::cout << "terms " << d.size() << "\nscale " << d.scale << "\nweight_sum " << total << "\nresidual "
            << uhlmann_residual(d, am, bm) << "\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::cout << "weight " << d.weights[i] << "\n";
    print_matrix(d.unitaries[i]);
  }
  return kExitOk;
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const NotEntanglingError& e) {
    std::cerr << "error: not entangling: " << e.what() << "\n";
    return kExitNotEntangling;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit Hamiltonian simulation compiler"};
  app.require_subcommand(1);

  CompileArgs ca;
  auto* compile = app.add_subcommand("compile", "Compile a target Hamiltonian over a resource Hamiltonian");
  compile->add_option("--resource", ca.resource, "Resource Hamiltonian (qudit-ham v1)")->required();
  compile->add_option("--target", ca.target, "Target Hamiltonian (qudit-ham v1)")->required();
  compile->add_option("--time", ca.time, "Simulated time t");
  compile->add_option("--slices", ca.slices, "Trotter slices n")->check(CLI::PositiveNumber);
  compile->add_option("--swap-slices", ca.swap_slices, "Trotter slices per routed SWAP (default: --slices)");
  compile->add_option("--principal", ca.principal, "Target pair 'i,j' for N > 2");
  compile->add_option("--strategy", ca.strategy, "generic | chain | partition:<file> | lattice:<r>x<d1>x...[:periodic]");
  compile->add_option("--out", ca.out, "Schedule output file (stdout when absent)");
  compile->add_option("--trace", ca.trace, "Trace summary file (stderr when absent)");
  compile->add_option("--tol", ca.tol, "Verification tolerance");
  compile->add_flag("--fast-path", ca.fast_path, "Use the prime-dimension shortcut");
  compile->add_flag("--no-verify", ca.no_verify, "Skip dense verification");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Execute a schedule and compare with exp(-iKt)");
  verify->add_option("--schedule", va.schedule, "Schedule (qudit-schedule v1)")->required();
  verify->add_option("--resource", va.resource, "Resource Hamiltonian")->required();
  verify->add_option("--target", va.target, "Target Hamiltonian")->required();
  verify->add_option("--time", va.time, "Simulated time t");
  verify->add_option("--tol", va.tol, "Tolerance");

  PegArgs pa;
  auto* peg = app.add_subcommand("peg", "Reduce X^j Z^k to a power of Z by normalizer conjugation");
  peg->add_option("--d", pa.d, "Dimension D")->required();
  peg->add_option("--j", pa.j, "X exponent")->required();
  peg->add_option("--k", pa.k, "Z exponent")->required();

  UhlmannArgs ua;
  auto* uhl = app.add_subcommand("uhlmann", "Decompose A as a weighted sum of unitary conjugates of B");
  uhl->add_option("--a", ua.a, "Single-qudit Hermitian A (qudit-ham v1, N 1)")->required();
  uhl->add_option("--b", ua.b, "Single-qudit Hermitian B (qudit-ham v1, N 1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (*compile) return guarded([&] { return run_compile(ca); });
  if (*verify) return guarded([&] { return run_verify(va); });
  if (*peg) return guarded([&] { return run_peg(pa); });
  return guarded([&] { return run_uhlmann(ua); });
}
