// Copyright 2026 The qmlc Authors
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

#include "qmlc/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qmlc/gates.hpp"
#include "qmlc/liealg.hpp"
#include "qmlc/qml.hpp"
#include "qmlc/tables.hpp"

namespace qmlc::cli {

namespace {

std::string two_digits(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

std::string full_digits(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

GateTarget resolve_gate(const std::string& text, std::optional<double> phi) {
  GateSpec spec = parse_gate_spec(text);
  if (phi) spec.params = {*phi};
  return library(spec.name, spec.params);
}

std::string_view side_name(QubitSide s) {
  return s == QubitSide::Second ? "second" : "first";
}

}  // namespace

CMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  std::string line;
  while (std::getline(in, line)) {
    text << line.substr(0, line.find('#')) << '\n';
  }
  std::istringstream is(text.str());
  std::string key;
  int dim = 0;
  if (!(is >> key >> dim) || key != "dim" || (dim != 2 && dim != 4)) {
    throw std::runtime_error(path + ": expected a 'dim 2' or 'dim 4' header");
  }
  CMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double re = 0.0, im = 0.0;
      if (!(is >> re >> im)) {
        throw std::runtime_error(path + ": expected " + std::to_string(dim * dim) +
                                 " complex entries");
      }
      m(i, j) = Complex(re, im);
    }
  }
  std::string extra;
  if (is >> extra) throw std::runtime_error(path + ": trailing data '" + extra + "'");
  return m;
}

int cmd_compile(const CompileOptions& opts, std::ostream& out, std::ostream& err) {
  GateTarget target;
  CompileResult res;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (opts.out.empty()) throw std::invalid_argument("--out is required");
    if (opts.gate.empty() == opts.matrix_path.empty()) {
      throw std::invalid_argument("give exactly one of --gate or --matrix");
    }
    if (!opts.gate.empty()) {
      target = resolve_gate(opts.gate, opts.phi);
    } else {
      const CMatrix raw = read_matrix_file(opts.matrix_path);
      target.name = "matrix";
      target.dim = static_cast<int>(raw.rows());
      target.matrix = su_project(raw);
    }
    opts.energies.validate();
    opts.optimizer.validate();
    if (target.embedded_side) {
      res = compile1_embedded(target, *target.embedded_side, opts.k,
                              opts.energies, opts.optimizer);
    } else if (target.dim == 2) {
      res = compile1_device(target, opts.energies, opts.optimizer);
    } else {
      res = compile2(target, opts.energies, opts.optimizer);
    }
    save_command(opts.out, res.command,
                 opts.digits4 ? TimeFormat::Fixed4 : TimeFormat::Full);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream report;
  report << "gate " << res.command.gate << '\n'
         << "template " << res.tpl.name() << '\n';
  if (target.embedded_side) report << "side " << side_name(*target.embedded_side) << '\n';
  report << "energies " << opts.energies.bias << ' ' << opts.energies.tunneling
         << ' ' << opts.energies.coupling << '\n'
         << "f_test " << full_digits(res.f_test) << '\n'
         << "phase_fidelity " << full_digits(res.phase_fidelity) << '\n'
         << "converged " << (res.converged ? "true" : "false") << '\n'
         << "restarts " << res.restarts_used << '\n'
         << "seed " << res.seed << '\n';
  if (res.k) report << "k " << *res.k << '\n';
  report << "total_time " << full_digits(res.total_time()) << '\n'
         << "wall_time_s " << std::fixed << std::setprecision(3) << wall << '\n';
  if (!res.diagnostic.empty()) report << "diagnostic " << res.diagnostic << '\n';

  if (opts.report.empty()) {
    out << report.str();
  } else {
    std::ofstream rf(opts.report);
    if (!rf) {
      err << "error: cannot write " << opts.report << '\n';
      return kInputError;
    }
    rf << report.str();
  }
  if (!res.converged) {
    err << "warning: " << res.diagnostic << '\n';
    return kNotConverged;
  }
  return kSuccess;
}

int cmd_run(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    const Command cmd = load_command(path);
    const Execution ex = execute(cmd);
    if (ex.empty_program) {
      err << "warning: " << path << " has no letters; the result is the identity\n";
    }
    out << format_matrix(ex.unitary, 10);
  } catch (const ParseError& ex) {
    err << path << ": " << ex.what() << '\n';
    return kInputError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }
  return kSuccess;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  double f = 0.0;
  double fidelity = 0.0;
  try {
    const Command cmd = load_command(opts.path);
    const GateTarget g = resolve_gate(opts.gate.empty() ? cmd.gate : opts.gate, opts.phi);
    const CMatrix u = execute(cmd).unitary;
    if (u.rows() != g.matrix.rows()) {
      throw std::invalid_argument("command acts on dimension " +
                                  std::to_string(u.rows()) + " but " +
                                  gate_label(g) + " has dimension " +
                                  std::to_string(g.dim));
    }
    f = (g.matrix - u).squaredNorm();
    fidelity = phase_fidelity(g.matrix, u);
    out << "gate " << gate_label(g) << '\n';
  } catch (const ParseError& ex) {
    err << opts.path << ": " << ex.what() << '\n';
    return kInputError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }
  out << "f_test " << two_digits(f) << '\n'
      << "f_test_full " << full_digits(f) << '\n'
      << "phase_fidelity " << full_digits(fidelity) << '\n';
  if (f > opts.threshold) {
    err << "f_test exceeds threshold " << opts.threshold << '\n';
    return kNotConverged;
  }
  return kSuccess;
}

int cmd_closure(const EnergyConfig& energies, std::ostream& out, std::ostream& err) {
  bool ok = true;
  try {
    struct Named {
      std::string name;
      GeneratorSet set;
    };
    const Named sets[] = {
        {"sz,sx", standard_generators(1)},
        {"A2", standard_generators(2)},
        {"H1..H4", device_generators(energies)},
        {"A3", standard_generators(3)},
    };
    for (const auto& s : sets) {
      const ClosureResult r = lie_closure(s.set, 1e-9, ExecPolicy::Parallel);
      out << "closure " << s.name << " dimension " << r.dimension << " of "
          << s.set.dim * s.set.dim - 1 << " rounds " << r.rounds << '\n';
    }
    auto report = [&](std::string_view group, const std::vector<IdentityCheck>& checks) {
      for (const auto& c : checks) {
        ok = ok && c.status != IdentityStatus::Failed;
        out << group << " [" << to_string(c.status) << "] " << c.name
            << "  dev " << two_digits(c.deviation) << " flipped "
            << two_digits(c.deviation_flipped) << '\n';
      }
    };
    report("reconstruction", verify_reconstruction(energies));
    report("construction", verify_constructions());
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }
  return ok ? kSuccess : kNotConverged;
}

int cmd_tables(const std::filesystem::path& corpus, bool regenerate,
               std::ostream& out, std::ostream& err) {
  std::vector<TableCheck> checks;
  try {
    if (regenerate) write_corpus(corpus);
    checks = check_tables(corpus);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.passed;
    out << (c.passed ? "PASS " : "FAIL ") << "table" << c.table << ' ' << c.file
        << " f_test " << two_digits(c.f_test);
    if (c.published_f) out << " published " << two_digits(*c.published_f);
    if (!c.detail.empty()) out << "  (" << c.detail << ')';
    out << '\n';
  }
  return all ? kSuccess : kNotConverged;
}

}  // namespace qmlc::cli
