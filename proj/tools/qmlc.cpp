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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qmlc/cli.hpp"

#ifndef QMLC_TABLES_DIR
#define QMLC_TABLES_DIR "tables"
#endif

int main(int argc, char** argv) {
  using namespace qmlc;

  CLI::App app{"qmlc: compile and run switch-level programs for coupled "
               "Josephson-junction qubits"};
  app.require_subcommand(1);

  EnergyConfig energies;
  app.add_option("--ec", energies.bias, "idle bias energy E_c");
  app.add_option("--ej", energies.tunneling, "tunneling energy E_J");
  app.add_option("--el", energies.coupling, "inductor energy E_L");

  cli::CompileOptions copts;
  double phi = 0.0;
  int k = 0;
  bool serial = false;
  auto* compile = app.add_subcommand("compile", "synthesize a command for a gate");
  compile->add_option("--gate", copts.gate, "library gate, e.g. cnot or phs(0.5)");
  auto* compile_phi = compile->add_option("--phi", phi, "phase parameter");
  compile->add_option("--matrix", copts.matrix_path, "raw matrix file");
  compile->add_option("--out", copts.out, "output .qml file")->required();
  compile->add_option("--report", copts.report, "report file (default stdout)");
  compile->add_flag("--digits4", copts.digits4, "write times with four decimals");
  compile->add_option("--seed", copts.optimizer.seed, "random seed");
  compile->add_option("--restarts", copts.optimizer.restarts, "restart budget");
  compile->add_option("--iters", copts.optimizer.max_iters, "iterations per restart");
  compile->add_option("--target", copts.optimizer.target_f, "f_test target");
  compile->add_option("--tmax", copts.optimizer.t_max, "upper bound on each time");
  auto* compile_k = compile->add_option("--k", k, "embedded scheme: total time 4k pi/dE")
                        ->check(CLI::PositiveNumber);
  compile->add_flag("--serial", serial, "run restarts without OpenMP");

  std::string run_path;
  auto* run = app.add_subcommand("run", "execute a .qml file and print the unitary");
  run->add_option("file", run_path)->required()->check(CLI::ExistingFile);

  cli::VerifyOptions vopts;
  double vphi = 0.0;
  auto* verify = app.add_subcommand("verify", "f_test of a .qml file against a gate");
  verify->add_option("file", vopts.path)->required()->check(CLI::ExistingFile);
  verify->add_option("--gate", vopts.gate, "gate (default: the file's header)");
  auto* verify_phi = verify->add_option("--phi", vphi, "phase parameter");
  verify->add_option("--threshold", vopts.threshold, "pass threshold");

  auto* closure = app.add_subcommand("closure", "Lie-closure dimensions and identities");

  std::string corpus = QMLC_TABLES_DIR;
  bool regenerate = false;
  auto* tables = app.add_subcommand("tables", "check the golden table corpus");
  tables->add_option("--corpus", corpus, "corpus directory");
  tables->add_flag("--regenerate", regenerate, "rewrite the corpus before checking");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  if (*compile) {
    copts.energies = energies;
    if (*compile_phi) copts.phi = phi;
    if (*compile_k) copts.k = k;
    copts.optimizer.policy = serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
    return cli::cmd_compile(copts, std::cout, std::cerr);
  }
  if (*run) return cli::cmd_run(run_path, std::cout, std::cerr);
  if (*verify) {
    if (*verify_phi) vopts.phi = vphi;
    return cli::cmd_verify(vopts, std::cout, std::cerr);
  }
  if (*closure) return cli::cmd_closure(energies, std::cout, std::cerr);
  if (*tables) return cli::cmd_tables(corpus, regenerate, std::cout, std::cerr);
  return cli::kInputError;
}
