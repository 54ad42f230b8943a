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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "qmlc/compiler.hpp"
#include "qmlc/device.hpp"
#include "qmlc/linalg.hpp"

namespace qmlc::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kNotConverged = 2,  // also: verification or table check failed
};

struct CompileOptions {
  std::string gate;         // library name, may carry "(phi)"
  std::optional<double> phi;
  std::string matrix_path;  // raw matrix file instead of a gate
  std::string out;          // .qml path; required
  std::string report;       // key-value report path; stdout when empty
  bool digits4 = false;     // write times with four decimals
  std::optional<int> k;     // embedded scheme period count
  EnergyConfig energies;
  OptimizerConfig optimizer;
};

struct VerifyOptions {
  std::string path;
  std::string gate;  // defaults to the file's gate header
  std::optional<double> phi;
  double threshold = 1e-4;
};

/// Reads a raw matrix file: "dim <n>" then n*n whitespace-separated
/// real/imag pairs in row-major order. '#' starts a comment.
CMatrix read_matrix_file(const std::string& path);

int cmd_compile(const CompileOptions& opts, std::ostream& out, std::ostream& err);
int cmd_run(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_closure(const EnergyConfig& energies, std::ostream& out,
                std::ostream& err);
/// Checks the corpus; with `regenerate` set, rewrites it there first.
int cmd_tables(const std::filesystem::path& corpus, bool regenerate,
               std::ostream& out, std::ostream& err);

}  // namespace qmlc::cli
