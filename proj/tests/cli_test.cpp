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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qmlc/gates.hpp"
#include "qmlc/qml.hpp"
#include "qmlc/tables.hpp"

namespace qmlc::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qmlc_cli_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()
                                          ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

std::string golden(const std::string& file) {
  return (fs::path(QMLC_TABLES_DIR) / file).string();
}

CompileOptions quick_compile() {
  CompileOptions o;
  o.optimizer.restarts = 64;
  o.optimizer.seed = 7;
  return o;
}

TEST_F(CliTest, CompileCnotWritesCommandAndReport) {
  CompileOptions o = quick_compile();
  o.gate = "cnot";
  o.out = path("cnot.qml");
  o.report = path("cnot.txt");
  ASSERT_EQ(cmd_compile(o, out_, err_), kSuccess) << err_.str();
  const Command cmd = load_command(o.out);
  EXPECT_EQ(cmd.gate, "cnot");
  EXPECT_EQ(cmd.size(), 15u);
  const double f = (library("cnot").matrix - execute(cmd).unitary).squaredNorm();
  EXPECT_LE(f, 1e-8);

  std::ifstream report(o.report);
  std::string key, value;
  bool saw_f = false, saw_fid = false;
  while (report >> key) {
    std::getline(report, value);
    if (key == "f_test") {
      saw_f = true;
      EXPECT_LE(std::stod(value), 1e-8);
    }
    saw_fid = saw_fid || key == "phase_fidelity";
  }
  EXPECT_TRUE(saw_f);
  EXPECT_TRUE(saw_fid);
}

TEST_F(CliTest, CompilePhShiftWithPhi) {
  CompileOptions o = quick_compile();
  o.gate = "phshift";
  o.phi = 1.5707963;
  o.out = path("p.qml");
  EXPECT_EQ(cmd_compile(o, out_, err_), kSuccess) << err_.str();
  EXPECT_NE(out_.str().find("converged true"), std::string::npos);
}

TEST_F(CliTest, CompileErrors) {
  CompileOptions o = quick_compile();
  o.gate = "nosuchgate";
  o.out = path("x.qml");
  EXPECT_EQ(cmd_compile(o, out_, err_), kInputError);
  EXPECT_NE(err_.str().find("unknown gate"), std::string::npos);
  o.gate.clear();
  EXPECT_EQ(cmd_compile(o, out_, err_), kInputError);
}

TEST_F(CliTest, CompileNonConvergenceStillWritesFile) {
  CompileOptions o = quick_compile();
  o.gate = "swap";
  o.out = path("swap.qml");
  o.optimizer.restarts = 1;
  o.optimizer.max_iters = 2;
  EXPECT_EQ(cmd_compile(o, out_, err_), kNotConverged);
  EXPECT_TRUE(fs::exists(o.out));
  EXPECT_NE(out_.str().find("converged false"), std::string::npos);
}

TEST_F(CliTest, CompileRawMatrix) {
  // Textbook CNOT; the loader projects it onto SU(4).
  write("cnot.mat",
        "dim 4\n"
        "1 0  0 0  0 0  0 0\n"
        "0 0  1 0  0 0  0 0\n"
        "0 0  0 0  0 0  1 0\n"
        "0 0  0 0  1 0  0 0\n");
  CompileOptions o = quick_compile();
  o.matrix_path = path("cnot.mat");
  o.out = path("m.qml");
  EXPECT_EQ(cmd_compile(o, out_, err_), kSuccess) << err_.str();

  write("bad.mat", "dim 2\n1 0 1 0\n0 0 1 0\n");
  o.matrix_path = path("bad.mat");
  EXPECT_EQ(cmd_compile(o, out_, err_), kInputError);
  EXPECT_NE(err_.str().find("not unitary"), std::string::npos);
}

TEST_F(CliTest, ReadMatrixFileErrors) {
  write("short.mat", "dim 2\n1 0 0 0\n");
  EXPECT_THROW(read_matrix_file(path("short.mat")), std::runtime_error);
  write("dim.mat", "dim 3\n");
  EXPECT_THROW(read_matrix_file(path("dim.mat")), std::runtime_error);
}

TEST_F(CliTest, RunGoldenCnot) {
  ASSERT_EQ(cmd_run(golden("table2_cnot.qml"), out_, err_), kSuccess);
  std::istringstream lines(out_.str());
  const CMatrix expected = std::polar(1.0, std::numbers::pi / 4) * textbook_matrix("cnot");
  std::string line;
  int row = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    int col = 0;
    while (cells >> cell) {
      // "re+imi"
      std::size_t split = cell.size() - 1;
      while (split > 0 && !((cell[split] == '+' || cell[split] == '-') && cell[split - 1] != 'e'))
        --split;
      const double re = std::stod(cell.substr(0, split));
      const double im = std::stod(cell.substr(split, cell.size() - split - 1));
      EXPECT_LE(std::abs(Complex(re, im) - expected(row, col)), 2e-3);
      ++col;
    }
    EXPECT_EQ(col, 4);
    ++row;
  }
  EXPECT_EQ(row, 4);
  EXPECT_TRUE(err_.str().empty());
}

TEST_F(CliTest, RunEmptyProgramWarns) {
  write("empty.qml", "gate none\ndim 2\n");
  EXPECT_EQ(cmd_run(path("empty.qml"), out_, err_), kSuccess);
  EXPECT_EQ(out_.str(), "1+0i  0+0i\n0+0i  1+0i\n");
  EXPECT_NE(err_.str().find("warning"), std::string::npos);
}

TEST_F(CliTest, RunMalformedNamesLine) {
  write("bad.qml", "dim 4\nletter 1 1 0 5\nletter 1 1\n");
  EXPECT_EQ(cmd_run(path("bad.qml"), out_, err_), kInputError);
  EXPECT_NE(err_.str().find("line 3"), std::string::npos);
}

TEST_F(CliTest, VerifyGoldenFiles) {
  VerifyOptions v;
  v.path = golden("table2_cnot.qml");
  v.gate = "cnot";
  EXPECT_EQ(cmd_verify(v, out_, err_), kSuccess);
  EXPECT_NE(out_.str().find("f_test 2.9e-06\n"), std::string::npos);
  const auto pos = out_.str().find("f_test_full ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::stod(out_.str().substr(pos + 12)), 2.863634216836725e-06, 1e-13);

  out_.str("");
  v.path = golden("table2_swap.qml");
  v.gate.clear();  // from the header
  EXPECT_EQ(cmd_verify(v, out_, err_), kSuccess);
  EXPECT_NE(out_.str().find("f_test 9.5e-08\n"), std::string::npos);
}

TEST_F(CliTest, VerifyCrossMismatch) {
  VerifyOptions v;
  v.path = golden("table2_cnot.qml");
  v.gate = "swap";
  EXPECT_EQ(cmd_verify(v, out_, err_), kNotConverged);
  const auto pos = out_.str().find("f_test_full ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_GT(std::stod(out_.str().substr(pos + 12)), 1.0);

  v.gate = "had";
  EXPECT_EQ(cmd_verify(v, out_, err_), kInputError);
}

TEST_F(CliTest, ClosureReport) {
  EXPECT_EQ(cmd_closure(EnergyConfig{}, out_, err_), kSuccess);
  const std::string s = out_.str();
  EXPECT_NE(s.find("closure sz,sx dimension 3 of 3"), std::string::npos);
  EXPECT_NE(s.find("closure A2 dimension 15 of 15"), std::string::npos);
  EXPECT_NE(s.find("closure H1..H4 dimension 15 of 15"), std::string::npos);
  EXPECT_NE(s.find("closure A3 dimension 63 of 63"), std::string::npos);
  EXPECT_EQ(s.find("FAILED"), std::string::npos);
}

TEST_F(CliTest, TablesMissingCorpus) {
  EXPECT_EQ(cmd_tables(dir_ / "absent", false, out_, err_), kInputError);
}

TEST_F(CliTest, TablesPerturbedEntryFails) {
  write_corpus(dir_);
  Command cmd = load_command(path("table2_qft4.qml"));
  std::get<std::vector<Letter>>(cmd.letters)[2].t += 1.0;
  save_command(path("table2_qft4.qml"), cmd);
  EXPECT_EQ(cmd_tables(dir_, false, out_, err_), kNotConverged);
  EXPECT_NE(out_.str().find("FAIL table2 table2_qft4.qml"), std::string::npos);
  EXPECT_NE(out_.str().find("PASS table2 table2_cnot.qml"), std::string::npos);
}

TEST_F(CliTest, TablesRegenerateWritesCorpus) {
  cmd_tables(dir_ / "fresh", true, out_, err_);
  EXPECT_EQ(std::distance(fs::directory_iterator(dir_ / "fresh"), fs::directory_iterator{}),
            16);
}

}  // namespace
}  // namespace qmlc::cli
