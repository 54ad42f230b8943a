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

#include "qmlc/tables.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "qmlc/compiler.hpp"
#include "qmlc/gates.hpp"

namespace qmlc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::vector<TableEntry> build_entries() {
  std::vector<TableEntry> e;
  e.push_back({1, "table1_not.qml", "not", {}, {}, std::nullopt, ""});
  e.push_back({1, "table1_sqrt-not.qml", "sqrt-not", {}, {}, std::nullopt, ""});
  e.push_back({1, "table1_had.qml", "had", {}, {}, std::nullopt, ""});
  e.push_back({1, "table1_phs.qml", "phs", {kHalfPi}, {}, std::nullopt, ""});

  e.push_back({2, "table2_cnot.qml", "cnot", {},
               {102.7757, 158.8193, 909.9617, 130.0504, 300.7220, 143.9878,
                101.0584, 900.5691, 151.5296, 83.4085, 161.0839, 901.9591,
                699.3097, 191.4272, 101.2086},
               2.9e-6, ""});
  e.push_back({2, "table2_swap.qml", "swap", {},
               {700.5872, 205.2390, 139.7456, 199.3881, 130.4966, 115.8947,
                110.9584, 200.5504, 120.2794, 784.0008, 798.0702, 129.1358,
                501.6780, 130.0444, 160.2219},
               9.5e-8, ""});
  e.push_back({2, "table2_qft4.qml", "qft4", {},
               {710.2581, 84.8635, 159.4397, 142.5689, 133.2760, 653.3505,
                133.4825, 924.2883, 173.8055, 633.4525, 701.2262, 131.3048,
                849.6562, 128.8483, 150.0286},
               1.0e-7, ""});
  e.push_back({2, "table2_phshift.qml", "phshift", {kHalfPi},
               {110.7116, 902.6813, 120.3082, 397.8240, 109.4998, 175.8195,
                521.3209, 122.5053, 102.2305, 795.3231, 108.9077, 198.7137,
                159.0513, 888.0009, 100.7132},
               1.2e-7, ""});

  struct Embedded {
    const char* w;
    std::vector<double> params;
    std::vector<double> times;
    double f;
  };
  const Embedded embedded[] = {
      {"not", {}, {133.6621, 104.2929, 102.2461, 111.8267}, 1.5e-8},
      {"had", {}, {113.3151, 111.1253, 109.4076, 118.1799}, 1.5e-8},
      {"sqrt-not", {}, {115.7315, 114.3695, 100.0236, 121.9033}, 3.4e-9},
      {"phs", {kHalfPi}, {114.9978, 109.2394, 115.3838, 112.4068}, 1.5e-9},
  };
  for (const auto& m : embedded) {
    const std::string w = m.w;
    e.push_back({3, "table3_i-kron-" + w + ".qml", "i-kron-" + w, m.params,
                 m.times, m.f, ""});
  }
  for (const auto& m : embedded) {
    const std::string w = m.w;
    e.push_back({3, "table3_" + w + "-kron-i.qml", w + "-kron-i", m.params,
                 m.times, m.f, "table3_i-kron-" + w + ".qml"});
  }
  return e;
}

bool within_factor(double value, double reference, double factor) {
  return value <= reference * factor && value >= reference / factor;
}

}  // namespace

const std::vector<TableEntry>& table_entries() {
  static const std::vector<TableEntry> entries = build_entries();
  return entries;
}

Command table_command(const TableEntry& entry) {
  const EnergyConfig cfg;
  if (entry.table == 1) return closed_form_command(entry.gate, cfg, entry.params);
  const GateTarget g = library(entry.gate, entry.params);
  Template tpl = Template::two_qubit_15();
  if (g.embedded_side) tpl = Template::embedded(*g.embedded_side);
  return tpl.to_command(entry.times, cfg, gate_label(g));
}

std::string table_text(const TableEntry& entry) {
  return serialize(table_command(entry),
                   entry.table == 1 ? TimeFormat::Full : TimeFormat::Fixed4);
}

void write_corpus(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& entry : table_entries()) {
    std::ofstream out(dir / entry.file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / entry.file).string());
    out << table_text(entry);
  }
}

std::vector<TableCheck> check_tables(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error("table corpus not found: " + dir.string());
  }
  std::map<std::string, std::vector<double>> loaded_times;
  std::vector<TableCheck> out;
  for (const auto& entry : table_entries()) {
    TableCheck c;
    c.file = entry.file;
    c.table = entry.table;
    c.published_f = entry.published_f;
    std::vector<std::string> problems;
    try {
      const Command cmd = load_command((dir / entry.file).string());
      const GateTarget g = library(entry.gate, entry.params);
      if (cmd.gate != gate_label(g)) {
        problems.push_back("gate header '" + cmd.gate + "' != '" + gate_label(g) + "'");
      }
      const CMatrix u = execute(cmd).unitary;
      if (u.rows() != g.dim) {
        throw std::runtime_error("dimension " + std::to_string(u.rows()) +
                                 " does not match the gate");
      }
      c.f_test = (g.matrix - u).squaredNorm();
      loaded_times[entry.file] = cmd.times();

      std::ostringstream os;
      if (entry.table == 1) {
        const double tol = entry.gate == "not" || entry.gate == "sqrt-not" ? 1e-12 : 1e-9;
        const double dev = max_abs(u - g.matrix);
        if (dev > tol) {
          os << "max entry deviation " << dev << " > " << tol;
          problems.push_back(os.str());
        }
      } else if (!within_factor(c.f_test, *entry.published_f, kTableFactor)) {
        os << "f_test " << c.f_test << " not within x" << kTableFactor
           << " of " << *entry.published_f;
        problems.push_back(os.str());
      }

      if (entry.table == 3) {
        const double period = 4.0 * std::numbers::pi / splitting(cmd.energies);
        double total = 0.0;
        for (double t : cmd.times()) total += t;
        const long k = std::lround(total / period);
        if (k < 1 || k > kMaxPeriods ||
            std::abs(total - k * period) > kTotalTimeTol * k * period) {
          std::ostringstream ts;
          ts << "total time " << total << " is not within " << kTotalTimeTol
             << " of 4 k pi / dE (nearest k = " << k << ")";
          problems.push_back(ts.str());
        }
        if (!entry.mirror_of.empty()) {
          auto it = loaded_times.find(entry.mirror_of);
          if (it == loaded_times.end() || it->second != cmd.times()) {
            problems.push_back("times differ from " + entry.mirror_of);
          }
        }
      }
    } catch (const std::exception& ex) {
      problems.emplace_back(ex.what());
    }
    c.passed = problems.empty();
    for (std::size_t i = 0; i < problems.size(); ++i) {
      if (i) c.detail += "; ";
      c.detail += problems[i];
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qmlc
