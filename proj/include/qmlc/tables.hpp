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
#include <optional>
#include <string>
#include <vector>

#include "qmlc/device.hpp"
#include "qmlc/qml.hpp"

namespace qmlc {

/// One published letter table. Table 1 holds closed-form one-qubit device
/// schedules, table 2 the fifteen-letter two-qubit commands, table 3 the
/// four-letter embedded one-qubit commands.
struct TableEntry {
  int table = 0;
  std::string file;  // name inside the corpus directory
  std::string gate;  // library name
  std::vector<double> params;
  std::vector<double> times;           // empty for table 1
  std::optional<double> published_f;   // tables 2 and 3
  std::string mirror_of;               // table 3 W (x) I entries: partner file
};

const std::vector<TableEntry>& table_entries();

/// The command an entry describes at default energies. Table 1 entries are
/// evaluated from the closed forms at full precision.
Command table_command(const TableEntry& entry);

/// Serialized text of an entry as stored in the corpus.
std::string table_text(const TableEntry& entry);

/// Writes every entry into `dir`, creating it if needed.
void write_corpus(const std::filesystem::path& dir);

struct TableCheck {
  std::string file;
  int table = 0;
  bool passed = false;
  double f_test = 0.0;
  std::optional<double> published_f;
  std::string detail;  // failure reasons, empty on success
};

/// Published f_test values are matched within this factor either way.
inline constexpr double kTableFactor = 3.0;
/// Relative tolerance on 4 k pi / dE for embedded totals.
inline constexpr double kTotalTimeTol = 5e-4;
inline constexpr int kMaxPeriods = 200;

/// Loads and checks every entry of the corpus at `dir`. Throws
/// std::runtime_error when the directory does not exist; a missing or
/// unparsable file fails its own entry.
std::vector<TableCheck> check_tables(const std::filesystem::path& dir);

}  // namespace qmlc
