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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qmlc/device.hpp"
#include "qmlc/linalg.hpp"

namespace qmlc {

/// One step on the one-qubit device: idle (e = 1) or degenerate (e = 0) for
/// a duration t.
struct Letter1 {
  bool idle = false;
  double t = 0.0;

  friend bool operator==(const Letter1&, const Letter1&) = default;
};

/// One step on the coupled two-junction device.
struct Letter {
  SwitchState switches;
  double t = 0.0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using LetterList = std::variant<std::vector<Letter1>, std::vector<Letter>>;

/// An ordered letter sequence. The first letter is the first step in time,
/// i.e. the rightmost factor of the evolution operator.
struct Command {
  std::string gate;
  EnergyConfig energies;
  LetterList letters = std::vector<Letter>{};

  int dim() const;
  std::size_t size() const;
  std::vector<double> times() const;

  friend bool operator==(const Command&, const Command&) = default;
};

class InvalidCommandError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

struct Execution {
  CMatrix unitary;
  bool empty_program = false;  // no letters: unitary is the identity
};

/// Evolution operator of a command. Any of the switch states is accepted.
/// Throws InvalidCommandError on negative or non-finite times.
Execution execute(const Command& cmd);

enum class TimeFormat {
  Fixed4,  // exactly four decimals, as in the published tables
  Full,    // shortest round-trip digits, at least four decimals
};

/// Text format, one command per file:
///   gate <name>
///   dim <2|4>
///   energies <E_c> <E_J> <E_L>
///   letter <e1> <e2> <l> <t>      (dim 4)
///   letter <e> <t>                (dim 2)
/// '#' starts a comment. Throws ParseError naming the offending line.
Command parse(std::string_view text);
std::string serialize(const Command& cmd, TimeFormat format = TimeFormat::Fixed4);

Command load_command(const std::string& path);
void save_command(const std::string& path, const Command& cmd,
                  TimeFormat format = TimeFormat::Fixed4);

/// Renders a letter duration in the given format.
std::string format_time(double t, TimeFormat format);

}  // namespace qmlc
