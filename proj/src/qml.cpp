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

#include "qmlc/qml.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <type_traits>

namespace qmlc {

namespace {

void check_time(double t, std::size_t index) {
  if (!std::isfinite(t) || t < 0.0) {
    std::ostringstream os;
    os << "letter " << index + 1 << ": time must be finite and >= 0, got " << t;
    throw InvalidCommandError(os.str());
  }
}

int switch_key(SwitchState s) {
  return (s.bias1 ? 4 : 0) | (s.bias2 ? 2 : 0) | (s.coupling ? 1 : 0);
}

std::string shortest(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_number(std::string_view field, int line, const char* what) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" +
                               std::string(field) + "'");
  }
  return v;
}

bool parse_bit(std::string_view field, int line) {
  if (field == "0") return false;
  if (field == "1") return true;
  throw ParseError(line, "switch value must be 0 or 1, got '" +
                             std::string(field) + "'");
}

double parse_time(std::string_view field, int line) {
  const double t = parse_number(field, line, "time");
  if (!std::isfinite(t) || t < 0.0) {
    throw ParseError(line, "time must be finite and >= 0, got '" +
                               std::string(field) + "'");
  }
  return t;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

int Command::dim() const {
  return std::holds_alternative<std::vector<Letter1>>(letters) ? 2 : 4;
}

std::size_t Command::size() const {
  return std::visit([](const auto& v) { return v.size(); }, letters);
}

std::vector<double> Command::times() const {
  return std::visit(
      [](const auto& v) {
        std::vector<double> out;
        out.reserve(v.size());
        for (const auto& l : v) out.push_back(l.t);
        return out;
      },
      letters);
}

Execution execute(const Command& cmd) {
  Execution result;
  result.unitary = identity(cmd.dim());
  result.empty_program = cmd.size() == 0;

  std::visit(
      [&](const auto& letters) {
        using L = typename std::decay_t<decltype(letters)>::value_type;
        std::map<int, SpectralExp> cache;
        for (std::size_t i = 0; i < letters.size(); ++i) {
          const L& letter = letters[i];
          check_time(letter.t, i);
          int key = 0;
          CMatrix h;
          if constexpr (std::is_same_v<L, Letter1>) {
            key = letter.idle ? 1 : 0;
            if (!cache.contains(key)) h = hamiltonian1(cmd.energies, letter.idle);
          } else {
            key = switch_key(letter.switches);
            if (!cache.contains(key))
              h = hamiltonian2(cmd.energies, letter.switches);
          }
          auto it = cache.find(key);
          if (it == cache.end()) it = cache.emplace(key, SpectralExp(h)).first;
          result.unitary = it->second(letter.t) * result.unitary;
        }
      },
      cmd.letters);
  return result;
}

std::string format_time(double t, TimeFormat format) {
  std::array<char, 128> buf{};
  if (format == TimeFormat::Fixed4) {
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), t,
                                   std::chars_format::fixed, 4);
    return std::string(buf.data(), res.ptr);
  }
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), t,
                                 std::chars_format::fixed);
  std::string s(buf.data(), res.ptr);
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    s += '.';
    dot = s.size() - 1;
  }
  const std::size_t decimals = s.size() - dot - 1;
  if (decimals < 4) s.append(4 - decimals, '0');
  return s;
}

std::string serialize(const Command& cmd, TimeFormat format) {
  std::string out;
  out += "gate " + (cmd.gate.empty() ? std::string("unnamed") : cmd.gate) + "\n";
  out += "dim " + std::to_string(cmd.dim()) + "\n";
  out += "energies " + shortest(cmd.energies.bias) + " " +
         shortest(cmd.energies.tunneling) + " " +
         shortest(cmd.energies.coupling) + "\n";
  std::visit(
      [&](const auto& letters) {
        using L = typename std::decay_t<decltype(letters)>::value_type;
        for (const L& l : letters) {
          if constexpr (std::is_same_v<L, Letter1>) {
            out += std::string("letter ") + (l.idle ? "1 " : "0 ") +
                   format_time(l.t, format) + "\n";
          } else {
            out += std::string("letter ") + (l.switches.bias1 ? "1 " : "0 ") +
                   (l.switches.bias2 ? "1 " : "0 ") +
                   (l.switches.coupling ? "1 " : "0 ") +
                   format_time(l.t, format) + "\n";
          }
        }
      },
      cmd.letters);
  return out;
}

Command parse(std::string_view text) {
  Command cmd;
  std::optional<int> dim;
  bool seen_gate = false;
  bool seen_energies = false;
  std::vector<Letter> letters4;
  std::vector<Letter1> letters2;

  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    const std::string_view key = fields[0];

    if (key == "gate") {
      if (fields.size() != 2) throw ParseError(line_no, "gate expects one name");
      if (seen_gate) throw ParseError(line_no, "duplicate gate header");
      cmd.gate = std::string(fields[1]);
      seen_gate = true;
    } else if (key == "dim") {
      if (fields.size() != 2) throw ParseError(line_no, "dim expects one value");
      if (dim) throw ParseError(line_no, "duplicate dim header");
      if (fields[1] == "2") {
        dim = 2;
      } else if (fields[1] == "4") {
        dim = 4;
      } else {
        throw ParseError(line_no, "dim must be 2 or 4");
      }
    } else if (key == "energies") {
      if (fields.size() != 4) {
        throw ParseError(line_no, "energies expects three values");
      }
      if (seen_energies) throw ParseError(line_no, "duplicate energies header");
      cmd.energies.bias = parse_number(fields[1], line_no, "energy");
      cmd.energies.tunneling = parse_number(fields[2], line_no, "energy");
      cmd.energies.coupling = parse_number(fields[3], line_no, "energy");
      try {
        cmd.energies.validate();
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      seen_energies = true;
    } else if (key == "letter") {
      if (!dim) throw ParseError(line_no, "dim header must precede letters");
      if (*dim == 4) {
        if (fields.size() != 5) {
          throw ParseError(line_no, "dim 4 letter expects 'letter e1 e2 l t'");
        }
        letters4.push_back(Letter{{parse_bit(fields[1], line_no),
                                   parse_bit(fields[2], line_no),
                                   parse_bit(fields[3], line_no)},
                                  parse_time(fields[4], line_no)});
      } else {
        if (fields.size() != 3) {
          throw ParseError(line_no, "dim 2 letter expects 'letter e t'");
        }
        letters2.push_back(
            Letter1{parse_bit(fields[1], line_no), parse_time(fields[2], line_no)});
      }
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!dim) throw ParseError(line_no, "missing dim header");
  if (*dim == 2) {
    cmd.letters = std::move(letters2);
  } else {
    cmd.letters = std::move(letters4);
  }
  return cmd;
}

Command load_command(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void save_command(const std::string& path, const Command& cmd,
                  TimeFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize(cmd, format);
}

}  // namespace qmlc
