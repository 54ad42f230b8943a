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

#include "qmlc/gates.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qmlc {

namespace {

using namespace std::complex_literals;
using std::numbers::pi;

std::string not_unitary_message(double defect) {
  std::ostringstream os;
  os << "matrix is not unitary: max|U^dagger U - I| = " << defect;
  return os.str();
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::ranges::transform(out, out.begin(),
                         [](unsigned char c) { return std::tolower(c); });
  return out;
}

CMatrix pp(Pauli a, Pauli b) { return tensor(pauli(a), pauli(b)); }

bool takes_phase(std::string_view base) {
  return base == "phs" || base == "phshift";
}

double require_phase(std::string_view base, std::span<const double> params) {
  if (params.size() > 1) {
    throw GateParameterError(std::string(base) + " takes one parameter (phi)");
  }
  if (params.empty()) {
    if (base == "phshift") return pi / 2;
    throw GateParameterError(std::string(base) + " requires a phase phi");
  }
  return params[0];
}

void require_no_params(std::string_view base, std::span<const double> params) {
  if (!params.empty()) {
    throw GateParameterError(std::string(base) + " takes no parameters");
  }
}

// SU(2) representatives with the phases the tables are built against.
CMatrix one_qubit(std::string_view base, std::span<const double> params) {
  const CMatrix id = pauli(Pauli::I);
  const CMatrix x = pauli(Pauli::X);
  const CMatrix z = pauli(Pauli::Z);
  if (base == "not") {
    require_no_params(base, params);
    return 1i * x;
  }
  if (base == "sqrt-not") {
    require_no_params(base, params);
    return (id + 1i * x) / std::sqrt(2.0);
  }
  if (base == "had") {
    require_no_params(base, params);
    return 1i * (x + z) / std::sqrt(2.0);
  }
  if (base == "phs") {
    const double phi = require_phase(base, params);
    return std::cos(phi / 2) * id - 1i * std::sin(phi / 2) * z;
  }
  throw UnknownGateError("unknown one-qubit gate: " + std::string(base));
}

CMatrix two_qubit(std::string_view base, std::span<const double> params) {
  using enum Pauli;
  if (base == "cnot") {
    require_no_params(base, params);
    return std::exp(1i * pi / 4.0) / 2.0 *
           (-pp(Z, X) + pp(Z, I) + pp(I, X) + pp(I, I));
  }
  if (base == "swap") {
    require_no_params(base, params);
    return std::exp(1i * pi / 4.0) / 2.0 *
           (pp(X, X) + pp(Y, Y) + pp(Z, Z) + pp(I, I));
  }
  if (base == "qft4") {
    require_no_params(base, params);
    const double r = 2.0 * std::sqrt(2.0);
    return std::exp(3i * pi / 8.0) / r * (pp(X, Z) + pp(I, I)) +
           std::exp(-1i * pi / 8.0) / r * (pp(X, I) + pp(I, Z)) +
           std::exp(1i * pi / 8.0) / 2.0 * (pp(Z, X) - pp(Y, Y));
  }
  if (base == "phshift") {
    const double phi = require_phase(base, params);
    return 0.25 * (3.0 * std::exp(-1i * phi / 4.0) + std::exp(3i * phi / 4.0)) *
               pp(I, I) +
           0.5i * std::sin(phi / 2) * std::exp(1i * phi / 4.0) *
               (pp(Z, Z) - pp(Z, I) - pp(I, Z));
  }
  throw UnknownGateError("unknown two-qubit gate: " + std::string(base));
}

bool is_one_qubit(std::string_view base) {
  return base == "not" || base == "sqrt-not" || base == "had" || base == "phs";
}

bool is_two_qubit(std::string_view base) {
  return base == "cnot" || base == "swap" || base == "qft4" ||
         base == "phshift";
}

struct ParsedName {
  std::string base;
  std::optional<QubitSide> side;
};

ParsedName split_embedding(const std::string& name) {
  constexpr std::string_view prefix = "i-kron-";
  constexpr std::string_view suffix = "-kron-i";
  if (name.starts_with(prefix)) {
    return {name.substr(prefix.size()), QubitSide::Second};
  }
  if (name.ends_with(suffix)) {
    return {name.substr(0, name.size() - suffix.size()), QubitSide::First};
  }
  return {name, std::nullopt};
}

}  // namespace

NotUnitaryError::NotUnitaryError(double defect)
    : std::invalid_argument(not_unitary_message(defect)), defect_(defect) {}

CMatrix su_project(const CMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionMismatch("su_project: not square");
  const double defect = unitarity_defect(u);
  if (defect > 1e-10) throw NotUnitaryError(defect);
  const Complex det = u.determinant();
  // +0.0 keeps det = -1 on the +pi side of the cut.
  const double arg = std::atan2(det.imag() + 0.0, det.real());
  const double n = static_cast<double>(u.rows());
  const Complex c = std::polar(std::pow(std::abs(det), -1.0 / n), -arg / n);
  return c * u;
}

double phase_fidelity(const CMatrix& g, const CMatrix& u) {
  if (g.rows() != u.rows() || g.cols() != u.cols()) {
    throw DimensionMismatch("phase_fidelity: dimension mismatch");
  }
  return std::abs(hs_inner(g, u)) / static_cast<double>(g.rows());
}

GateTarget library(std::string_view name, std::span<const double> params) {
  const std::string lower = lowercase(name);
  const ParsedName parsed = split_embedding(lower);
  GateTarget g;
  g.name = lower;
  g.params.assign(params.begin(), params.end());
  if (takes_phase(parsed.base) && g.params.empty()) {
    g.params.push_back(require_phase(parsed.base, params));
  }
  if (!takes_phase(parsed.base) && !g.params.empty()) {
    throw GateParameterError(lower + " takes no parameters");
  }

  if (parsed.side) {
    if (!is_one_qubit(parsed.base)) {
      throw UnknownGateError("only one-qubit gates can be embedded: " + lower);
    }
    g.factor = one_qubit(parsed.base, g.params);
    g.embedded_side = parsed.side;
    g.matrix = *parsed.side == QubitSide::Second
                   ? tensor(pauli(Pauli::I), g.factor)
                   : tensor(g.factor, pauli(Pauli::I));
    g.dim = 4;
  } else if (is_one_qubit(parsed.base)) {
    g.matrix = one_qubit(parsed.base, g.params);
    g.dim = 2;
  } else if (is_two_qubit(parsed.base)) {
    g.matrix = two_qubit(parsed.base, g.params);
    g.dim = 4;
  } else {
    throw UnknownGateError("unknown gate: " + std::string(name));
  }
  return g;
}

GateTarget library(std::string_view name, double phi) {
  const double params[] = {phi};
  return library(name, params);
}

CMatrix textbook_matrix(std::string_view name, std::span<const double> params) {
  const std::string lower = lowercase(name);
  const ParsedName parsed = split_embedding(lower);
  const auto one = [&](std::string_view base) -> CMatrix {
    CMatrix m(2, 2);
    if (base == "not") {
      require_no_params(base, params);
      m << 0.0, 1.0, 1.0, 0.0;
    } else if (base == "sqrt-not") {
      require_no_params(base, params);
      const Complex a = std::exp(-1i * pi / 4.0) / std::sqrt(2.0);
      const Complex b = std::exp(1i * pi / 4.0) / std::sqrt(2.0);
      m << a, b, b, a;
    } else if (base == "had") {
      require_no_params(base, params);
      m << 1.0, 1.0, 1.0, -1.0;
      m /= std::sqrt(2.0);
    } else if (base == "phs") {
      const double phi = require_phase(base, params);
      m << 1.0, 0.0, 0.0, std::exp(1i * phi);
    } else {
      throw UnknownGateError("unknown gate: " + std::string(name));
    }
    return m;
  };

  if (parsed.side) {
    const CMatrix w = one(parsed.base);
    return *parsed.side == QubitSide::Second ? tensor(pauli(Pauli::I), w)
                                             : tensor(w, pauli(Pauli::I));
  }
  if (is_one_qubit(parsed.base)) return one(parsed.base);

  CMatrix m = CMatrix::Zero(4, 4);
  if (parsed.base == "cnot") {
    require_no_params(parsed.base, params);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  } else if (parsed.base == "swap") {
    require_no_params(parsed.base, params);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  } else if (parsed.base == "qft4") {
    require_no_params(parsed.base, params);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = 0.5 * std::pow(1i, r * c);
  } else if (parsed.base == "phshift") {
    const double phi = require_phase(parsed.base, params);
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    m(3, 3) = std::exp(1i * phi);
  } else {
    throw UnknownGateError("unknown gate: " + std::string(name));
  }
  return m;
}

GateSpec parse_gate_spec(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) return {std::string(text), {}};
  if (!text.ends_with(")")) {
    throw GateParameterError("malformed gate spec: " + std::string(text));
  }
  GateSpec spec{std::string(text.substr(0, open)), {}};
  std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  while (!inner.empty()) {
    const auto comma = inner.find(',');
    std::string_view item = inner.substr(0, comma);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw GateParameterError("malformed gate parameter: " + std::string(item));
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return spec;
}

std::vector<std::string> library_names() {
  std::vector<std::string> names = {"not",  "sqrt-not", "had",  "phs",
                                    "cnot", "swap",     "qft4", "phshift"};
  for (const char* w : {"not", "sqrt-not", "had", "phs"}) {
    names.push_back(std::string("i-kron-") + w);
    names.push_back(std::string(w) + "-kron-i");
  }
  return names;
}

std::string gate_label(std::string_view name, std::span<const double> params) {
  std::string out(name);
  if (params.empty()) return out;
  out += '(';
  char buf[32];
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    const auto res = std::to_chars(buf, buf + sizeof buf, params[i]);
    out.append(buf, res.ptr);
  }
  out += ')';
  return out;
}

std::string gate_label(const GateTarget& g) { return gate_label(g.name, g.params); }

}  // namespace qmlc
