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

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmlc/linalg.hpp"

namespace qmlc {

enum class QubitSide { First, Second };

struct GateTarget {
  std::string name;
  int dim = 0;
  CMatrix matrix;
  std::vector<double> params;
  // Set for i-kron-W (Second) and W-kron-i (First); `factor` then holds W.
  std::optional<QubitSide> embedded_side;
  CMatrix factor;
};

class NotUnitaryError : public std::invalid_argument {
 public:
  explicit NotUnitaryError(double defect);
  double defect() const { return defect_; }

 private:
  double defect_;
};

class UnknownGateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GateParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// c * U with det(c U) = 1, c = det(U)^(-1/dim) on the principal branch
/// (arg det in (-pi, pi]). Throws NotUnitaryError when U is not unitary to
/// 1e-10.
CMatrix su_project(const CMatrix& u);

/// |trace(G^dagger U)| / dim; 1 iff U equals G up to a global phase.
double phase_fidelity(const CMatrix& g, const CMatrix& u);

/// Named target gates with fixed SU phases. Names are case-insensitive:
///   not, sqrt-not, had, phs (needs phi), cnot, swap, qft4, phshift (phi
///   defaults to pi/2), i-kron-W and W-kron-i for W in {not, sqrt-not, had,
///   phs}.
/// Throws UnknownGateError or GateParameterError.
GateTarget library(std::string_view name, std::span<const double> params = {});
GateTarget library(std::string_view name, double phi);

/// Textbook (unprojected) matrix of a library gate.
CMatrix textbook_matrix(std::string_view name,
                        std::span<const double> params = {});

/// Splits "phs(0.5)" into {"phs", {0.5}}; plain names pass through.
struct GateSpec {
  std::string name;
  std::vector<double> params;
};
GateSpec parse_gate_spec(std::string_view text);

std::vector<std::string> library_names();

/// Inverse of parse_gate_spec: "phs(1.5707963267948966)". Parameters are
/// printed with shortest round-trip digits.
std::string gate_label(std::string_view name, std::span<const double> params);
std::string gate_label(const GateTarget& g);

}  // namespace qmlc
