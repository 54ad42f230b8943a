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

#include "qmlc/device.hpp"

#include <cmath>
#include <stdexcept>

namespace qmlc {

void EnergyConfig::validate() const {
  if (!(bias > 0.0) || !std::isfinite(bias)) {
    throw std::invalid_argument("E_c must be positive and finite");
  }
  if (!(tunneling > 0.0) || !std::isfinite(tunneling)) {
    throw std::invalid_argument("E_J must be positive and finite");
  }
  if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
    throw std::invalid_argument("E_L must be non-negative and finite");
  }
}

CMatrix hamiltonian1(const EnergyConfig& cfg, bool idle) {
  CMatrix h = -0.5 * cfg.tunneling * pauli(Pauli::X);
  if (idle) h += 0.5 * cfg.bias * pauli(Pauli::Z);
  return h;
}

CMatrix hamiltonian2(const EnergyConfig& cfg, SwitchState s) {
  static const CMatrix sz1 = embed(pauli(Pauli::Z), 0, 2);
  static const CMatrix sz2 = embed(pauli(Pauli::Z), 1, 2);
  static const CMatrix sx_sum =
      embed(pauli(Pauli::X), 0, 2) + embed(pauli(Pauli::X), 1, 2);
  static const CMatrix yy = tensor(pauli(Pauli::Y), pauli(Pauli::Y));

  CMatrix h = -0.5 * cfg.tunneling * sx_sum;
  if (s.bias1) h += 0.5 * cfg.bias * sz1;
  if (s.bias2) h += 0.5 * cfg.bias * sz2;
  if (s.coupling) h -= 0.5 * cfg.coupling * yy;
  return h;
}

double mixing_angle(const EnergyConfig& cfg) {
  return std::atan2(cfg.tunneling, cfg.bias);
}

double splitting(const EnergyConfig& cfg) {
  return std::hypot(cfg.tunneling, cfg.bias);
}

QubitBasisInfo idle_basis(const EnergyConfig& cfg) {
  QubitBasisInfo info;
  info.mixing_angle = mixing_angle(cfg);
  info.splitting = splitting(cfg);
  const double c = std::cos(info.mixing_angle / 2);
  const double s = std::sin(info.mixing_angle / 2);
  info.plus_state = CVector(2);
  info.plus_state << s, c;
  info.minus_state = CVector(2);
  info.minus_state << -c, s;
  info.plus_energy = -info.splitting / 2;
  info.minus_energy = info.splitting / 2;

  const CMatrix h = hamiltonian1(cfg, true);
  const double plus_residual =
      (h * info.plus_state - info.plus_energy * info.plus_state)
          .cwiseAbs()
          .maxCoeff();
  const double minus_residual =
      (h * info.minus_state - info.minus_energy * info.minus_state)
          .cwiseAbs()
          .maxCoeff();
  if (plus_residual > 1e-10 || minus_residual > 1e-10) {
    throw std::logic_error("idle basis does not diagonalize the idle Hamiltonian");
  }
  return info;
}

}  // namespace qmlc
