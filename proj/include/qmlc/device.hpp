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

#include "qmlc/linalg.hpp"

namespace qmlc {

/// Device energies in Kelvin-equivalent units with hbar = k_B = 1, so a time
/// of 1 corresponds to hbar / (k_B * 1 K), about 7.64e-12 s.
struct EnergyConfig {
  double bias = 2.5;       // E_c, idle-point bias energy
  double tunneling = 0.1;  // E_J, fixed by the junction material
  double coupling = 0.1;   // E_L, mutual-inductor energy

  /// Throws std::invalid_argument unless E_c > 0, E_J > 0, E_L >= 0.
  void validate() const;

  friend bool operator==(const EnergyConfig&, const EnergyConfig&) = default;
};

/// Switch triple (e1, e2, l): bias of junction 1, bias of junction 2, inductor.
struct SwitchState {
  bool bias1 = false;
  bool bias2 = false;
  bool coupling = false;

  /// Exchanges the roles of the two junctions.
  constexpr SwitchState mirrored() const { return {bias2, bias1, coupling}; }

  friend constexpr bool operator==(const SwitchState&,
                                   const SwitchState&) = default;
};

inline constexpr SwitchState kBothIdle{true, true, false};     // H1
inline constexpr SwitchState kCoupled{false, false, true};     // H2
inline constexpr SwitchState kSecondIdle{false, true, false};  // H3
inline constexpr SwitchState kFirstIdle{true, false, false};   // H4

/// (E_c/2) sigma_z - (E_J/2) sigma_x when idle, -(E_J/2) sigma_x otherwise.
CMatrix hamiltonian1(const EnergyConfig& cfg, bool idle);

/// Two coupled junctions with identical E_J:
///   e1 E_c/2 sz(1) + e2 E_c/2 sz(2) - E_J/2 (sx(1) + sx(2)) - l E_L/2 sy sy.
CMatrix hamiltonian2(const EnergyConfig& cfg, SwitchState s);

/// arctan(E_J / E_c), pi/2 at the degeneracy point E_c = 0.
double mixing_angle(const EnergyConfig& cfg);

/// sqrt(E_J^2 + E_c^2).
double splitting(const EnergyConfig& cfg);

struct QubitBasisInfo {
  double mixing_angle;
  double splitting;
  // |+> = cos(eta/2)|down> + sin(eta/2)|up>, |-> = sin(eta/2)|down> -
  // cos(eta/2)|up>, with |up> = (1, 0).
  CVector plus_state;
  CVector minus_state;
  // Eigenvalues of the idle Hamiltonian on the two states: -dE/2 and +dE/2.
  double plus_energy;
  double minus_energy;
};

/// Eigenbasis of the idle Hamiltonian. Throws std::logic_error if the
/// eigen-relations fail to hold within 1e-10.
QubitBasisInfo idle_basis(const EnergyConfig& cfg);

}  // namespace qmlc
