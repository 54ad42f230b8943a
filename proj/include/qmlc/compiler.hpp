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
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmlc/device.hpp"
#include "qmlc/gates.hpp"
#include "qmlc/linalg.hpp"
#include "qmlc/multistart.hpp"
#include "qmlc/qml.hpp"

namespace qmlc {

enum class TemplateKind {
  TwoQubit15,       // H1 H2 H3 H4 repeated, 15 steps ending at H3
  OneQubitDevice3,  // deg, idle, deg on the one-qubit device
  EmbeddedSecond4,  // H4 H1 H4 H1: gates of the form I (x) W
  EmbeddedFirst4,   // H3 H1 H3 H1: gates of the form W (x) I
};

struct TotalTimeConstraint {
  double total = 0.0;  // 4 k pi / dE
  int k = 0;
};

/// A switch schedule with free durations. `sequence` lists steps in time
/// order; on the one-qubit device only `bias1` is meaningful (1 = idle).
struct Template {
  TemplateKind kind = TemplateKind::TwoQubit15;
  int dim = 4;
  std::vector<SwitchState> sequence;
  std::optional<TotalTimeConstraint> constraint;

  static Template two_qubit_15();
  static Template one_qubit_device_3();
  static Template embedded(QubitSide side);

  std::size_t size() const { return sequence.size(); }
  std::string_view name() const;
  std::vector<CMatrix> hamiltonians(const EnergyConfig& cfg) const;
  Command to_command(std::span<const double> times, const EnergyConfig& cfg,
                     std::string gate) const;
};

/// f_test and its gradient for a fixed target and template. Eigensystems of
/// the step Hamiltonians are computed once at construction.
class SequenceObjective {
 public:
  SequenceObjective(CMatrix target, const Template& tpl, const EnergyConfig& cfg);

  std::size_t size() const { return step_of_.size(); }
  CMatrix unitary(std::span<const double> times) const;
  double value(std::span<const double> times) const;
  /// Writes d f / d t_k into `grad` and returns f.
  double value_and_gradient(std::span<const double> times,
                            std::span<double> grad) const;

 private:
  void check_length(std::size_t n) const;

  CMatrix target_;
  std::vector<SpectralExp> exps_;
  std::vector<CMatrix> minus_i_h_;
  std::vector<std::size_t> step_of_;
};

/// sum_ij |G_ij - U_ij|^2 with U the evolution of `tpl` under `times`.
double f_test(const GateTarget& g, std::span<const double> times,
              const Template& tpl, const EnergyConfig& cfg);
std::vector<double> grad_f(const GateTarget& g, std::span<const double> times,
                           const Template& tpl, const EnergyConfig& cfg);

struct OptimizerConfig {
  std::size_t restarts = 200;
  int max_iters = 500;
  double t_min = 0.0;
  double t_max = 1000.0;
  double target_f = 1e-8;
  std::uint64_t seed = 1;
  std::size_t batch = 8;
  ExecPolicy policy = ExecPolicy::Parallel;

  void validate() const;
};

struct CompileResult {
  Template tpl;
  std::vector<double> times;
  double f_test = 0.0;          // recomputed at `times`
  double phase_fidelity = 0.0;  // diagnostic, phase-insensitive
  std::size_t restarts_used = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  std::optional<int> k;  // embedded scheme only
  std::string diagnostic;
  Command command;

  double total_time() const;
};

class NotSpecialUnitaryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fifteen-step synthesis of an SU(4) target.
CompileResult compile2(const GateTarget& g, const EnergyConfig& cfg,
                       const OptimizerConfig& opt);

/// Three-step deg/idle/deg synthesis on the one-qubit device.
CompileResult compile1_device(const GateTarget& w, const EnergyConfig& cfg,
                              const OptimizerConfig& opt);

/// Four-step synthesis of I (x) W (side = Second) or W (x) I (side = First)
/// with the total time pinned to 4 k pi / dE; t4 is eliminated. Without `k`
/// the smallest k in 1..100 that converges is used. Both sides share the
/// same time vector.
CompileResult compile1_embedded(const GateTarget& w, QubitSide side,
                                std::optional<int> k, const EnergyConfig& cfg,
                                const OptimizerConfig& opt);

/// -(E_J / dE) sigma_x.
CMatrix tau_operator(const EnergyConfig& cfg);

class ClosedFormDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ClosedForm {
  std::vector<double> times;  // deg, idle, deg (NOT and sqrt-not: one letter)
  int branch = 0;             // 0 = principal inverse-trig branches
};

/// Printed closed-form schedules for not, sqrt-not, had and phs(phi). The
/// result is checked by execution against the library gate to 1e-9.
/// Throws ClosedFormDomainError outside the formulas' domain.
ClosedForm closed_form_times(std::string_view gate, const EnergyConfig& cfg,
                             std::span<const double> params = {});
Command closed_form_command(std::string_view gate, const EnergyConfig& cfg,
                            std::span<const double> params = {});

}  // namespace qmlc
