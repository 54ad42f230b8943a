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

#include "qmlc/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "qmlc/optimizer.hpp"

namespace qmlc {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint8_t switch_key(SwitchState s) {
  return static_cast<std::uint8_t>((s.bias1 ? 4 : 0) | (s.bias2 ? 2 : 0) |
                                   (s.coupling ? 1 : 0));
}

std::string lower_copy(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

double total_of(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0);
}

}  // namespace

Template Template::two_qubit_15() {
  Template t;
  t.kind = TemplateKind::TwoQubit15;
  t.dim = 4;
  const SwitchState cycle[] = {kBothIdle, kCoupled, kSecondIdle, kFirstIdle};
  for (int i = 0; i < 15; ++i) t.sequence.push_back(cycle[i % 4]);
  return t;
}

Template Template::one_qubit_device_3() {
  Template t;
  t.kind = TemplateKind::OneQubitDevice3;
  t.dim = 2;
  t.sequence = {SwitchState{false, false, false}, SwitchState{true, false, false},
                SwitchState{false, false, false}};
  return t;
}

Template Template::embedded(QubitSide side) {
  Template t;
  t.dim = 4;
  if (side == QubitSide::Second) {
    t.kind = TemplateKind::EmbeddedSecond4;
    t.sequence = {kFirstIdle, kBothIdle, kFirstIdle, kBothIdle};
  } else {
    t.kind = TemplateKind::EmbeddedFirst4;
    t.sequence = {kSecondIdle, kBothIdle, kSecondIdle, kBothIdle};
  }
  return t;
}

std::string_view Template::name() const {
  switch (kind) {
    case TemplateKind::TwoQubit15:
      return "two_qubit_15";
    case TemplateKind::OneQubitDevice3:
      return "one_qubit_device_3";
    case TemplateKind::EmbeddedSecond4:
      return "embedded_second_4";
    case TemplateKind::EmbeddedFirst4:
      return "embedded_first_4";
  }
  return "unknown";
}

std::vector<CMatrix> Template::hamiltonians(const EnergyConfig& cfg) const {
  std::vector<CMatrix> out;
  out.reserve(sequence.size());
  for (const auto& s : sequence) {
    out.push_back(dim == 2 ? hamiltonian1(cfg, s.bias1) : hamiltonian2(cfg, s));
  }
  return out;
}

Command Template::to_command(std::span<const double> times,
                             const EnergyConfig& cfg, std::string gate) const {
  if (times.size() != sequence.size()) {
    throw std::invalid_argument("template has " + std::to_string(sequence.size()) +
                                " steps but " + std::to_string(times.size()) +
                                " times were given");
  }
  Command cmd;
  cmd.gate = std::move(gate);
  cmd.energies = cfg;
  if (dim == 2) {
    std::vector<Letter1> letters;
    for (std::size_t i = 0; i < times.size(); ++i)
      letters.push_back({sequence[i].bias1, times[i]});
    cmd.letters = std::move(letters);
  } else {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < times.size(); ++i)
      letters.push_back({sequence[i], times[i]});
    cmd.letters = std::move(letters);
  }
  return cmd;
}

SequenceObjective::SequenceObjective(CMatrix target, const Template& tpl,
                                     const EnergyConfig& cfg)
    : target_(std::move(target)) {
  if (target_.rows() != tpl.dim || target_.cols() != tpl.dim) {
    throw DimensionMismatch("target dimension does not match the template");
  }
  std::vector<std::uint8_t> keys;
  const auto hs = tpl.hamiltonians(cfg);
  for (std::size_t i = 0; i < tpl.size(); ++i) {
    const std::uint8_t key = tpl.dim == 2 ? (tpl.sequence[i].bias1 ? 1 : 0)
                                          : switch_key(tpl.sequence[i]);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      exps_.emplace_back(hs[i]);
      minus_i_h_.push_back(Complex(0.0, -1.0) * hs[i]);
      step_of_.push_back(keys.size() - 1);
    } else {
      step_of_.push_back(static_cast<std::size_t>(it - keys.begin()));
    }
  }
}

void SequenceObjective::check_length(std::size_t n) const {
  if (n != step_of_.size()) {
    throw std::invalid_argument("expected " + std::to_string(step_of_.size()) +
                                " times, got " + std::to_string(n));
  }
}

CMatrix SequenceObjective::unitary(std::span<const double> times) const {
  check_length(times.size());
  CMatrix u = identity(target_.rows());
  for (std::size_t k = 0; k < times.size(); ++k) {
    u = exps_[step_of_[k]](times[k]) * u;
  }
  return u;
}

double SequenceObjective::value(std::span<const double> times) const {
  return (target_ - unitary(times)).squaredNorm();
}

double SequenceObjective::value_and_gradient(std::span<const double> times,
                                             std::span<double> grad) const {
  check_length(times.size());
  if (grad.size() != times.size()) {
    throw std::invalid_argument("gradient buffer has the wrong length");
  }
  const std::size_t n = times.size();
  const Eigen::Index d = target_.rows();
  std::vector<CMatrix> steps(n);
  // prefix[k] = U_{k-1} ... U_0
  std::vector<CMatrix> prefix(n + 1);
  prefix[0] = identity(d);
  for (std::size_t k = 0; k < n; ++k) {
    steps[k] = exps_[step_of_[k]](times[k]);
    prefix[k + 1] = steps[k] * prefix[k];
  }
  const CMatrix diff = target_ - prefix[n];
  const CMatrix diff_adj = diff.adjoint();

  // dU/dt_k = S_k (-i H_k) prefix[k+1], S_k = U_{n-1} ... U_{k+1}.
  CMatrix suffix = identity(d);
  for (std::size_t k = n; k-- > 0;) {
    const CMatrix x = prefix[k + 1] * diff_adj * suffix;
    const CMatrix& g = minus_i_h_[step_of_[k]];
    grad[k] = -2.0 * (x.cwiseProduct(g.transpose())).sum().real();
    suffix = suffix * steps[k];
  }
  return diff.squaredNorm();
}

double f_test(const GateTarget& g, std::span<const double> times,
              const Template& tpl, const EnergyConfig& cfg) {
  return SequenceObjective(g.matrix, tpl, cfg).value(times);
}

std::vector<double> grad_f(const GateTarget& g, std::span<const double> times,
                           const Template& tpl, const EnergyConfig& cfg) {
  std::vector<double> grad(times.size());
  SequenceObjective(g.matrix, tpl, cfg).value_and_gradient(times, grad);
  return grad;
}

void OptimizerConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (batch < 1) throw std::invalid_argument("batch must be at least 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  if (!(t_min >= 0.0 && t_min < t_max && std::isfinite(t_max))) {
    throw std::invalid_argument("time bounds must satisfy 0 <= t_min < t_max");
  }
  if (!(target_f > 0.0)) throw std::invalid_argument("target_f must be positive");
}

double CompileResult::total_time() const { return total_of(times); }

namespace {

LbfgsOptions polish_options(const OptimizerConfig& opt) {
  LbfgsOptions lo;
  lo.max_iters = opt.max_iters;
  lo.stop_f = opt.target_f * 1e-3;
  return lo;
}

MultiStartConfig multistart_config(const OptimizerConfig& opt) {
  return {opt.restarts, opt.batch, opt.target_f};
}

CompileResult box_compile(const GateTarget& g, const Template& tpl,
                          const EnergyConfig& cfg, const OptimizerConfig& opt) {
  const SequenceObjective objective(g.matrix, tpl, cfg);
  const Objective fn = [&objective](std::span<const double> x,
                                    std::span<double> grad) {
    return objective.value_and_gradient(x, grad);
  };
  const Projection project = box_projection(opt.t_min, opt.t_max);
  const LbfgsOptions lo = polish_options(opt);
  const std::size_t n = tpl.size();

  const RestartFn restart = [&](std::size_t index) {
    auto rng = restart_rng(opt.seed, index);
    std::uniform_real_distribution<double> u(opt.t_min, opt.t_max);
    std::vector<double> x0(n);
    for (auto& v : x0) v = u(rng);
    const LbfgsResult r = minimize_projected_lbfgs(fn, project, std::move(x0), lo);
    return RestartOutcome{index, r.x, r.f, r.iterations};
  };
  const MultiStartResult ms =
      multistart(restart, multistart_config(opt), opt.policy);

  CompileResult res;
  res.tpl = tpl;
  res.times = ms.best.x;
  res.f_test = f_test(g, res.times, tpl, cfg);
  res.converged = res.f_test <= opt.target_f;
  res.restarts_used = ms.restarts_used;
  res.seed = opt.seed;
  res.command = tpl.to_command(res.times, cfg, gate_label(g));
  res.phase_fidelity = phase_fidelity(g.matrix, execute(res.command).unitary);
  if (!res.converged) {
    std::ostringstream os;
    os << "best f_test " << res.f_test << " after " << res.restarts_used
       << " restarts is above the target " << opt.target_f
       << "; try more restarts or iterations";
    res.diagnostic = os.str();
  }
  return res;
}

}  // namespace

CompileResult compile2(const GateTarget& g, const EnergyConfig& cfg,
                       const OptimizerConfig& opt) {
  cfg.validate();
  opt.validate();
  if (g.dim != 4 || g.matrix.rows() != 4 || g.matrix.cols() != 4) {
    throw DimensionMismatch("compile2 expects a 4x4 target");
  }
  const double defect = unitarity_defect(g.matrix);
  if (defect > 1e-10) throw NotUnitaryError(defect);
  if (std::abs(g.matrix.determinant() - 1.0) > 1e-8) {
    throw NotSpecialUnitaryError(
        "target determinant is not 1; apply su_project first");
  }
  return box_compile(g, Template::two_qubit_15(), cfg, opt);
}

CompileResult compile1_device(const GateTarget& w, const EnergyConfig& cfg,
                              const OptimizerConfig& opt) {
  cfg.validate();
  opt.validate();
  if (w.dim != 2 || w.matrix.rows() != 2 || w.matrix.cols() != 2) {
    throw DimensionMismatch("compile1_device expects a 2x2 target");
  }
  const double defect = unitarity_defect(w.matrix);
  if (defect > 1e-10) throw NotUnitaryError(defect);
  if (std::abs(w.matrix.determinant() - 1.0) > 1e-8) {
    throw NotSpecialUnitaryError(
        "target determinant is not 1; apply su_project first");
  }
  return box_compile(w, Template::one_qubit_device_3(), cfg, opt);
}

namespace {

struct EmbeddedAttempt {
  MultiStartResult ms;
  double total = 0.0;
};

EmbeddedAttempt embedded_attempt(const SequenceObjective& objective,
                                 double total, const OptimizerConfig& opt) {
  // x holds t1..t3; t4 = total - sum(x). With t4 eliminated,
  // df/dt_i(reduced) = df/dt_i - df/dt4.
  const Objective fn = [&objective, total](std::span<const double> x,
                                           std::span<double> grad) {
    const double t[4] = {x[0], x[1], x[2],
                         std::max(0.0, total - x[0] - x[1] - x[2])};
    double g[4];
    const double f = objective.value_and_gradient(t, g);
    for (int i = 0; i < 3; ++i) grad[i] = g[i] - g[3];
    return f;
  };
  const Projection project = capped_simplex_projection(total);
  const LbfgsOptions lo = polish_options(opt);

  const RestartFn restart = [&](std::size_t index) {
    auto rng = restart_rng(opt.seed, index);
    std::exponential_distribution<double> e(1.0);
    double w[4];
    for (auto& v : w) v = e(rng);
    const double s = w[0] + w[1] + w[2] + w[3];
    std::vector<double> x0 = {total * w[0] / s, total * w[1] / s,
                              total * w[2] / s};
    const LbfgsResult r = minimize_projected_lbfgs(fn, project, std::move(x0), lo);
    return RestartOutcome{index, r.x, r.f, r.iterations};
  };
  return {multistart(restart, multistart_config(opt), opt.policy), total};
}

}  // namespace

CompileResult compile1_embedded(const GateTarget& w, QubitSide side,
                                std::optional<int> k, const EnergyConfig& cfg,
                                const OptimizerConfig& opt) {
  cfg.validate();
  opt.validate();
  CMatrix factor;
  std::string base;
  if (w.dim == 2) {
    factor = w.matrix;
    base = w.name;
  } else if (w.embedded_side) {
    factor = w.factor;
    const std::string& n = w.name;
    base = *w.embedded_side == QubitSide::Second ? n.substr(7)
                                                 : n.substr(0, n.size() - 7);
  } else {
    throw DimensionMismatch("compile1_embedded expects a one-qubit target");
  }
  if (factor.rows() != 2 || factor.cols() != 2) {
    throw DimensionMismatch("compile1_embedded expects a 2x2 factor");
  }
  const double defect = unitarity_defect(factor);
  if (defect > 1e-10) throw NotUnitaryError(defect);
  if (std::abs(factor.determinant() - 1.0) > 1e-8) {
    throw NotSpecialUnitaryError(
        "target determinant is not 1; apply su_project first");
  }
  if (k && *k < 1) throw std::invalid_argument("k must be at least 1");

  // Solved in the second-qubit frame; the first-qubit form is its mirror.
  const Template second = Template::embedded(QubitSide::Second);
  const SequenceObjective objective(tensor(identity(2), factor), second, cfg);
  const double period = 4.0 * kPi / splitting(cfg);

  const int k_first = k ? *k : 1;
  const int k_last = k ? *k : 100;
  EmbeddedAttempt best;
  int best_k = k_first;
  std::size_t restarts_total = 0;
  for (int kk = k_first; kk <= k_last; ++kk) {
    EmbeddedAttempt a = embedded_attempt(objective, kk * period, opt);
    restarts_total += a.ms.restarts_used;
    if (kk == k_first || a.ms.best.f < best.ms.best.f) {
      best = std::move(a);
      best_k = kk;
    }
    if (best.ms.converged) break;
  }

  const auto& x = best.ms.best.x;
  const double t4 = std::max(0.0, best.total - x[0] - x[1] - x[2]);

  CompileResult res;
  res.tpl = Template::embedded(side);
  res.tpl.constraint = TotalTimeConstraint{best.total, best_k};
  res.times = {x[0], x[1], x[2], t4};
  res.k = best_k;
  res.seed = opt.seed;
  res.restarts_used = restarts_total;

  GateTarget target;
  target.dim = 4;
  target.factor = factor;
  target.embedded_side = side;
  target.params = w.params;
  if (side == QubitSide::Second) {
    target.name = "i-kron-" + base;
    target.matrix = tensor(identity(2), factor);
  } else {
    target.name = base + "-kron-i";
    target.matrix = tensor(factor, identity(2));
  }
  res.f_test = f_test(target, res.times, res.tpl, cfg);
  res.converged = res.f_test <= opt.target_f;
  res.command = res.tpl.to_command(res.times, cfg, gate_label(target));
  res.phase_fidelity = phase_fidelity(target.matrix, execute(res.command).unitary);
  if (!res.converged) {
    std::ostringstream os;
    os << "no restart reached f_test <= " << opt.target_f << " (best "
       << res.f_test << ") with k = " << best_k;
    if (k) {
      os << "; the total time 4k pi/dE may be too short, try a larger k";
    } else {
      os << " after scanning k = 1.." << k_last << "; try a larger k";
    }
    res.diagnostic = os.str();
  }
  return res;
}

CMatrix tau_operator(const EnergyConfig& cfg) {
  return -(cfg.tunneling / splitting(cfg)) * pauli(Pauli::X);
}

namespace {

struct Candidate {
  std::vector<double> times;
  std::vector<bool> idle;
};

CMatrix run_candidate(const Candidate& c, const EnergyConfig& cfg) {
  CMatrix u = identity(2);
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    u = expm_hermitian(hamiltonian1(cfg, c.idle[i]), c.times[i]) * u;
  }
  return u;
}

void require_domain(bool ok, std::string_view gate, std::string_view what) {
  if (!ok) {
    throw ClosedFormDomainError(
        "closed form for " + std::string(gate) + " is undefined here (" +
        std::string(what) + "); use compile1_device instead");
  }
}

// Normalizes an angle into [0, 2 pi * period) so that candidate times stay
// non-negative.
double wrap_positive(double angle, double period) {
  double a = std::fmod(angle, period);
  if (a < 0) a += period;
  return a;
}

}  // namespace

ClosedForm closed_form_times(std::string_view gate, const EnergyConfig& cfg,
                             std::span<const double> params) {
  cfg.validate();
  const std::string name = lower_copy(gate);
  const double ec = cfg.bias;
  const double ej = cfg.tunneling;
  const double de = splitting(cfg);

  std::vector<Candidate> candidates;
  GateTarget target = library(name, params);
  if (target.dim != 2) {
    throw UnknownGateError("no closed form for " + name);
  }

  if (name == "not") {
    candidates.push_back({{kPi / ej}, {false}});
  } else if (name == "sqrt-not") {
    candidates.push_back({{kPi / (2.0 * ej)}, {false}});
  } else if (name == "had") {
    const double a = (ej + ec) / (2.0 * ec);
    const double b = de / (std::sqrt(2.0) * ec);
    require_domain(a >= 0.0 && a <= 1.0, name, "(E_J + E_c)/(2 E_c) > 1");
    require_domain(b <= 1.0, name, "dE/(sqrt 2 E_c) > 1");
    const double acos_p = std::acos(std::sqrt(a));
    const double asin_p = std::asin(b);
    for (double ac : {acos_p, kPi - acos_p}) {
      for (double as : {asin_p, kPi - asin_p}) {
        const double t1 = 2.0 * (ac + kPi / 2.0) / ej;
        const double t2 = 2.0 * (as + kPi) / de;
        candidates.push_back({{t1, t2, t1}, {false, true, false}});
      }
    }
  } else if (name == "phs") {
    const double phi = target.params.at(0);
    const double c2 = std::cos(phi / 2.0);
    require_domain(std::abs(c2) > 1e-12, name, "cos(phi/2) = 0");
    const double inner = -1.0 + 2.0 * ec * ec / (de * de) + std::cos(phi);
    require_domain(inner >= 0.0, name, "negative inner radicand");
    const double outer =
        2.0 - std::sqrt(2.0) * de * std::sqrt(inner) / (ec * c2);
    require_domain(outer >= 0.0, name, "negative outer radicand");
    const double a = 0.5 * std::sqrt(outer);
    require_domain(a <= 1.0, name, "arccos argument above 1");
    const double b = de * std::sin(phi / 2.0) / ec;
    require_domain(std::abs(b) <= 1.0, name, "arcsin argument outside [-1, 1]");
    const double acos_p = std::acos(a);
    const double asin_p = std::asin(b);
    // exp(-i t H_deg) has period 4 pi / E_J, exp(-i t H_id) 4 pi / dE.
    for (double ac : {acos_p, kPi - acos_p}) {
      for (double as : {asin_p, kPi - asin_p}) {
        const double t1 = wrap_positive(2.0 * (ac + kPi / 2.0), 4.0 * kPi) / ej;
        const double t2 = wrap_positive(2.0 * as, 4.0 * kPi) / de;
        candidates.push_back({{t1, t2, t1}, {false, true, false}});
      }
    }
  } else {
    throw UnknownGateError("no closed form for " + name);
  }

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (max_abs(run_candidate(candidates[i], cfg) - target.matrix) <= 1e-9) {
      return {candidates[i].times, static_cast<int>(i)};
    }
  }
  throw ClosedFormDomainError("closed form for " + name +
                              " does not reproduce the gate at these energies; "
                              "use compile1_device instead");
}

Command closed_form_command(std::string_view gate, const EnergyConfig& cfg,
                            std::span<const double> params) {
  const ClosedForm cf = closed_form_times(gate, cfg, params);
  const GateTarget g = library(gate, params);
  Command cmd;
  cmd.gate = gate_label(g);
  cmd.energies = cfg;
  std::vector<Letter1> letters;
  if (cf.times.size() == 1) {
    letters.push_back({false, cf.times[0]});
  } else {
    letters = {{false, cf.times[0]}, {true, cf.times[1]}, {false, cf.times[2]}};
  }
  cmd.letters = std::move(letters);
  return cmd;
}

}  // namespace qmlc
