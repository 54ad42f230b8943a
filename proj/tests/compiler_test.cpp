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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_util.hpp"

namespace qmlc {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_times(std::mt19937_64& rng, std::size_t n, double hi) {
  std::uniform_real_distribution<double> u(0.0, hi);
  std::vector<double> t(n);
  for (auto& v : t) v = u(rng);
  return t;
}

OptimizerConfig quick(std::uint64_t seed = 1) {
  OptimizerConfig o;
  o.seed = seed;
  o.restarts = 64;
  return o;
}

TEST(Template, Sequences) {
  const Template t = Template::two_qubit_15();
  ASSERT_EQ(t.size(), 15u);
  EXPECT_EQ(t.sequence[0], kBothIdle);
  EXPECT_EQ(t.sequence[1], kCoupled);
  EXPECT_EQ(t.sequence[4], kBothIdle);
  EXPECT_EQ(t.sequence[14], kSecondIdle);

  const Template s = Template::embedded(QubitSide::Second);
  EXPECT_EQ(s.sequence, (std::vector<SwitchState>{kFirstIdle, kBothIdle, kFirstIdle, kBothIdle}));
  const Template f = Template::embedded(QubitSide::First);
  EXPECT_EQ(f.sequence, (std::vector<SwitchState>{kSecondIdle, kBothIdle, kSecondIdle, kBothIdle}));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(f.sequence[i], s.sequence[i].mirrored());

  const Template d = Template::one_qubit_device_3();
  EXPECT_EQ(d.dim, 2);
  EXPECT_FALSE(d.sequence[0].bias1);
  EXPECT_TRUE(d.sequence[1].bias1);
}

TEST(Template, CommandMatchesExecute) {
  std::mt19937_64 rng(2);
  const EnergyConfig cfg;
  const Template t = Template::two_qubit_15();
  const auto times = random_times(rng, 15, 500.0);
  const SequenceObjective obj(library("cnot").matrix, t, cfg);
  EXPECT_LE(max_abs(obj.unitary(times) - execute(t.to_command(times, cfg, "cnot")).unitary),
            1e-12);
  EXPECT_THROW(t.to_command(std::vector<double>(3), cfg, "x"), std::invalid_argument);
}

TEST(FTest, AlgebraicIdentities) {
  std::mt19937_64 rng(3);
  const EnergyConfig cfg;
  const Template t = Template::two_qubit_15();
  const auto times = random_times(rng, 15, 1000.0);
  const GateTarget g = library("swap");
  const CMatrix u = SequenceObjective(g.matrix, t, cfg).unitary(times);
  const double f = f_test(g, times, t, cfg);
  EXPECT_NEAR(f, 8.0 - 2.0 * hs_inner(g.matrix, u).real(), 1e-10);
  EXPECT_GE(phase_fidelity(g.matrix, u), 1.0 - f / 8.0 - 1e-12);

  GateTarget minus_u{"neg", 4, -u, {}, std::nullopt, {}};
  EXPECT_NEAR(f_test(minus_u, times, t, cfg), 16.0, 1e-10);
  GateTarget exact{"u", 4, u, {}, std::nullopt, {}};
  EXPECT_NEAR(f_test(exact, times, t, cfg), 0.0, 1e-20);
  for (double gk : grad_f(exact, times, t, cfg)) EXPECT_NEAR(gk, 0.0, 1e-10);
  EXPECT_THROW(f_test(g, std::vector<double>(14), t, cfg), std::invalid_argument);
}

TEST(FTest, PublishedTwoQubitCommands) {
  // Reference values from an independent numpy evaluation.
  const EnergyConfig cfg;
  const Template t = Template::two_qubit_15();
  struct Case {
    const char* gate;
    std::vector<double> times;
    double f;
  };
  const Case cases[] = {
      {"cnot",
       {102.7757, 158.8193, 909.9617, 130.0504, 300.7220, 143.9878, 101.0584, 900.5691,
        151.5296, 83.4085, 161.0839, 901.9591, 699.3097, 191.4272, 101.2086},
       2.863634216836725e-06},
      {"swap",
       {700.5872, 205.2390, 139.7456, 199.3881, 130.4966, 115.8947, 110.9584, 200.5504,
        120.2794, 784.0008, 798.0702, 129.1358, 501.6780, 130.0444, 160.2219},
       9.496690912307044e-08},
      {"qft4",
       {710.2581, 84.8635, 159.4397, 142.5689, 133.2760, 653.3505, 133.4825, 924.2883,
        173.8055, 633.4525, 701.2262, 131.3048, 849.6562, 128.8483, 150.0286},
       1.0374474279148034e-07},
      {"phshift",
       {110.7116, 902.6813, 120.3082, 397.8240, 109.4998, 175.8195, 521.3209, 122.5053,
        102.2305, 795.3231, 108.9077, 198.7137, 159.0513, 888.0009, 100.7132},
       1.2108485101235698e-07},
  };
  for (const auto& c : cases) {
    EXPECT_NEAR(f_test(library(c.gate), c.times, t, cfg), c.f, 1e-13) << c.gate;
  }
}

TEST(FTest, PublishedEmbeddedCommands) {
  const EnergyConfig cfg;
  struct Case {
    const char* w;
    std::vector<double> times;
    double f;
  };
  const Case cases[] = {
      {"not", {133.6621, 104.2929, 102.2461, 111.8267}, 2.6160288789066893e-08},
      {"had", {113.3151, 111.1253, 109.4076, 118.1799}, 1.6706127176893343e-08},
      {"sqrt-not", {115.7315, 114.3695, 100.0236, 121.9033}, 8.101269983550075e-09},
      {"phs", {114.9978, 109.2394, 115.3838, 112.4068}, 4.410496486367802e-08},
  };
  for (const auto& c : cases) {
    const std::vector<double> phi = {kPi / 2};
    const std::span<const double> params =
        std::string(c.w) == "phs" ? std::span<const double>(phi) : std::span<const double>();
    const double second = f_test(library(std::string("i-kron-") + c.w, params), c.times,
                                 Template::embedded(QubitSide::Second), cfg);
    const double first = f_test(library(std::string(c.w) + "-kron-i", params), c.times,
                                Template::embedded(QubitSide::First), cfg);
    EXPECT_NEAR(second, c.f, 1e-14) << c.w;
    EXPECT_NEAR(first, second, 1e-14) << c.w;
  }
}

void expect_gradient_matches_differences(const Template& tpl, const CMatrix& target,
                                         double t_hi, std::uint64_t seed) {
  const EnergyConfig cfg;
  const SequenceObjective obj(target, tpl, cfg);
  std::mt19937_64 rng(seed);
  const double h = 1e-5;
  for (int point = 0; point < 50; ++point) {
    auto t = random_times(rng, tpl.size(), t_hi);
    std::vector<double> g(t.size());
    obj.value_and_gradient(t, g);
    for (std::size_t k = 0; k < t.size(); ++k) {
      auto tp = t, tm = t;
      tp[k] += h;
      tm[k] -= h;
      const double fd = (obj.value(tp) - obj.value(tm)) / (2 * h);
      EXPECT_LE(std::abs(g[k] - fd), 1e-5 * std::max(std::abs(fd), 1e-3))
          << tpl.name() << " point " << point << " component " << k;
    }
  }
}

TEST(GradF, MatchesCentralDifferencesOnEveryTemplate) {
  expect_gradient_matches_differences(Template::two_qubit_15(), library("cnot").matrix,
                                      1000.0, 1);
  expect_gradient_matches_differences(Template::embedded(QubitSide::Second),
                                      library("i-kron-had").matrix, 200.0, 2);
  expect_gradient_matches_differences(Template::embedded(QubitSide::First),
                                      library("not-kron-i").matrix, 200.0, 3);
  expect_gradient_matches_differences(Template::one_qubit_device_3(),
                                      library("had").matrix, 1000.0, 4);
}

TEST(GradF, FirstOrderTermAtZeroTimes) {
  // At t = 0, dU/dt_k = -i H_k, so df/dt_k = -2 Re tr((G - I)^dagger (-i H_k)).
  const EnergyConfig cfg;
  const Template t = Template::two_qubit_15();
  const GateTarget g = library("qft4");
  const auto grad = grad_f(g, std::vector<double>(15, 0.0), t, cfg);
  const auto hs = t.hamiltonians(cfg);
  const CMatrix d = g.matrix - identity(4);
  for (std::size_t k = 0; k < 15; ++k) {
    const double expected =
        -2.0 * (d.adjoint() * (Complex(0.0, -1.0) * hs[k])).trace().real();
    EXPECT_NEAR(grad[k], expected, 1e-12) << k;
  }
}

TEST(OptimizerConfig, Validation) {
  OptimizerConfig o;
  EXPECT_NO_THROW(o.validate());
  o.t_min = 5;
  o.t_max = 5;
  EXPECT_THROW(o.validate(), std::invalid_argument);
  o = {};
  o.target_f = 0;
  EXPECT_THROW(o.validate(), std::invalid_argument);
  o = {};
  o.restarts = 0;
  EXPECT_THROW(o.validate(), std::invalid_argument);
}

TEST(Compile2, ReachesTargetForCnotAndIsDeterministic) {
  const EnergyConfig cfg;
  const CompileResult a = compile2(library("cnot"), cfg, quick(7));
  EXPECT_TRUE(a.converged);
  EXPECT_LE(a.f_test, 1e-8);
  EXPECT_EQ(a.times.size(), 15u);
  EXPECT_NEAR(a.f_test, f_test(library("cnot"), a.times, a.tpl, cfg), 0.0);
  EXPECT_GE(a.phase_fidelity, 1.0 - a.f_test / 8.0 - 1e-12);
  for (double t : a.times) {
    EXPECT_GE(t, 0.0);
    EXPECT_LE(t, 1000.0);
  }
  OptimizerConfig serial = quick(7);
  serial.policy = ExecPolicy::Serial;
  const CompileResult b = compile2(library("cnot"), cfg, serial);
  EXPECT_EQ(a.times, b.times);
  EXPECT_EQ(a.restarts_used, b.restarts_used);
}

TEST(Compile2, RecoversPlantedTargets) {
  const EnergyConfig cfg;
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    const auto planted = random_times(rng, 15, 1000.0);
    const Template t = Template::two_qubit_15();
    GateTarget g{"planted", 4, SequenceObjective(identity(4), t, cfg).unitary(planted),
                 {}, std::nullopt, {}};
    OptimizerConfig o = quick(trial + 1);
    o.target_f = 1e-9;
    const CompileResult r = compile2(g, cfg, o);
    EXPECT_TRUE(r.converged) << trial;
    EXPECT_LE(r.f_test, 1e-9);
  }
}

TEST(Compile2, RejectsNonSpecialTargets) {
  GateTarget g{"cnot", 4, textbook_matrix("cnot"), {}, std::nullopt, {}};
  EXPECT_THROW(compile2(g, EnergyConfig{}, quick()), NotSpecialUnitaryError);
  EXPECT_THROW(compile2(library("had"), EnergyConfig{}, quick()), DimensionMismatch);
}

TEST(Compile1Device, LibraryGates) {
  const EnergyConfig cfg;
  for (const char* name : {"not", "sqrt-not", "had"}) {
    const CompileResult r = compile1_device(library(name), cfg, quick());
    EXPECT_TRUE(r.converged) << name;
    EXPECT_LE(r.f_test, 1e-10) << name;
    EXPECT_EQ(r.command.dim(), 2);
  }
  const CompileResult p = compile1_device(library("phs", 0.7), cfg, quick());
  EXPECT_TRUE(p.converged);
}

TEST(Compile1Embedded, NotAtNinetyPeriods) {
  const EnergyConfig cfg;
  OptimizerConfig o = quick();
  o.target_f = 1e-6;
  const CompileResult r = compile1_embedded(library("not"), QubitSide::Second, 90, cfg, o);
  ASSERT_TRUE(r.converged) << r.diagnostic;
  EXPECT_LE(r.f_test, 1e-6);
  EXPECT_EQ(*r.k, 90);
  const double total = 90 * 4 * kPi / splitting(cfg);
  EXPECT_NEAR(r.total_time(), total, 1e-12 * total);
  EXPECT_EQ(r.command.gate, "i-kron-not");
  const CMatrix u = execute(r.command).unitary;
  EXPECT_EQ(schmidt_rank(operator_schmidt(u), 1e-5), 1);
  EXPECT_GE(r.phase_fidelity, 1.0 - o.target_f);
}

TEST(Compile1Embedded, MirroredSidesShareTimes) {
  const EnergyConfig cfg;
  const GateTarget w = library("had");
  const CompileResult s = compile1_embedded(w, QubitSide::Second, 20, cfg, quick(4));
  const CompileResult f = compile1_embedded(w, QubitSide::First, 20, cfg, quick(4));
  EXPECT_EQ(s.times, f.times);
  EXPECT_NEAR(s.f_test, f.f_test, 1e-14);
  EXPECT_EQ(f.command.gate, "had-kron-i");
  EXPECT_EQ(f.tpl.kind, TemplateKind::EmbeddedFirst4);
}

TEST(Compile1Embedded, IdentityIsFeasibleAtAnyK) {
  const EnergyConfig cfg;
  GateTarget id{"i", 2, identity(2), {}, std::nullopt, {}};
  for (int k : {1, 3}) {
    const CompileResult r = compile1_embedded(id, QubitSide::Second, k, cfg, quick());
    EXPECT_TRUE(r.converged) << k;
  }
  // The witness (0, 0, 0, t_tot) itself.
  const double total = 4 * kPi / splitting(cfg);
  GateTarget g{"i-kron-i", 4, identity(4), {}, std::nullopt, {}};
  EXPECT_LE(f_test(g, std::vector<double>{0, 0, 0, total},
                   Template::embedded(QubitSide::Second), cfg),
            1e-24);
}

TEST(Compile1Embedded, ScansForSmallestWorkingK) {
  const EnergyConfig cfg;
  const CompileResult r =
      compile1_embedded(library("phs", kPi / 2), QubitSide::Second, std::nullopt, cfg, quick());
  ASSERT_TRUE(r.converged);
  ASSERT_TRUE(r.k.has_value());
  // Every smaller k was tried first and failed.
  for (int k = 1; k < *r.k; ++k) {
    EXPECT_FALSE(compile1_embedded(library("phs", kPi / 2), QubitSide::Second, k, cfg, quick())
                     .converged)
        << k;
  }
}

TEST(Compile1Embedded, ShortTotalTimeReportsDiagnostic) {
  const EnergyConfig cfg;
  OptimizerConfig o = quick();
  o.restarts = 16;
  const CompileResult r = compile1_embedded(library("not"), QubitSide::Second, 1, cfg, o);
  EXPECT_FALSE(r.converged);
  EXPECT_NE(r.diagnostic.find("larger k"), std::string::npos);
  EXPECT_NEAR(r.total_time(), 4 * kPi / splitting(cfg), 1e-12);
}

TEST(ClosedForm, NotAndSqrtNot) {
  const EnergyConfig cfg;
  const ClosedForm n = closed_form_times("not", cfg);
  ASSERT_EQ(n.times.size(), 1u);
  EXPECT_NEAR(n.times[0], 31.41593, 1e-5);
  EXPECT_LE(max_abs(execute(closed_form_command("not", cfg)).unitary - library("not").matrix),
            1e-12);
  EXPECT_LE(max_abs(execute(closed_form_command("sqrt-not", cfg)).unitary -
                    library("sqrt-not").matrix),
            1e-12);
}

TEST(ClosedForm, HadamardTimes) {
  // Direct numpy evaluation of the closed forms.
  const ClosedForm h = closed_form_times("had", EnergyConfig{});
  ASSERT_EQ(h.times.size(), 3u);
  EXPECT_NEAR(h.times[0], 46.723783060307, 1e-9);
  EXPECT_NEAR(h.times[1], 3.1397218802666824, 1e-12);
  EXPECT_EQ(h.times[0], h.times[2]);
  EXPECT_EQ(h.branch, 0);
}

TEST(ClosedForm, PhaseShiftTimes) {
  const std::vector<double> phi = {kPi / 2};
  const ClosedForm p = closed_form_times("phs", EnergyConfig{}, phi);
  EXPECT_NEAR(p.times[0], 62.431746328256, 1e-9);
  EXPECT_NEAR(p.times[1], 0.628455967162481, 1e-12);
  EXPECT_EQ(p.branch, 0);
  const CMatrix u = execute(closed_form_command("phs", EnergyConfig{}, phi)).unitary;
  EXPECT_LE(max_abs(u - library("phs", kPi / 2).matrix), 1e-9);
}

TEST(ClosedForm, OutOfDomain) {
  // E_J > E_c pushes the Hadamard arccos argument above 1.
  EXPECT_THROW(closed_form_times("had", EnergyConfig{0.1, 2.5, 0.1}), ClosedFormDomainError);
  const std::vector<double> phi = {kPi};
  EXPECT_THROW(closed_form_times("phs", EnergyConfig{}, phi), ClosedFormDomainError);
  EXPECT_THROW(closed_form_times("cnot", EnergyConfig{}), UnknownGateError);
}

TEST(Tau, Value) {
  const EnergyConfig cfg;
  EXPECT_NEAR(tau_operator(cfg)(0, 1).real(), -0.1 / splitting(cfg), 1e-16);
}

}  // namespace
}  // namespace qmlc
