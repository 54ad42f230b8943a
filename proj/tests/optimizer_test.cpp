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

#include "qmlc/optimizer.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace qmlc {
namespace {

double rosenbrock(std::span<const double> x, std::span<double> g) {
  const double a = 1.0 - x[0], b = x[1] - x[0] * x[0];
  g[0] = -2.0 * a - 400.0 * x[0] * b;
  g[1] = 200.0 * b;
  return a * a + 100.0 * b * b;
}

TEST(Lbfgs, UnconstrainedRosenbrock) {
  const Projection none = [](std::span<double>) {};
  LbfgsOptions opt;
  opt.max_iters = 2000;
  const LbfgsResult r = minimize_projected_lbfgs(rosenbrock, none, {-1.2, 1.0}, opt);
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], 1.0, 1e-5);
  EXPECT_LT(r.f, 1e-10);
}

TEST(Lbfgs, BoxConstrainedQuadratic) {
  // min (x0 - 3)^2 + (x1 + 2)^2 on [0, 1]^2 -> (1, 0).
  const Objective f = [](std::span<const double> x, std::span<double> g) {
    g[0] = 2.0 * (x[0] - 3.0);
    g[1] = 2.0 * (x[1] + 2.0);
    return (x[0] - 3.0) * (x[0] - 3.0) + (x[1] + 2.0) * (x[1] + 2.0);
  };
  const LbfgsResult r = minimize_projected_lbfgs(f, box_projection(0.0, 1.0), {0.5, 0.5}, {});
  EXPECT_NEAR(r.x[0], 1.0, 1e-12);
  EXPECT_NEAR(r.x[1], 0.0, 1e-12);
  EXPECT_NEAR(r.f, 8.0, 1e-10);
}

TEST(Lbfgs, StopsAtTargetValue) {
  const Objective f = [](std::span<const double> x, std::span<double> g) {
    g[0] = 2.0 * x[0];
    return x[0] * x[0];
  };
  LbfgsOptions opt;
  opt.stop_f = 1e-2;
  const LbfgsResult r = minimize_projected_lbfgs(f, box_projection(-10, 10), {5.0}, opt);
  EXPECT_LE(r.f, 1e-2);
}

TEST(BoxProjection, Clamps) {
  std::vector<double> x = {-1.0, 0.5, 7.0};
  box_projection(0.0, 2.0)(x);
  EXPECT_EQ(x, (std::vector<double>{0.0, 0.5, 2.0}));
}

// Enumerates faces of {x >= 0, sum x <= cap}: for every zero set, either the
// sum constraint is inactive or it is active with a common shift. The
// nearest feasible candidate is the projection.
std::vector<double> brute_force_projection(const std::vector<double>& y, double cap) {
  const std::size_t n = y.size();
  std::vector<double> best;
  double best_d = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    for (int active = 0; active < 2; ++active) {
      std::vector<double> x(n, 0.0);
      std::size_t free = 0;
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask & (1u << i))) {
          ++free;
          sum += y[i];
        }
      }
      const double shift = active && free ? (sum - cap) / free : 0.0;
      if (active && !free) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (!(mask & (1u << i))) x[i] = y[i] - shift;
      const double total = std::accumulate(x.begin(), x.end(), 0.0);
      bool ok = total <= cap + 1e-12;
      for (double v : x) ok = ok && v >= -1e-12;
      if (!ok) continue;
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) d += (x[i] - y[i]) * (x[i] - y[i]);
      if (d < best_d) {
        best_d = d;
        best = x;
      }
    }
  }
  return best;
}

TEST(CappedSimplexProjection, MatchesFaceEnumeration) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-5.0, 15.0);
  const double cap = 10.0;
  const Projection p = capped_simplex_projection(cap);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> y(3 + trial % 2);
    for (auto& v : y) v = u(rng);
    std::vector<double> x = y;
    p(x);
    const auto oracle = brute_force_projection(y, cap);
    ASSERT_EQ(x.size(), oracle.size());
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(x[i], oracle[i], 1e-10);
  }
}

TEST(CappedSimplexProjection, FeasiblePointsAreFixed) {
  std::vector<double> x = {1.0, 2.0, 3.0};
  capped_simplex_projection(6.0)(x);
  EXPECT_EQ(x, (std::vector<double>{1.0, 2.0, 3.0}));
}

}  // namespace
}  // namespace qmlc
