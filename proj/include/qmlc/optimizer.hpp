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

#include <functional>
#include <span>
#include <vector>

namespace qmlc {

/// f(x) with its gradient written to `grad` (same length as x).
using Objective =
    std::function<double(std::span<const double> x, std::span<double> grad)>;

/// Euclidean projection onto the feasible set, in place.
using Projection = std::function<void(std::span<double> x)>;

struct LbfgsOptions {
  int max_iters = 500;
  int memory = 10;
  double stop_f = 0.0;  // stop as soon as f <= stop_f
  double armijo = 1e-4;
  int max_backtracks = 40;
};

struct LbfgsResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool stalled = false;  // line search could not make progress
};

/// Limited-memory BFGS with backtracking along the projection arc
/// P(x + a d). Falls back to projected steepest descent whenever the
/// quasi-Newton direction fails to produce an Armijo step.
LbfgsResult minimize_projected_lbfgs(const Objective& objective,
                                     const Projection& project,
                                     std::vector<double> x0,
                                     const LbfgsOptions& options);

/// Projection onto the box [lo, hi]^n.
Projection box_projection(double lo, double hi);

/// Projection onto {x >= 0, sum(x) <= cap}.
Projection capped_simplex_projection(double cap);

}  // namespace qmlc
