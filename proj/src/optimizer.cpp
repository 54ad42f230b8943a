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

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include <Eigen/Dense>

namespace qmlc {

namespace {

using Vec = Eigen::VectorXd;

struct Pair {
  Vec s;
  Vec y;
  double rho;
};

Vec two_loop(const std::deque<Pair>& memory, const Vec& g) {
  Vec q = g;
  std::vector<double> alpha(memory.size());
  for (std::size_t i = memory.size(); i-- > 0;) {
    alpha[i] = memory[i].rho * memory[i].s.dot(q);
    q -= alpha[i] * memory[i].y;
  }
  if (!memory.empty()) {
    const Pair& last = memory.back();
    q *= last.s.dot(last.y) / last.y.squaredNorm();
  }
  for (std::size_t i = 0; i < memory.size(); ++i) {
    const double beta = memory[i].rho * memory[i].y.dot(q);
    q += (alpha[i] - beta) * memory[i].s;
  }
  return -q;
}

}  // namespace

LbfgsResult minimize_projected_lbfgs(const Objective& objective,
                                     const Projection& project,
                                     std::vector<double> x0,
                                     const LbfgsOptions& options) {
  const auto n = static_cast<Eigen::Index>(x0.size());
  LbfgsResult result;
  project(x0);
  Vec x = Eigen::Map<const Vec>(x0.data(), n);
  Vec g(n);
  double f = objective(std::span<const double>(x.data(), n),
                       std::span<double>(g.data(), n));
  result.evaluations = 1;

  std::deque<Pair> memory;
  Vec trial(n);
  Vec trial_g(n);

  for (int iter = 0; iter < options.max_iters; ++iter) {
    if (f <= options.stop_f) break;
    result.iterations = iter + 1;

    bool accepted = false;
    for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
      Vec d = memory.empty() ? Vec(-g) : two_loop(memory, g);
      if (g.dot(d) >= 0.0) {
        memory.clear();
        d = -g;
      }
      // Unscaled steepest descent: cap the first step at unit length.
      double step = memory.empty() ? std::min(1.0, 1.0 / std::max(g.norm(), 1e-300))
                                   : 1.0;
      for (int bt = 0; bt < options.max_backtracks; ++bt, step *= 0.5) {
        trial = x + step * d;
        project(std::span<double>(trial.data(), n));
        const Vec move = trial - x;
        const double slope = g.dot(move);
        if (!(slope < 0.0)) continue;
        const double ft = objective(std::span<const double>(trial.data(), n),
                                    std::span<double>(trial_g.data(), n));
        ++result.evaluations;
        if (ft <= f + options.armijo * slope) {
          const Vec y = trial_g - g;
          const double sy = move.dot(y);
          if (sy > 1e-12 * move.norm() * y.norm()) {
            memory.push_back({move, y, 1.0 / sy});
            if (static_cast<int>(memory.size()) > options.memory) {
              memory.pop_front();
            }
          }
          x = trial;
          g = trial_g;
          f = ft;
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        if (memory.empty()) break;
        memory.clear();
      }
    }
    if (!accepted) {
      result.stalled = true;
      break;
    }
  }

  result.x.assign(x.data(), x.data() + n);
  result.f = f;
  return result;
}

Projection box_projection(double lo, double hi) {
  return [lo, hi](std::span<double> x) {
    for (double& v : x) v = std::clamp(v, lo, hi);
  };
}

Projection capped_simplex_projection(double cap) {
  return [cap](std::span<double> x) {
    for (double& v : x) v = std::max(v, 0.0);
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    if (sum <= cap) return;
    // Project onto {x >= 0, sum(x) = cap}: find the shift tau with
    // sum(max(x - tau, 0)) = cap.
    std::vector<double> sorted(x.begin(), x.end());
    std::ranges::sort(sorted, std::greater<>());
    double running = 0.0;
    double tau = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      running += sorted[i];
      const double candidate = (running - cap) / static_cast<double>(i + 1);
      if (i + 1 == sorted.size() || sorted[i + 1] <= candidate) {
        tau = candidate;
        break;
      }
    }
    for (double& v : x) v = std::max(v - tau, 0.0);
  };
}

}  // namespace qmlc
