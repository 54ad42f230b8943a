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
#include <functional>
#include <random>
#include <vector>

namespace qmlc {

enum class ExecPolicy { Serial, Parallel };

struct RestartOutcome {
  std::size_t index = 0;
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
};

/// Runs one restart. Must be a pure function of the index so that serial and
/// parallel schedules agree.
using RestartFn = std::function<RestartOutcome(std::size_t index)>;

/// Restarts [first, first + count), results ordered by index.
std::vector<RestartOutcome> run_restarts_serial(const RestartFn& fn,
                                                std::size_t first,
                                                std::size_t count);
/// OpenMP version of run_restarts_serial; identical output.
std::vector<RestartOutcome> run_restarts_parallel(const RestartFn& fn,
                                                  std::size_t first,
                                                  std::size_t count);

struct MultiStartConfig {
  std::size_t restarts = 200;
  std::size_t batch = 8;
  double target_f = 1e-8;
};

struct MultiStartResult {
  RestartOutcome best;
  std::size_t restarts_used = 0;
  bool converged = false;
};

/// Runs restarts in fixed batches until a batch contains an outcome with
/// f <= target_f or the budget is exhausted. Among converged outcomes the
/// one with the smallest sum(x) wins; otherwise the smallest f. Remaining
/// ties go to the lower index.
MultiStartResult multistart(const RestartFn& fn, const MultiStartConfig& cfg,
                            ExecPolicy policy);

/// Generator for restart `index` of a run seeded with `seed`.
std::mt19937_64 restart_rng(std::uint64_t seed, std::size_t index);

}  // namespace qmlc
