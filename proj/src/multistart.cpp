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

#include "qmlc/multistart.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

namespace qmlc {

std::vector<RestartOutcome> run_restarts_serial(const RestartFn& fn,
                                                std::size_t first,
                                                std::size_t count) {
  std::vector<RestartOutcome> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(first + i);
  return out;
}

std::vector<RestartOutcome> run_restarts_parallel(const RestartFn& fn,
                                                  std::size_t first,
                                                  std::size_t count) {
  std::vector<RestartOutcome> out(count);
  std::exception_ptr error;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      out[i] = fn(first + static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(qmlc_restart_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

namespace {

double total(const RestartOutcome& r) {
  return std::accumulate(r.x.begin(), r.x.end(), 0.0);
}

// True when a should be preferred over b.
bool better(const RestartOutcome& a, const RestartOutcome& b, double target) {
  const bool ca = a.f <= target;
  const bool cb = b.f <= target;
  if (ca != cb) return ca;
  if (ca) {
    const double ta = total(a);
    const double tb = total(b);
    if (ta != tb) return ta < tb;
  } else if (a.f != b.f) {
    return a.f < b.f;
  }
  return a.index < b.index;
}

}  // namespace

MultiStartResult multistart(const RestartFn& fn, const MultiStartConfig& cfg,
                            ExecPolicy policy) {
  MultiStartResult result;
  const std::size_t batch = std::max<std::size_t>(cfg.batch, 1);
  bool have_best = false;
  for (std::size_t first = 0; first < cfg.restarts; first += batch) {
    const std::size_t count = std::min(batch, cfg.restarts - first);
    auto outcomes = policy == ExecPolicy::Parallel
                        ? run_restarts_parallel(fn, first, count)
                        : run_restarts_serial(fn, first, count);
    result.restarts_used += count;
    for (auto& o : outcomes) {
      if (!have_best || better(o, result.best, cfg.target_f)) {
        result.best = std::move(o);
        have_best = true;
      }
    }
    if (have_best && result.best.f <= cfg.target_f) {
      result.converged = true;
      break;
    }
  }
  return result;
}

std::mt19937_64 restart_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace qmlc
