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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmlc/device.hpp"
#include "qmlc/linalg.hpp"
#include "qmlc/multistart.hpp"

namespace qmlc {

class InvalidGeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hermitian traceless generators of a real Lie algebra.
struct GeneratorSet {
  int dim = 0;
  std::vector<CMatrix> elements;
  std::vector<std::string> labels;  // optional, same length as elements

  /// Throws InvalidGeneratorError unless every element is dim x dim,
  /// Hermitian and traceless to 1e-12.
  void validate() const;
};

struct ClosureResult {
  int dimension = 0;
  int rounds = 0;  // commutator rounds that added a direction
  std::vector<CMatrix> basis;  // orthonormal under Re trace(A^dagger B)
};

/// Smallest real Lie algebra containing the generators under A, B -> i[A, B].
/// Breadth-first: every round brackets the previous round's new directions
/// with the whole basis. A candidate enters when its residual after
/// projection exceeds `tol` relative to its own norm.
ClosureResult lie_closure(const GeneratorSet& gens, double tol = 1e-9,
                          ExecPolicy policy = ExecPolicy::Serial);
int lie_closure_dim(const GeneratorSet& gens, double tol = 1e-9);

/// {sz(1), ..., sz(N), sum sx(k), sum_{i<j} sy(i) sy(j)} for N = 1, 2, 3.
/// N = 1 gives {sz, sx}.
GeneratorSet standard_generators(int num_qubits);

/// {H1, H2, H3, H4} on the canonical switch states.
GeneratorSet device_generators(const EnergyConfig& cfg);

enum class IdentityStatus {
  Exact,                      // holds with sigma_y = [[0, -i], [i, 0]]
  HoldsInAppendixConvention,  // holds only after sigma_y -> -sigma_y
  HoldsUpToSign,              // lhs = -rhs in both conventions
  Failed,
};

std::string_view to_string(IdentityStatus s);

struct IdentityCheck {
  std::string name;
  double deviation = 0.0;           // max|lhs - rhs|, standard sigma_y
  double deviation_flipped = 0.0;   // max|lhs - rhs|, sigma_y negated
  IdentityStatus status = IdentityStatus::Failed;
};

/// Generators of su(4) rebuilt from H1..H4. Requires E_L > 0.
std::vector<IdentityCheck> verify_reconstruction(const EnergyConfig& cfg,
                                                 double tol = 1e-12);

/// Nested-commutator constructions of su(4) and su(8) basis elements.
std::vector<IdentityCheck> verify_constructions(double tol = 1e-12);

}  // namespace qmlc
