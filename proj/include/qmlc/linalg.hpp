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

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qmlc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Generators are rejected when max|H - H^dagger| exceeds this.
inline constexpr double kHermitianTol = 1e-10;

enum class Pauli { I, X, Y, Z };

class NotHermitianError : public std::invalid_argument {
 public:
  explicit NotHermitianError(double defect);
  double defect() const { return defect_; }

 private:
  double defect_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Standard convention: sigma_z = diag(1, -1), sigma_y = [[0, -i], [i, 0]].
CMatrix pauli(Pauli axis);
CMatrix identity(Eigen::Index dim);

/// Kronecker product; the left factor is the most significant index.
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CMatrix tensor(std::span<const CMatrix> factors);

/// `op` acting on qubit `site` (0-based, 0 = leftmost factor) of `num_qubits`.
CMatrix embed(const CMatrix& op, int site, int num_qubits);

CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// trace(A^dagger B).
Complex hs_inner(const CMatrix& a, const CMatrix& b);

double max_abs(const CMatrix& m);
double hermiticity_defect(const CMatrix& h);
/// max|U^dagger U - I|.
double unitarity_defect(const CMatrix& u);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol);

/// Cached spectral decomposition of a Hermitian generator; evaluates
/// exp(-i t H) for any real t without re-diagonalizing.
class SpectralExp {
 public:
  explicit SpectralExp(const CMatrix& hamiltonian);

  CMatrix operator()(double t) const;

  const CMatrix& generator() const { return generator_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const CMatrix& eigenvectors() const { return eigenvectors_; }

 private:
  CMatrix generator_;
  Eigen::VectorXd eigenvalues_;
  CMatrix eigenvectors_;
};

/// exp(-i t H) for Hermitian H. Throws NotHermitianError.
CMatrix expm_hermitian(const CMatrix& h, double t);

struct SchmidtTerm {
  double coefficient;
  CMatrix a;  // 2x2, unit Frobenius norm
  CMatrix b;  // 2x2, unit Frobenius norm
};

/// Operator Schmidt decomposition U = sum_k c_k A_k (x) B_k of a 4x4 operator,
/// coefficients sorted descending. All four terms are returned.
std::vector<SchmidtTerm> operator_schmidt(const CMatrix& u);

/// Number of coefficients above `tol`.
int schmidt_rank(std::span<const SchmidtTerm> terms, double tol);

std::string format_matrix(const CMatrix& m, int significant_digits);

}  // namespace qmlc
