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

#include "qmlc/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qmlc {

namespace {

std::string defect_message(double defect) {
  std::ostringstream os;
  os << "generator is not Hermitian: max|H - H^dagger| = " << defect
     << " exceeds " << kHermitianTol;
  return os.str();
}

}  // namespace

NotHermitianError::NotHermitianError(double defect)
    : std::invalid_argument(defect_message(defect)), defect_(defect) {}

CMatrix pauli(Pauli axis) {
  using namespace std::complex_literals;
  CMatrix m(2, 2);
  switch (axis) {
    case Pauli::I:
      m << 1.0, 0.0, 0.0, 1.0;
      break;
    case Pauli::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Pauli::Y:
      m << 0.0, -1i, 1i, 0.0;
      break;
    case Pauli::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

CMatrix identity(Eigen::Index dim) { return CMatrix::Identity(dim, dim); }

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix tensor(std::span<const CMatrix> factors) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (const auto& f : factors) out = tensor(out, f);
  return out;
}

CMatrix embed(const CMatrix& op, int site, int num_qubits) {
  if (site < 0 || site >= num_qubits) {
    throw std::out_of_range("qubit index out of range");
  }
  std::vector<CMatrix> factors(num_qubits, identity(2));
  factors[site] = op;
  return tensor(factors);
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  return a * b - b * a;
}

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("hs_inner: dimension mismatch");
  }
  // trace(A^dagger B) = sum_ij conj(A_ij) B_ij
  return (a.conjugate().cwiseProduct(b)).sum();
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const CMatrix& h) {
  return max_abs(h - h.adjoint());
}

double unitarity_defect(const CMatrix& u) {
  return max_abs(u.adjoint() * u - identity(u.rows()));
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs(a - b) <= tol;
}

SpectralExp::SpectralExp(const CMatrix& hamiltonian) : generator_(hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw DimensionMismatch("SpectralExp: generator must be square");
  }
  const double defect = hermiticity_defect(hamiltonian);
  if (defect > kHermitianTol) throw NotHermitianError(defect);
  // Symmetrize so the solver sees an exactly Hermitian input.
  const CMatrix sym = 0.5 * (hamiltonian + hamiltonian.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

CMatrix SpectralExp::operator()(double t) const {
  CVector phases(eigenvalues_.size());
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
    phases(k) = std::polar(1.0, -t * eigenvalues_(k));
  }
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

CMatrix expm_hermitian(const CMatrix& h, double t) { return SpectralExp(h)(t); }

std::vector<SchmidtTerm> operator_schmidt(const CMatrix& u) {
  if (u.rows() != 4 || u.cols() != 4) {
    throw DimensionMismatch("operator_schmidt: expected a 4x4 operator");
  }
  // Realign U_{(i k),(j l)} -> R_{(i j),(k l)} so that A (x) B maps to
  // vec(A) vec(B)^T.
  CMatrix realigned(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          realigned(2 * i + j, 2 * k + l) = u(2 * i + k, 2 * j + l);

  Eigen::JacobiSVD<CMatrix> svd(realigned,
                                Eigen::ComputeFullU | Eigen::ComputeFullV);
  std::vector<SchmidtTerm> terms;
  terms.reserve(4);
  for (int s = 0; s < 4; ++s) {
    SchmidtTerm term{svd.singularValues()(s), CMatrix(2, 2), CMatrix(2, 2)};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        term.a(i, j) = svd.matrixU()(2 * i + j, s);
        term.b(i, j) = std::conj(svd.matrixV()(2 * i + j, s));
      }
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

int schmidt_rank(std::span<const SchmidtTerm> terms, double tol) {
  int rank = 0;
  for (const auto& t : terms) rank += t.coefficient > tol ? 1 : 0;
  return rank;
}

std::string format_matrix(const CMatrix& m, int significant_digits) {
  std::string out;
  char buf[96];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%s%.*g%+.*gi", j == 0 ? "" : "  ",
                    significant_digits, m(i, j).real() + 0.0, significant_digits,
                    m(i, j).imag() + 0.0);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace qmlc
