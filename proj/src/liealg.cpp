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

#include "qmlc/liealg.hpp"

#include <cmath>
#include <functional>

namespace qmlc {

namespace {

constexpr double kGeneratorTol = 1e-12;

double real_inner(const CMatrix& a, const CMatrix& b) {
  return hs_inner(a, b).real();
}

// Adds the normalized residual of `candidate` to `basis` if it points in a
// new direction. Gram-Schmidt is applied twice for stability.
bool try_add(std::vector<CMatrix>& basis, const CMatrix& candidate, double tol) {
  const double norm = candidate.norm();
  if (norm <= tol) return false;
  CMatrix r = candidate / norm;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) r -= real_inner(b, r) * b;
  }
  const double residual = r.norm();
  if (residual <= tol) return false;
  basis.push_back(r / residual);
  return true;
}

CMatrix bracket(const CMatrix& a, const CMatrix& b) {
  return Complex(0.0, 1.0) * commutator(a, b);
}

}  // namespace

void GeneratorSet::validate() const {
  if (dim < 1) throw InvalidGeneratorError("generator dimension must be positive");
  if (!labels.empty() && labels.size() != elements.size()) {
    throw InvalidGeneratorError("labels and elements differ in length");
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const CMatrix& e = elements[i];
    const std::string which = "generator " + std::to_string(i);
    if (e.rows() != dim || e.cols() != dim) {
      throw InvalidGeneratorError(which + " has the wrong shape");
    }
    if (hermiticity_defect(e) > kGeneratorTol) {
      throw InvalidGeneratorError(which + " is not Hermitian");
    }
    if (std::abs(e.trace()) > kGeneratorTol) {
      throw InvalidGeneratorError(which + " is not traceless");
    }
  }
}

ClosureResult lie_closure(const GeneratorSet& gens, double tol,
                          ExecPolicy policy) {
  gens.validate();
  if (!(tol > 0.0 && tol < 1e-3)) {
    throw std::invalid_argument("closure tolerance must lie in (0, 1e-3)");
  }
  const std::size_t max_dim =
      static_cast<std::size_t>(gens.dim) * static_cast<std::size_t>(gens.dim) - 1;

  ClosureResult out;
  for (const auto& g : gens.elements) try_add(out.basis, g, tol);

  std::size_t frontier_begin = 0;
  while (out.basis.size() < max_dim && frontier_begin < out.basis.size()) {
    const std::size_t n = out.basis.size();
    // Pairs (a, b) with b in the frontier and a < b.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t b = frontier_begin; b < n; ++b)
      for (std::size_t a = 0; a < b; ++a) pairs.emplace_back(a, b);

    std::vector<CMatrix> candidates(pairs.size());
    const auto& basis = out.basis;
    const long count = static_cast<long>(pairs.size());
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
      for (long p = 0; p < count; ++p)
        candidates[p] = bracket(basis[pairs[p].first], basis[pairs[p].second]);
    } else {
      for (long p = 0; p < count; ++p)
        candidates[p] = bracket(basis[pairs[p].first], basis[pairs[p].second]);
    }

    bool added = false;
    for (const auto& c : candidates) {
      if (out.basis.size() >= max_dim) break;
      added = try_add(out.basis, c, tol) || added;
    }
    frontier_begin = n;
    if (!added) break;
    ++out.rounds;
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

int lie_closure_dim(const GeneratorSet& gens, double tol) {
  return lie_closure(gens, tol).dimension;
}

GeneratorSet standard_generators(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 3) {
    throw std::invalid_argument("standard generators are defined for 1 to 3 qubits");
  }
  const int n = num_qubits;
  GeneratorSet set;
  set.dim = 1 << n;
  const CMatrix sx = pauli(Pauli::X), sy = pauli(Pauli::Y), sz = pauli(Pauli::Z);
  for (int k = 0; k < n; ++k) {
    set.elements.push_back(embed(sz, k, n));
    set.labels.push_back("sz" + std::to_string(k + 1));
  }
  CMatrix xsum = CMatrix::Zero(set.dim, set.dim);
  for (int k = 0; k < n; ++k) xsum += embed(sx, k, n);
  set.elements.push_back(xsum);
  set.labels.push_back("sum sx");
  if (n > 1) {
    CMatrix yy = CMatrix::Zero(set.dim, set.dim);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) yy += embed(sy, i, n) * embed(sy, j, n);
    set.elements.push_back(yy);
    set.labels.push_back("sum sy sy");
  }
  return set;
}

GeneratorSet device_generators(const EnergyConfig& cfg) {
  cfg.validate();
  GeneratorSet set;
  set.dim = 4;
  set.elements = {hamiltonian2(cfg, kBothIdle), hamiltonian2(cfg, kCoupled),
                  hamiltonian2(cfg, kSecondIdle), hamiltonian2(cfg, kFirstIdle)};
  set.labels = {"H1", "H2", "H3", "H4"};
  return set;
}

std::string_view to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Exact:
      return "exact";
    case IdentityStatus::HoldsInAppendixConvention:
      return "holds with sigma_y negated";
    case IdentityStatus::HoldsUpToSign:
      return "holds up to overall sign";
    case IdentityStatus::Failed:
      return "FAILED";
  }
  return "unknown";
}

namespace {

// Pauli matrices with a selectable sign on sigma_y, embedded on n qubits.
struct Paulis {
  int n;
  double y_sign;

  CMatrix x(int k) const { return embed(pauli(Pauli::X), k - 1, n); }
  CMatrix y(int k) const { return y_sign * embed(pauli(Pauli::Y), k - 1, n); }
  CMatrix z(int k) const { return embed(pauli(Pauli::Z), k - 1, n); }
  CMatrix xsum() const {
    CMatrix s = x(1);
    for (int k = 2; k <= n; ++k) s += x(k);
    return s;
  }
  CMatrix yysum() const {
    CMatrix s = CMatrix::Zero(1 << n, 1 << n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) s += y(i) * y(j);
    return s;
  }
};

struct Identity {
  std::string name;
  int qubits;
  std::function<CMatrix(const Paulis&)> lhs;
  std::function<CMatrix(const Paulis&)> rhs;
};

IdentityCheck classify(const Identity& id, double tol) {
  const Paulis standard{id.qubits, 1.0};
  const Paulis flipped{id.qubits, -1.0};
  const CMatrix l0 = id.lhs(standard), r0 = id.rhs(standard);
  const CMatrix l1 = id.lhs(flipped), r1 = id.rhs(flipped);
  IdentityCheck c;
  c.name = id.name;
  c.deviation = max_abs(l0 - r0);
  c.deviation_flipped = max_abs(l1 - r1);
  if (c.deviation <= tol) {
    c.status = IdentityStatus::Exact;
  } else if (c.deviation_flipped <= tol) {
    c.status = IdentityStatus::HoldsInAppendixConvention;
  } else if (max_abs(l0 + r0) <= tol && max_abs(l1 + r1) <= tol) {
    c.status = IdentityStatus::HoldsUpToSign;
  } else {
    c.status = IdentityStatus::Failed;
  }
  return c;
}

const Complex kHalfI(0.0, 0.5);

}  // namespace

std::vector<IdentityCheck> verify_reconstruction(const EnergyConfig& cfg,
                                                 double tol) {
  cfg.validate();
  if (!(cfg.coupling > 0.0)) {
    throw std::invalid_argument("reconstruction of sy sy needs E_L > 0");
  }
  const double ec = cfg.bias, ej = cfg.tunneling, el = cfg.coupling;
  const auto h = [cfg](SwitchState s) { return hamiltonian2(cfg, s); };
  const CMatrix h1 = h(kBothIdle), h2 = h(kCoupled), h3 = h(kSecondIdle),
                h4 = h(kFirstIdle);
  // The Hamiltonians carry sigma_y only through sy sy, which is blind to the
  // sign convention, so both columns agree here.
  std::vector<Identity> ids = {
      {"sz1 = 2(H1 - H3)/E_c", 2, [](const Paulis& p) { return p.z(1); },
       [&](const Paulis&) { CMatrix m = 2.0 * (h1 - h3) / ec; return m; }},
      {"sz2 = 2(H1 - H4)/E_c", 2, [](const Paulis& p) { return p.z(2); },
       [&](const Paulis&) { CMatrix m = 2.0 * (h1 - h4) / ec; return m; }},
      {"sx1 + sx2 = 2(H1 - H3 - H4)/E_J", 2,
       [](const Paulis& p) { return p.xsum(); },
       [&](const Paulis&) { CMatrix m = 2.0 * (h1 - h3 - h4) / ej; return m; }},
      {"sy1 sy2 = 2(H3 + H4 - H1 - H2)/E_L", 2,
       [](const Paulis& p) { CMatrix m = p.y(1) * p.y(2); return m; },
       [&](const Paulis&) {
         CMatrix m = 2.0 * (h3 + h4 - h1 - h2) / el;
         return m;
       }},
  };
  std::vector<IdentityCheck> out;
  for (const auto& id : ids) out.push_back(classify(id, tol));
  return out;
}

std::vector<IdentityCheck> verify_constructions(double tol) {
  std::vector<Identity> ids;
  for (int k = 1; k <= 2; ++k) {
    const std::string ks = std::to_string(k);
    ids.push_back({"sy" + ks + " = (i/2)[sx1 + sx2, sz" + ks + "]", 2,
                   [k](const Paulis& p) { return p.y(k); },
                   [k](const Paulis& p) {
                     CMatrix m = kHalfI * commutator(p.xsum(), p.z(k));
                     return m;
                   }});
    ids.push_back({"sx" + ks + " = (i/2)[sz" + ks + ", sy" + ks + "]", 2,
                   [k](const Paulis& p) { return p.x(k); },
                   [k](const Paulis& p) {
                     CMatrix m = kHalfI * commutator(p.z(k), p.y(k));
                     return m;
                   }});
    ids.push_back({"sx" + ks + " = (1/4)[sz" + ks + ", [sz" + ks + ", sx1 + sx2]]",
                   2, [k](const Paulis& p) { return p.x(k); },
                   [k](const Paulis& p) {
                     CMatrix m =
                         0.25 * commutator(p.z(k), commutator(p.z(k), p.xsum()));
                     return m;
                   }});
  }
  ids.push_back({"sx1 sz2 = (1/4)[sx2, [sz1, sy1 sy2]]", 2,
                 [](const Paulis& p) { CMatrix m = p.x(1) * p.z(2); return m; },
                 [](const Paulis& p) {
                   CMatrix m =
                       0.25 * commutator(p.x(2), commutator(p.z(1), p.y(1) * p.y(2)));
                   return m;
                 }});
  // The outer sz(k) must act on qubit 2 for the nested form to produce sx2.
  ids.push_back({"sx1 sz2 = (1/16)[[sz2, [sz2, sx1 + sx2]], [sz1, sy1 sy2]]", 2,
                 [](const Paulis& p) { CMatrix m = p.x(1) * p.z(2); return m; },
                 [](const Paulis& p) {
                   CMatrix m = (1.0 / 16.0) *
                               commutator(commutator(p.z(2), commutator(p.z(2), p.xsum())),
                                          commutator(p.z(1), p.y(1) * p.y(2)));
                   return m;
                 }});

  ids.push_back({"sy1 sx2 + sx2 sy3 = (i/2)[sz2, sum sy sy]", 3,
                 [](const Paulis& p) {
                   CMatrix m = p.y(1) * p.x(2) + p.x(2) * p.y(3);
                   return m;
                 },
                 [](const Paulis& p) {
                   CMatrix m = kHalfI * commutator(p.z(2), p.yysum());
                   return m;
                 }});
  ids.push_back({"sx1 sx2 = (i/2)[sz1, sy1 sx2 + sx2 sy3]", 3,
                 [](const Paulis& p) { CMatrix m = p.x(1) * p.x(2); return m; },
                 [](const Paulis& p) {
                   CMatrix m = kHalfI * commutator(p.z(1), p.y(1) * p.x(2) +
                                                               p.x(2) * p.y(3));
                   return m;
                 }});
  ids.push_back({"sy2 = (i/2)[sz2, sx1 + sx2 + sx3]", 3,
                 [](const Paulis& p) { return p.y(2); },
                 [](const Paulis& p) {
                   CMatrix m = kHalfI * commutator(p.z(2), p.xsum());
                   return m;
                 }});
  ids.push_back({"sx1 sz2 = (i/2)[sy2, sx1 sx2]", 3,
                 [](const Paulis& p) { CMatrix m = p.x(1) * p.z(2); return m; },
                 [](const Paulis& p) {
                   CMatrix m = kHalfI * commutator(p.y(2), p.x(1) * p.x(2));
                   return m;
                 }});
  // The same four steps chained, each step feeding the next.
  ids.push_back({"sx1 sz2 via the chained su(8) steps", 3,
                 [](const Paulis& p) { CMatrix m = p.x(1) * p.z(2); return m; },
                 [](const Paulis& p) {
                   const CMatrix a = kHalfI * commutator(p.z(2), p.yysum());
                   const CMatrix b = kHalfI * commutator(p.z(1), a);
                   const CMatrix c = kHalfI * commutator(p.z(2), p.xsum());
                   CMatrix m = kHalfI * commutator(c, b);
                   return m;
                 }});
  ids.push_back({"sz1 sy2 sx3 = (i/2)[sz1 sz2, sx2 sx3]", 3,
                 [](const Paulis& p) {
                   CMatrix m = p.z(1) * p.y(2) * p.x(3);
                   return m;
                 },
                 [](const Paulis& p) {
                   CMatrix m =
                       kHalfI * commutator(p.z(1) * p.z(2), p.x(2) * p.x(3));
                   return m;
                 }});

  std::vector<IdentityCheck> out;
  for (const auto& id : ids) out.push_back(classify(id, tol));
  return out;
}

}  // namespace qmlc
