// Copyright 2026 The Symcone Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symcone/sos.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "symcone/error.h"
#include "symcone/hierarchy.h"
#include "symcone/linalg.h"

namespace symcone {
namespace {

int BinomialCapped(int n, int k, int cap) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<int>(std::lround(c));
}

// Coefficients of m^T G m.
Polynomial Reassemble(const std::vector<Exponent>& basis, const Matrix& g) {
  const int n = basis.empty() ? 0 : static_cast<int>(basis.front().size());
  Polynomial out(n);
  Exponent e(n);
  for (size_t a = 0; a < basis.size(); ++a) {
    for (size_t b = 0; b < basis.size(); ++b) {
      for (int i = 0; i < n; ++i) e[i] = basis[a][i] + basis[b][i];
      out.AddTerm(e, g(a, b));
    }
  }
  return out;
}

Matrix FarkasMatrix(const std::vector<Exponent>& basis,
                    const std::vector<Exponent>& monomials, const Vector& y) {
  std::map<Exponent, double, GradedLexBefore> weight;
  for (size_t k = 0; k < monomials.size(); ++k) weight[monomials[k]] = y(k);
  const int m = static_cast<int>(basis.size());
  const int n = m == 0 ? 0 : static_cast<int>(basis.front().size());
  Matrix out(m, m);
  Exponent e(n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int i = 0; i < n; ++i) e[i] = basis[a][i] + basis[b][i];
      out(a, b) = weight.at(e);
    }
  }
  return out;
}

}  // namespace

std::string_view SosStatusName(SosStatus s) {
  switch (s) {
    case SosStatus::kFeasible:
      return "feasible";
    case SosStatus::kInfeasible:
      return "infeasible";
    case SosStatus::kIndeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

SdpProblem GramProblem(const Polynomial& target, std::vector<Exponent>& basis,
                       std::vector<Exponent>& monomials) {
  const int degree = target.Degree();
  if (degree < 0 || degree % 2 != 0 || !target.IsHomogeneous(degree)) {
    throw Error(ErrorCode::kParameter, "target must be an even homogeneous form");
  }
  const int n = target.num_vars();
  basis = MonomialsOfDegree(n, degree / 2);
  monomials = MonomialsOfDegree(n, degree);
  std::map<Exponent, int, GradedLexBefore> row;
  for (size_t k = 0; k < monomials.size(); ++k) row[monomials[k]] = static_cast<int>(k);
  SdpProblem problem;
  problem.dim = static_cast<int>(basis.size());
  problem.constraints.resize(monomials.size());
  for (size_t k = 0; k < monomials.size(); ++k) {
    problem.constraints[k].b = target.Coefficient(monomials[k]);
  }
  Exponent e(n);
  for (int b = 0; b < problem.dim; ++b) {
    for (int a = 0; a <= b; ++a) {
      for (int i = 0; i < n; ++i) e[i] = basis[a][i] + basis[b][i];
      problem.constraints[row.at(e)].a.entries.push_back({a, b, 1.0});
    }
  }
  return problem;
}

SosResult SosTestPolynomial(const Polynomial& target, const SosOptions& options) {
  const int degree = target.Degree();
  if (degree < 0 || degree % 2 != 0 || !target.IsHomogeneous(degree)) {
    throw Error(ErrorCode::kParameter, "target must be an even homogeneous form");
  }
  const int n = target.num_vars();
  const int d = degree / 2;
  if (BinomialCapped(n + d - 1, d, options.max_basis_size) >
      options.max_basis_size) {
    throw Error(ErrorCode::kSizeCap, "Gram basis larger than " +
                                         std::to_string(options.max_basis_size));
  }
  SosResult out;
  const SdpProblem problem = GramProblem(target, out.basis, out.monomials);
  const SdpSolution s = SolveMargin(problem, options.sdp);
  out.margin = s.margin;
  out.dual_bound = s.dual_bound;
  if (s.primal && s.margin >= -options.feasible_tolerance) {
    out.gram = *s.primal;
    out.status = SosStatus::kFeasible;
  } else if (s.dual && s.dual_bound <= -options.infeasible_tolerance) {
    out.farkas = *s.dual;
    out.status = SosStatus::kInfeasible;
  }
  if (out.status != SosStatus::kIndeterminate &&
      !VerifySosResult(target, out, options)) {
    out.status = SosStatus::kIndeterminate;
    out.gram.resize(0, 0);
    out.farkas.resize(0);
  }
  if (s.primal) {
    out.reassembly_residual =
        Reassemble(out.basis, *s.primal).MaxCoefficientDifference(target);
  }
  return out;
}

SosResult SosTest(const SelfAdjointOperator& a, int l, const SosOptions& options) {
  if (l != 0 && l != 1) throw Error(ErrorCode::kParameter, "level must be 0 or 1");
  return SosTestPolynomial(DegreeLift(QuarticExpand(a), l), options);
}

bool VerifySosResult(const Polynomial& target, const SosResult& result,
                     const SosOptions& options) {
  switch (result.status) {
    case SosStatus::kFeasible: {
      const Matrix& g = result.gram;
      if (g.rows() != static_cast<int>(result.basis.size())) return false;
      if (AsymmetryOf(g) > options.reassembly_tolerance) return false;
      if (MinSymmetricEigenvalue(0.5 * (g + g.transpose())) <
          -options.feasible_tolerance) {
        return false;
      }
      const double scale = std::max(1.0, target.MaxAbsCoefficient());
      return Reassemble(result.basis, g).MaxCoefficientDifference(target) <=
             options.reassembly_tolerance * scale;
    }
    case SosStatus::kInfeasible: {
      const Vector& y = result.farkas;
      if (y.size() != static_cast<int>(result.monomials.size())) return false;
      const Matrix lambda = FarkasMatrix(result.basis, result.monomials, y);
      if (MinSymmetricEigenvalue(lambda) < -options.sdp.tolerance * y.norm()) {
        return false;
      }
      double bound = 0.0;
      for (size_t k = 0; k < result.monomials.size(); ++k) {
        bound += target.Coefficient(result.monomials[k]) * y(k);
      }
      return bound <= -options.infeasible_tolerance;
    }
    case SosStatus::kIndeterminate:
      return true;
  }
  return false;
}

}  // namespace symcone
