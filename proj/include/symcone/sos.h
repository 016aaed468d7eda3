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

// Sum-of-squares membership of (x•x)^l q_A(x∘x) through a Gram matrix over
// the degree-(l+2) monomials.

#ifndef SYMCONE_SOS_H_
#define SYMCONE_SOS_H_

#include <string_view>
#include <vector>

#include "symcone/operators.h"
#include "symcone/polynomial.h"
#include "symcone/sdp.h"

namespace symcone {

enum class SosStatus { kFeasible, kInfeasible, kIndeterminate };
std::string_view SosStatusName(SosStatus s);

struct SosOptions {
  double feasible_tolerance = 1e-7;
  double infeasible_tolerance = 1e-6;
  double reassembly_tolerance = 1e-7;
  int max_basis_size = 200;
  SdpConfig sdp;
};

struct SosResult {
  SosStatus status = SosStatus::kIndeterminate;
  double margin = 0.0;
  // Gram basis and the monomials indexing the constraints (and y).
  std::vector<Exponent> basis;
  std::vector<Exponent> monomials;
  // Feasible: Gram matrix G with target = m^T G m.
  Matrix gram;
  // Infeasible: y over `monomials` with sum y_g A_g PSD and <target, y> < 0.
  Vector farkas;
  double dual_bound = 0.0;
  double reassembly_residual = 0.0;
};

// The affine system sum_{a+b=g} G_ab = target_g over the monomials of
// degree 2d, d = degree(target)/2.
SdpProblem GramProblem(const Polynomial& target, std::vector<Exponent>& basis,
                       std::vector<Exponent>& monomials);

// Throws Error(kParameter) for odd or non-homogeneous targets and
// Error(kSizeCap) when the basis exceeds max_basis_size.
SosResult SosTestPolynomial(const Polynomial& target,
                            const SosOptions& options = {});

// Throws Error(kParameter) unless l is 0 or 1.
SosResult SosTest(const SelfAdjointOperator& a, int l,
                  const SosOptions& options = {});

// Independent re-check of the certificate the result carries.
bool VerifySosResult(const Polynomial& target, const SosResult& result,
                     const SosOptions& options = {});

}  // namespace symcone

#endif  // SYMCONE_SOS_H_
