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

// The slice between r x r matrices and operators built from orthogonal
// extreme rays, small copositivity oracles, completely positive builders,
// quartic expansion of q_A(x∘x) and the quadratic-form irreducibility test.

#ifndef SYMCONE_HIERARCHY_H_
#define SYMCONE_HIERARCHY_H_

#include <random>
#include <vector>

#include "symcone/algebra.h"
#include "symcone/horn.h"
#include "symcone/operators.h"
#include "symcone/polynomial.h"

namespace symcone {

// f(M) = sum M_ij delta_i ⊗ delta_j for pairwise orthogonal nonzero
// generators delta_1..delta_r.
class SliceMap {
 public:
  explicit SliceMap(std::vector<Element> generators);
  static SliceMap FromRays(const ExtremeRaySet& rays);

  int size() const { return static_cast<int>(generators_.size()); }
  const Algebra& algebra() const { return generators_.front().algebra(); }
  const std::vector<Element>& generators() const { return generators_; }

  SelfAdjointOperator Forward(const Matrix& m) const;

  struct BackwardResult {
    Matrix m;
    // |A - f(M)|_F / max(1, |A|_F).
    double residual;
  };
  // M_ij = (delta_i • A delta_j) / (|delta_i|^2 |delta_j|^2). Throws
  // Error(kNotInSlice) when the residual exceeds 1e-8.
  BackwardResult Backward(const SelfAdjointOperator& a) const;

 private:
  std::vector<Element> generators_;
};

struct CopositivityVerdict {
  bool copositive;
  // r <= 4: the PSD+N margin; r == 5: the simplex minimum found.
  double value;
};

// Copositivity of a symmetric r x r matrix, r <= 5. Throws Error(kParameter)
// for larger r.
CopositivityVerdict CopOracleSmall(const Matrix& m);

struct ProbeResult {
  bool copositive;
  // min q_A(x) over the samples, with |x| = 1.
  double min_value;
};

// Sampled copositivity of A over the cone: random squares, plus nonnegative
// combinations of delta_i / |delta_i|^2 (vertices included) when `rays` is
// non-empty.
ProbeResult SampleCopositivity(const SelfAdjointOperator& a, int samples,
                               std::mt19937_64& rng,
                               const std::vector<Element>& rays = {},
                               double threshold = -1e-7);

// (x∘x) • A (x∘x) as a homogeneous quartic in the coordinates of x.
Polynomial QuarticExpand(const SelfAdjointOperator& a);

// (x•x)^l q for l in {0, 1, 2}.
Polynomial DegreeLift(const Polynomial& q, int l);

// p_i = (x∘x) • delta_i and the three-term rewriting
// (p_i - p_i∔1 + p_i∔2 - p_i∔3 + p_i∔4)^2 + 4(p_i∔1 - p_i) p_i∔4
// + 4 p_i p_i∔3 of q_H(x∘x).
Polynomial HornThreeTermQuartic(const ExtremeRaySet& rays, int i);

// sum a ⊗ a; throws Error(kOutsideCone) for a generator outside the cone.
SelfAdjointOperator CpBuild(const std::vector<Element>& generators);

struct IrreducibilityResult {
  Matrix form;
  int rank;
  bool irreducible;
};

// A real quadratic form factors over C into linear forms iff its matrix has
// rank <= 2.
IrreducibilityResult ClassifyQuadraticForm(const Matrix& form);

// The form of L(delta_i) - L(delta_i∔1) + L(delta_i∔2) on E(s_i, 1), with
// s_i = c_i + c_i∔1 + c_i∔2.
IrreducibilityResult IrreducibilityRank(const ExtremeRaySet& rays, int i);

}  // namespace symcone

#endif  // SYMCONE_HIERARCHY_H_
