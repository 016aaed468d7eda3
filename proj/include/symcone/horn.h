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

// The Horn form transported to a symmetric cone: five orthogonal extreme rays
// delta_i = a_i c_i and H_Delta = sum H_ij delta_i ⊗ delta_j.

#ifndef SYMCONE_HORN_H_
#define SYMCONE_HORN_H_

#include <array>
#include <random>
#include <vector>

#include "symcone/algebra.h"
#include "symcone/operators.h"
#include "symcone/peirce.h"

namespace symcone {

using Vector5 = Eigen::Matrix<double, 5, 1>;
using Matrix5 = Eigen::Matrix<double, 5, 5>;

// i ∔ k on {1, ..., 5}.
int CyclicAdd(int i, int k);

// Entries 1 on the diagonal, -1 at cyclic distance one, +1 at distance two.
Matrix5 HornMatrix();

class ExtremeRaySet {
 public:
  // Validates orthogonality, idempotency, primitivity, positive scales and
  // cone membership; throws Error(kFrame) or Error(kParameter).
  ExtremeRaySet(std::vector<Element> idempotents, const Vector5& scales);

  // First five idempotents of CanonicalFrame. Needs rank >= 5.
  static ExtremeRaySet Canonical(const Algebra& algebra,
                                 const Vector5& scales = Vector5::Ones());

  const Algebra& algebra() const { return idempotents_.front().algebra(); }
  // 1-based.
  const Element& delta(int i) const { return deltas_.at(i - 1); }
  const Element& idempotent(int i) const { return idempotents_.at(i - 1); }
  double scale(int i) const { return scales_(i - 1); }
  const std::vector<Element>& idempotents() const { return idempotents_; }
  const std::vector<Element>& deltas() const { return deltas_; }
  const Vector5& scales() const { return scales_; }

  // n x 5 matrix whose columns are the delta coordinates.
  Matrix DeltaMatrix() const;

 private:
  std::vector<Element> idempotents_;
  std::vector<Element> deltas_;
  Vector5 scales_;
};

// Frame of the spectral decomposition of a random element.
std::vector<Element> RandomFrame(const Algebra& algebra, std::mt19937_64& rng);

SelfAdjointOperator BuildHorn(const ExtremeRaySet& rays);

// (delta_i • x)_i.
Vector5 VDelta(const ExtremeRaySet& rays, const Element& x);

struct Witness {
  Element x;
  double value;
};

// x = -delta_1/|delta_1|^2 - delta_2/|delta_2|^2 + delta_4/|delta_4|^2, for
// which x • H_Delta x = -3.
Witness NonPsdWitness(const SelfAdjointOperator& h, const ExtremeRaySet& rays);

// c = sum sqrt(a_i) c_i over a full frame; scales beyond those given are 1.
Element ConjugatingElement(const std::vector<Element>& frame,
                           const std::vector<double>& scales);

// Q_c H Q_c for the conjugating element above.
SelfAdjointOperator QcConjugate(const SelfAdjointOperator& h,
                                const std::vector<Element>& frame,
                                const std::vector<double>& scales);

// The blocks I_i = {ii, i i∔1, i∔1 i∔1, i i∔2, i∔1 i∔2, i∔2 i∔2} spanning
// E(c_i + c_i∔1 + c_i∔2, 1).
std::vector<BlockKey> TripleBlocks(int i);

struct CertificateParts {
  SelfAdjointOperator d2;
  SelfAdjointOperator d4;
  SelfAdjointOperator d5;
  std::vector<Element> d4_generators;
  std::vector<Element> d5_generators;
};

// Completely positive pieces of the rank r+ >= 6 decomposition of a
// nonnegative form vanishing against H_C, where H_C is built from the first
// five frame idempotents of `p` and u ranges over E_{i r+}. Throws
// Error(kParameter) when rank < 6.
CertificateParts BuildCertificateParts(const PeirceDecomposition& p);

}  // namespace symcone

#endif  // SYMCONE_HORN_H_
