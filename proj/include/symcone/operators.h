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

// Self-adjoint linear maps on an algebra, stored as dense symmetric matrices
// in canonical coordinates, together with Peirce block extraction.

#ifndef SYMCONE_OPERATORS_H_
#define SYMCONE_OPERATORS_H_

#include <vector>

#include "symcone/algebra.h"
#include "symcone/peirce.h"

namespace symcone {

class SelfAdjointOperator {
 public:
  // Throws Error(kDimension) on a size mismatch and Error(kParameter) if the
  // matrix is not symmetric to 1e-9 relative. The stored matrix is the exact
  // symmetric part.
  SelfAdjointOperator(Algebra algebra, const Matrix& matrix);
  static SelfAdjointOperator Zero(const Algebra& algebra);

  const Algebra& algebra() const { return algebra_; }
  const Matrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  Element Apply(const Element& x) const;
  // x • A x.
  double QuadraticForm(const Element& x) const;

  SelfAdjointOperator& operator+=(const SelfAdjointOperator& other);
  SelfAdjointOperator& operator-=(const SelfAdjointOperator& other);
  SelfAdjointOperator& operator*=(double s);

 private:
  Algebra algebra_;
  Matrix matrix_;
};

SelfAdjointOperator operator+(SelfAdjointOperator a,
                              const SelfAdjointOperator& b);
SelfAdjointOperator operator-(SelfAdjointOperator a,
                              const SelfAdjointOperator& b);
SelfAdjointOperator operator*(double s, SelfAdjointOperator a);

SelfAdjointOperator MultOperator(const Element& a);
SelfAdjointOperator QuadRep(const Element& c);

// (a ⊗ b)(x) = (b • x) a, as a raw (generally non-symmetric) matrix a b^T.
Matrix RawTensor(const Element& a, const Element& b);
// (a b^T + b a^T) / 2; equals a ⊗ a when a == b.
SelfAdjointOperator Tensor(const Element& a, const Element& b);
SelfAdjointOperator Tensor(const Element& a);

// Frobenius inner product of the coordinate matrices.
double TraceInner(const SelfAdjointOperator& a, const SelfAdjointOperator& b);

// Entries u_p • A u_q for the orthonormal columns u of `basis`. Throws
// Error(kParameter) if the columns are not orthonormal to 1e-9.
Matrix PrincipalSub(const SelfAdjointOperator& a, const Matrix& basis);

// A_{ij,kl} in the orthonormal block bases; 0 x 0 style shapes for empty
// blocks.
Matrix PeirceBlock(const SelfAdjointOperator& a, const PeirceDecomposition& p,
                   BlockKey ij, BlockKey kl);

double MinEig(const SelfAdjointOperator& a);

// The block order: (i,j) precedes-or-equals (k,l) iff j < l, or j == l and
// i <= k. Keys are taken with i <= j.
bool BlockPrecedesOrEqual(BlockKey a, BlockKey b);

struct BlockPair {
  BlockKey ij;
  BlockKey kl;

  friend auto operator<=>(const BlockPair&, const BlockPair&) = default;
};

// Every block key (i,j), i <= j <= m, in increasing block order.
std::vector<BlockKey> BlocksUpTo(int m);
// All pairs (ij, kl) with 11 ⪯ ij ⪯ kl ⪯ mm, sorted by (kl, ij).
std::vector<BlockPair> BlockPairsUpTo(int m);

// Operator supported on the (ij, kl) block pair: B_ij X B_kl^T plus its
// transpose (or the symmetric part when ij == kl).
SelfAdjointOperator EmbedBlock(const PeirceDecomposition& p, BlockKey ij,
                               BlockKey kl, const Matrix& block);

}  // namespace symcone

#endif  // SYMCONE_OPERATORS_H_
