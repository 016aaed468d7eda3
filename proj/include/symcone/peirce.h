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

// Peirce decomposition of an algebra relative to a Jordan frame.
//
// Frame indices are 1-based throughout, matching the block labels E_ij with
// 1 <= i <= j <= r.

#ifndef SYMCONE_PEIRCE_H_
#define SYMCONE_PEIRCE_H_

#include <compare>
#include <vector>

#include "symcone/algebra.h"

namespace symcone {

struct BlockKey {
  int i = 1;
  int j = 1;

  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

// Throws Error(kFrame) unless every element is a nonzero idempotent, the
// elements are pairwise orthogonal, and (if `require_primitive`) each has a
// one-dimensional 1-eigenspace under L(c).
void ValidateIdempotents(const std::vector<Element>& idempotents,
                         bool require_primitive = true);

// Extends a list of k <= r orthogonal primitive idempotents to a full frame
// by decomposing e - sum(c_i). The given idempotents keep their positions.
std::vector<Element> CompleteFrame(const Algebra& algebra,
                                   const std::vector<Element>& idempotents);

class PeirceDecomposition {
 public:
  const Algebra& algebra() const { return algebra_; }
  int rank() const { return static_cast<int>(frame_.size()); }
  const std::vector<Element>& frame() const { return frame_; }
  const Element& idempotent(int i) const;

  // Orthonormal columns spanning E_ij (n x dim E_ij). Either order of i, j.
  const Matrix& Basis(int i, int j) const;
  const Matrix& Basis(BlockKey b) const { return Basis(b.i, b.j); }
  int BlockDim(int i, int j) const {
    return static_cast<int>(Basis(i, j).cols());
  }
  Matrix Projector(int i, int j) const;
  Eigen::MatrixXi DimsTable() const;

 private:
  friend PeirceDecomposition PeirceDecompose(const Algebra&,
                                             const std::vector<Element>&);
  PeirceDecomposition(Algebra algebra, std::vector<Element> frame)
      : algebra_(std::move(algebra)), frame_(std::move(frame)) {}

  int Slot(int i, int j) const;

  Algebra algebra_;
  std::vector<Element> frame_;
  std::vector<Matrix> bases_;
};

// Decomposes relative to `idempotents`, completing the frame first when fewer
// than rank() are given. Throws Error(kFrame) for invalid idempotents and
// Error(kDecomposition) when the block dimensions do not add up to dim.
PeirceDecomposition PeirceDecompose(const Algebra& algebra,
                                    const std::vector<Element>& idempotents);

Element BlockProject(const PeirceDecomposition& p, const Element& x, int i,
                     int j);

// Orthogonal projector onto the sum of E_ij over i <= j <= k.
Matrix TruncatedProjector(const PeirceDecomposition& p, int k);

// Columns of the listed block bases, side by side.
Matrix StackedBasis(const PeirceDecomposition& p,
                    const std::vector<BlockKey>& blocks);

}  // namespace symcone

#endif  // SYMCONE_PEIRCE_H_
