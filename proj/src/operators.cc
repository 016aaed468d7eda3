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

#include "symcone/operators.h"

#include <algorithm>
#include <cmath>

#include "symcone/error.h"
#include "symcone/linalg.h"

namespace symcone {

SelfAdjointOperator::SelfAdjointOperator(Algebra algebra, const Matrix& matrix)
    : algebra_(std::move(algebra)) {
  const int n = algebra_.dim();
  if (matrix.rows() != n || matrix.cols() != n) {
    throw Error(ErrorCode::kDimension, "operator must be " + std::to_string(n) +
                                           "x" + std::to_string(n));
  }
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if (AsymmetryOf(matrix) > 1e-9 * scale) {
    throw Error(ErrorCode::kParameter, "operator matrix is not symmetric");
  }
  matrix_ = 0.5 * (matrix + matrix.transpose());
}

SelfAdjointOperator SelfAdjointOperator::Zero(const Algebra& algebra) {
  return SelfAdjointOperator(algebra,
                             Matrix::Zero(algebra.dim(), algebra.dim()));
}

Element SelfAdjointOperator::Apply(const Element& x) const {
  CheckSameAlgebra(x.algebra(), algebra_);
  return Element(algebra_, matrix_ * x.coords());
}

double SelfAdjointOperator::QuadraticForm(const Element& x) const {
  CheckSameAlgebra(x.algebra(), algebra_);
  return x.coords().dot(matrix_ * x.coords());
}

SelfAdjointOperator& SelfAdjointOperator::operator+=(
    const SelfAdjointOperator& other) {
  CheckSameAlgebra(algebra_, other.algebra_);
  matrix_ += other.matrix_;
  return *this;
}

SelfAdjointOperator& SelfAdjointOperator::operator-=(
    const SelfAdjointOperator& other) {
  CheckSameAlgebra(algebra_, other.algebra_);
  matrix_ -= other.matrix_;
  return *this;
}

SelfAdjointOperator& SelfAdjointOperator::operator*=(double s) {
  matrix_ *= s;
  return *this;
}

SelfAdjointOperator operator+(SelfAdjointOperator a,
                              const SelfAdjointOperator& b) {
  return a += b;
}
SelfAdjointOperator operator-(SelfAdjointOperator a,
                              const SelfAdjointOperator& b) {
  return a -= b;
}
SelfAdjointOperator operator*(double s, SelfAdjointOperator a) {
  return a *= s;
}

SelfAdjointOperator MultOperator(const Element& a) {
  // L(a) is self-adjoint for the dot product; any asymmetry is rounding.
  const Matrix l = MultiplicationMatrix(a);
  return SelfAdjointOperator(a.algebra(), 0.5 * (l + l.transpose()));
}

SelfAdjointOperator QuadRep(const Element& c) {
  const Matrix q = QuadraticRepresentationMatrix(c);
  return SelfAdjointOperator(c.algebra(), 0.5 * (q + q.transpose()));
}

Matrix RawTensor(const Element& a, const Element& b) {
  CheckSameAlgebra(a, b);
  return a.coords() * b.coords().transpose();
}

SelfAdjointOperator Tensor(const Element& a, const Element& b) {
  const Matrix t = RawTensor(a, b);
  return SelfAdjointOperator(a.algebra(), 0.5 * (t + t.transpose()));
}

SelfAdjointOperator Tensor(const Element& a) { return Tensor(a, a); }

double TraceInner(const SelfAdjointOperator& a, const SelfAdjointOperator& b) {
  CheckSameAlgebra(a.algebra(), b.algebra());
  return a.matrix().cwiseProduct(b.matrix()).sum();
}

Matrix PrincipalSub(const SelfAdjointOperator& a, const Matrix& basis) {
  if (basis.rows() != a.dim()) {
    throw Error(ErrorCode::kDimension, "basis has the wrong length");
  }
  const Matrix gram = basis.transpose() * basis;
  if (gram.cols() > 0 &&
      (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() >
          1e-9) {
    throw Error(ErrorCode::kParameter, "basis is not orthonormal");
  }
  const Matrix s = basis.transpose() * a.matrix() * basis;
  return 0.5 * (s + s.transpose());
}

Matrix PeirceBlock(const SelfAdjointOperator& a, const PeirceDecomposition& p,
                   BlockKey ij, BlockKey kl) {
  CheckSameAlgebra(a.algebra(), p.algebra());
  return p.Basis(ij).transpose() * a.matrix() * p.Basis(kl);
}

double MinEig(const SelfAdjointOperator& a) {
  return MinSymmetricEigenvalue(a.matrix());
}

bool BlockPrecedesOrEqual(BlockKey a, BlockKey b) {
  return a.j < b.j || (a.j == b.j && a.i <= b.i);
}

std::vector<BlockKey> BlocksUpTo(int m) {
  std::vector<BlockKey> out;
  for (int j = 1; j <= m; ++j) {
    for (int i = 1; i <= j; ++i) out.push_back({i, j});
  }
  return out;
}

std::vector<BlockPair> BlockPairsUpTo(int m) {
  const std::vector<BlockKey> blocks = BlocksUpTo(m);
  std::vector<BlockPair> out;
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (size_t a = 0; a <= b; ++a) out.push_back({blocks[a], blocks[b]});
  }
  return out;
}

SelfAdjointOperator EmbedBlock(const PeirceDecomposition& p, BlockKey ij,
                               BlockKey kl, const Matrix& block) {
  const Matrix& u = p.Basis(ij);
  const Matrix& v = p.Basis(kl);
  if (block.rows() != u.cols() || block.cols() != v.cols()) {
    throw Error(ErrorCode::kDimension, "block shape does not match the bases");
  }
  const Matrix m = u * block * v.transpose();
  if (ij == kl) {
    return SelfAdjointOperator(p.algebra(), 0.5 * (m + m.transpose()));
  }
  return SelfAdjointOperator(p.algebra(), m + m.transpose());
}

}  // namespace symcone
