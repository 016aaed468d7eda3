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

#include "symcone/peirce.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "symcone/error.h"
#include "symcone/linalg.h"

namespace symcone {
namespace {

// Eigenvalue membership for the 0, 1/2, 1 eigenspaces of L(c).
constexpr double kEigenTol = 1e-8;
constexpr double kIdempotentTol = 1e-8;

// Eigenvectors of the symmetric matrix `a` whose eigenvalue is `target`.
Matrix EigenspaceOf(const Matrix& a, double target) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  std::vector<int> keep;
  for (int k = 0; k < a.rows(); ++k) {
    if (std::abs(es.eigenvalues()(k) - target) <= kEigenTol) keep.push_back(k);
  }
  Matrix v(a.rows(), keep.size());
  for (size_t q = 0; q < keep.size(); ++q) v.col(q) = es.eigenvectors().col(keep[q]);
  return v;
}

}  // namespace

void ValidateIdempotents(const std::vector<Element>& idempotents,
                         bool require_primitive) {
  for (size_t a = 0; a < idempotents.size(); ++a) {
    const Element& c = idempotents[a];
    CheckSameAlgebra(c, idempotents.front());
    const std::string name = "idempotent " + std::to_string(a + 1);
    if (c.Norm() < 1e-6) throw Error(ErrorCode::kFrame, name + " is zero");
    if ((Square(c) - c).Norm() > kIdempotentTol * std::max(1.0, c.Norm())) {
      throw Error(ErrorCode::kFrame, name + " is not idempotent");
    }
    for (size_t b = 0; b < a; ++b) {
      if (Product(c, idempotents[b]).Norm() > kIdempotentTol) {
        throw Error(ErrorCode::kFrame, name + " is not orthogonal to " +
                                           std::to_string(b + 1));
      }
    }
    if (require_primitive &&
        EigenspaceOf(MultiplicationMatrix(c), 1.0).cols() != 1) {
      throw Error(ErrorCode::kFrame, name + " is not primitive");
    }
  }
}

std::vector<Element> CompleteFrame(const Algebra& algebra,
                                   const std::vector<Element>& idempotents) {
  const int r = algebra.rank();
  const int k = static_cast<int>(idempotents.size());
  if (k > r) throw Error(ErrorCode::kFrame, "more idempotents than the rank");
  for (const Element& c : idempotents) CheckSameAlgebra(c.algebra(), algebra);
  ValidateIdempotents(idempotents);
  std::vector<Element> frame = idempotents;
  if (k == r) return frame;
  Element rest = algebra.Unit();
  for (const Element& c : idempotents) rest -= c;
  const SpectralDecomposition sd = SpectralDecompose(rest);
  for (size_t q = 0; q < sd.frame.size(); ++q) {
    if (sd.eigenvalues[q] > 0.5) frame.push_back(sd.frame[q]);
  }
  if (static_cast<int>(frame.size()) != r) {
    throw Error(ErrorCode::kFrame, "cannot complete to a frame");
  }
  return frame;
}

const Element& PeirceDecomposition::idempotent(int i) const {
  if (i < 1 || i > rank()) throw Error(ErrorCode::kIndex, "frame index");
  return frame_[i - 1];
}

int PeirceDecomposition::Slot(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > rank()) {
    throw Error(ErrorCode::kIndex, "block (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") out of range");
  }
  return (i - 1) * rank() + (j - 1);
}

const Matrix& PeirceDecomposition::Basis(int i, int j) const {
  return bases_[Slot(i, j)];
}

Matrix PeirceDecomposition::Projector(int i, int j) const {
  const Matrix& b = Basis(i, j);
  return b * b.transpose();
}

Eigen::MatrixXi PeirceDecomposition::DimsTable() const {
  Eigen::MatrixXi t(rank(), rank());
  for (int i = 1; i <= rank(); ++i) {
    for (int j = 1; j <= rank(); ++j) t(i - 1, j - 1) = BlockDim(i, j);
  }
  return t;
}

PeirceDecomposition PeirceDecompose(const Algebra& algebra,
                                    const std::vector<Element>& idempotents) {
  PeirceDecomposition p(algebra, CompleteFrame(algebra, idempotents));
  const int r = p.rank();
  const int n = algebra.dim();
  p.bases_.assign(r * r, Matrix(n, 0));

  std::vector<Matrix> l(r);
  std::vector<Matrix> half(r);
  for (int i = 0; i < r; ++i) {
    l[i] = MultiplicationMatrix(p.frame_[i]);
    half[i] = EigenspaceOf(l[i], 0.5);
  }
  int total = 0;
  for (int i = 1; i <= r; ++i) {
    const Element& c = p.frame_[i - 1];
    p.bases_[p.Slot(i, i)] = c.coords() / c.Norm();
    ++total;
    for (int j = i + 1; j <= r; ++j) {
      const Matrix& v = half[i - 1];
      Matrix w(n, 0);
      if (v.cols() > 0) {
        const Matrix restricted = v.transpose() * l[j - 1] * v;
        w = v * EigenspaceOf(0.5 * (restricted + restricted.transpose()), 0.5);
      }
      p.bases_[p.Slot(i, j)] =
          BasisFromProjector(w * w.transpose(), static_cast<int>(w.cols()));
      total += static_cast<int>(p.bases_[p.Slot(i, j)].cols());
    }
  }
  if (total != n) {
    throw Error(ErrorCode::kDecomposition,
                "block dimensions sum to " + std::to_string(total) +
                    ", expected " + std::to_string(n));
  }
  return p;
}

Element BlockProject(const PeirceDecomposition& p, const Element& x, int i,
                     int j) {
  CheckSameAlgebra(x.algebra(), p.algebra());
  const Matrix& b = p.Basis(i, j);
  return Element(p.algebra(), b * (b.transpose() * x.coords()));
}

Matrix TruncatedProjector(const PeirceDecomposition& p, int k) {
  if (k < 1 || k > p.rank()) throw Error(ErrorCode::kIndex, "truncation index");
  const int n = p.algebra().dim();
  Matrix proj = Matrix::Zero(n, n);
  for (int j = 1; j <= k; ++j) {
    for (int i = 1; i <= j; ++i) proj += p.Projector(i, j);
  }
  return proj;
}

Matrix StackedBasis(const PeirceDecomposition& p,
                    const std::vector<BlockKey>& blocks) {
  int cols = 0;
  for (const BlockKey& b : blocks) cols += p.BlockDim(b.i, b.j);
  Matrix out(p.algebra().dim(), cols);
  int at = 0;
  for (const BlockKey& b : blocks) {
    const Matrix& m = p.Basis(b.i, b.j);
    out.middleCols(at, m.cols()) = m;
    at += static_cast<int>(m.cols());
  }
  return out;
}

}  // namespace symcone
