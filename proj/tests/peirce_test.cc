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

#include <gtest/gtest.h>

#include <random>

#include "symcone/error.h"
#include "symcone/horn.h"

namespace symcone {
namespace {

TEST(PeirceTest, HadamardHasNoOffDiagonalBlocks) {
  const Algebra a(AlgebraDescriptor::Hadamard(5));
  const PeirceDecomposition p = PeirceDecompose(a, CanonicalFrame(a));
  for (int i = 1; i <= 5; ++i) {
    EXPECT_EQ(p.BlockDim(i, i), 1);
    for (int j = i + 1; j <= 5; ++j) EXPECT_EQ(p.BlockDim(i, j), 0);
  }
}

TEST(PeirceTest, SymMatOffDiagonalCells) {
  const Algebra a(AlgebraDescriptor::SymMat(3));
  const PeirceDecomposition p = PeirceDecompose(a, CanonicalFrame(a));
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      ASSERT_EQ(p.BlockDim(i, j), 1);
      // The cell (E_ij + E_ji)/sqrt(2), up to sign.
      Matrix cell = Matrix::Zero(3, 3);
      cell(i - 1, j - 1) = cell(j - 1, i - 1) = 1 / std::sqrt(2.0);
      const Vector want = SymMatToCoords(cell);
      EXPECT_NEAR(std::abs(p.Basis(i, j).col(0).dot(want)), 1.0, 1e-12);
    }
  }
}

TEST(PeirceTest, SpinOffDiagonalDimension) {
  for (int n : {3, 4, 7}) {
    const Algebra a(AlgebraDescriptor::Spin(n));
    const PeirceDecomposition p = PeirceDecompose(a, CanonicalFrame(a));
    EXPECT_EQ(p.BlockDim(1, 2), n - 2);
    EXPECT_EQ(p.BlockDim(1, 1), 1);
    EXPECT_EQ(p.BlockDim(2, 2), 1);
  }
}

TEST(PeirceTest, ProductCrossFactorBlocksAreEmpty) {
  const Algebra a(AlgebraDescriptor::Product(
      {AlgebraDescriptor::Spin(4), AlgebraDescriptor::SymMat(2)}));
  const PeirceDecomposition p = PeirceDecompose(a, CanonicalFrame(a));
  const Eigen::MatrixXi dims = p.DimsTable();
  EXPECT_EQ(dims(0, 1), 2);
  EXPECT_EQ(dims(2, 3), 1);
  EXPECT_EQ(dims(0, 2), 0);
  EXPECT_EQ(dims(1, 3), 0);
}

TEST(PeirceTest, IdempotentProjectsToItself) {
  const Algebra a(AlgebraDescriptor::SymMat(4));
  std::mt19937_64 rng(2);
  const PeirceDecomposition p = PeirceDecompose(a, RandomFrame(a, rng));
  for (int i = 1; i <= 4; ++i) {
    for (int k = 1; k <= 4; ++k) {
      for (int l = k; l <= 4; ++l) {
        const Element b = BlockProject(p, p.idempotent(i), k, l);
        const double want = (k == i && l == i) ? p.idempotent(i).Norm() : 0.0;
        EXPECT_NEAR(b.Norm(), want, 1e-10);
      }
    }
  }
}

TEST(PeirceTest, CompletesPartialFrame) {
  const Algebra a(AlgebraDescriptor::SymMat(4));
  std::vector<Element> partial = CanonicalFrame(a);
  partial.resize(2, a.Zero());
  const std::vector<Element> full = CompleteFrame(a, partial);
  ASSERT_EQ(full.size(), 4u);
  Element sum = a.Zero();
  for (const Element& c : full) sum += c;
  EXPECT_LE((sum - a.Unit()).Norm(), 1e-10);
  EXPECT_NO_THROW(ValidateIdempotents(full));
}

TEST(PeirceTest, RejectsBadFrames) {
  const Algebra a(AlgebraDescriptor::SymMat(3));
  std::vector<Element> frame = CanonicalFrame(a);
  frame[0] = 2.0 * frame[0];
  EXPECT_THROW(ValidateIdempotents(frame), Error);
  frame = CanonicalFrame(a);
  frame[1] = frame[0];
  EXPECT_THROW(ValidateIdempotents(frame), Error);
  // c1 + c2 is idempotent but not primitive.
  frame = CanonicalFrame(a);
  EXPECT_THROW(ValidateIdempotents({frame[0] + frame[1]}), Error);
  EXPECT_NO_THROW(ValidateIdempotents({frame[0] + frame[1]}, false));
}

TEST(TruncatedProjectorTest, KnownRanks) {
  const Algebra h(AlgebraDescriptor::Hadamard(5));
  const PeirceDecomposition ph = PeirceDecompose(h, CanonicalFrame(h));
  Matrix want = Matrix::Zero(5, 5);
  want.topLeftCorner(3, 3).setIdentity();
  EXPECT_LE((TruncatedProjector(ph, 3) - want).norm(), 1e-12);
  EXPECT_LE((TruncatedProjector(ph, 5) - Matrix::Identity(5, 5)).norm(), 1e-12);

  const Algebra m(AlgebraDescriptor::SymMat(3));
  const PeirceDecomposition pm = PeirceDecompose(m, CanonicalFrame(m));
  const Matrix t = TruncatedProjector(pm, 2);
  EXPECT_NEAR(t.trace(), 3.0, 1e-12);
  EXPECT_LE((t * t - t).norm(), 1e-12);
}

class PeircePropertyTest : public testing::TestWithParam<AlgebraDescriptor> {};

TEST_P(PeircePropertyTest, CompleteOrthogonalAndBlockIdentities) {
  const Algebra a(GetParam());
  std::mt19937_64 rng(17);
  const PeirceDecomposition p = PeirceDecompose(a, RandomFrame(a, rng));
  const int r = p.rank();
  for (int t = 0; t < 50; ++t) {
    const Element x = RandomElement(a, rng);
    Element sum = a.Zero();
    for (int i = 1; i <= r; ++i) {
      for (int j = i; j <= r; ++j) sum += BlockProject(p, x, i, j);
    }
    EXPECT_LE((sum - x).Norm(), 1e-10 * x.Norm());
  }
  std::normal_distribution<double> g;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      const Matrix& b = p.Basis(i, j);
      if (b.cols() == 0) continue;
      Vector w(b.cols());
      for (int k = 0; k < w.size(); ++k) w(k) = g(rng);
      const Element x(a, b * w);
      const Element x2 = Square(x);
      const double s = x.coords().squaredNorm();
      EXPECT_LE((x2 - BlockProject(p, x2, i, i) - BlockProject(p, x2, j, j))
                    .Norm(),
                1e-9 * s);
      EXPECT_NEAR(Inner(p.idempotent(i), Product(p.idempotent(i), x2)),
                  0.5 * s, 1e-9 * s);
      // L(c_i) acts as 1/2 on E_ij.
      EXPECT_LE((Product(p.idempotent(i), x) - 0.5 * x).Norm(),
                1e-10 * x.Norm());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    All, PeircePropertyTest,
    testing::Values(AlgebraDescriptor::Hadamard(4), AlgebraDescriptor::Spin(5),
                    AlgebraDescriptor::SymMat(4), AlgebraDescriptor::SymMat(6),
                    AlgebraDescriptor::Product({AlgebraDescriptor::Spin(3),
                                                AlgebraDescriptor::SymMat(3)})));

}  // namespace
}  // namespace symcone
