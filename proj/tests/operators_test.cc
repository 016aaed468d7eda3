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

#include <gtest/gtest.h>

#include <random>

#include "symcone/error.h"
#include "symcone/horn.h"

namespace symcone {
namespace {

TEST(TensorTest, RankOne) {
  const Algebra a(AlgebraDescriptor::Hadamard(5));
  const Element e1 = a.BasisVector(0);
  Matrix want = Matrix::Zero(5, 5);
  want(0, 0) = 1;
  EXPECT_EQ(Tensor(e1).matrix(), want);

  std::mt19937_64 rng(1);
  const Algebra m(AlgebraDescriptor::SymMat(3));
  for (int t = 0; t < 20; ++t) {
    const Element x = RandomElement(m, rng);
    const Element y = RandomElement(m, rng);
    const double xy = Inner(x, y);
    EXPECT_NEAR(Tensor(x).QuadraticForm(y), xy * xy, 1e-10 * (1 + xy * xy));
    EXPECT_NEAR(TraceInner(Tensor(x), Tensor(y)), xy * xy,
                1e-10 * (1 + xy * xy));
  }
}

TEST(OperatorTest, Validation) {
  const Algebra a(AlgebraDescriptor::Hadamard(3));
  Matrix m = Matrix::Identity(3, 3);
  m(0, 1) = 1.0;
  EXPECT_THROW(SelfAdjointOperator(a, m), Error);
  EXPECT_THROW(SelfAdjointOperator(a, Matrix::Identity(4, 4)), Error);
  const SelfAdjointOperator id(a, Matrix::Identity(3, 3));
  EXPECT_DOUBLE_EQ(TraceInner(id, id), 3.0);
}

TEST(OperatorTest, HornQuadraticForm) {
  const Algebra a(AlgebraDescriptor::Hadamard(5));
  const SelfAdjointOperator h(a, HornMatrix());
  EXPECT_DOUBLE_EQ(h.QuadraticForm(a.Unit()), 5.0);
  Vector x = Vector::Zero(5);
  x(0) = x(1) = 1;
  EXPECT_DOUBLE_EQ(h.QuadraticForm(a.FromCoords(x)), 0.0);
  EXPECT_LT(MinEig(h), 0.0);
  EXPECT_DOUBLE_EQ(MinEig(SelfAdjointOperator(a, Matrix::Identity(5, 5))),
                   1.0);
  EXPECT_NEAR(MinEig(Tensor(a.Unit())), 0.0, 1e-12);
}

TEST(PrincipalSubTest, FullBasisReturnsOperator) {
  const Algebra a(AlgebraDescriptor::SymMat(3));
  std::mt19937_64 rng(4);
  Matrix m = Matrix::Random(6, 6);
  const SelfAdjointOperator op(a, (m + m.transpose()).eval());
  EXPECT_LE((PrincipalSub(op, Matrix::Identity(6, 6)) - op.matrix()).norm(),
            1e-14);
  EXPECT_THROW(PrincipalSub(op, 2.0 * Matrix::Identity(6, 6)), Error);
}

TEST(PrincipalSubTest, PaddingPreservesPairing) {
  // <A, B> = <P A|_U, B> when B is built from elements of U.
  const Algebra a(AlgebraDescriptor::SymMat(4));
  std::mt19937_64 rng(9);
  const PeirceDecomposition p = PeirceDecompose(a, RandomFrame(a, rng));
  const Matrix u = StackedBasis(p, {{1, 1}, {1, 2}, {2, 2}});
  Matrix m = Matrix::Random(a.dim(), a.dim());
  const SelfAdjointOperator op(a, (m + m.transpose()).eval());
  const Element w1(a, u * Vector::Random(u.cols()));
  const Element w2(a, u * Vector::Random(u.cols()));
  const SelfAdjointOperator b = Tensor(w1) + Tensor(w2, w1);
  const Matrix proj = u * u.transpose();
  const SelfAdjointOperator padded(a, (proj * op.matrix() * proj).eval());
  EXPECT_NEAR(TraceInner(op, b), TraceInner(padded, b), 1e-10);
  const Matrix sub = PrincipalSub(op, u);
  EXPECT_LE((u * sub * u.transpose() - padded.matrix()).norm(), 1e-10);
}

TEST(PeirceBlockTest, IdentityBlocks) {
  const Algebra a(AlgebraDescriptor::SymMat(3));
  const PeirceDecomposition p = PeirceDecompose(a, CanonicalFrame(a));
  const SelfAdjointOperator id(a, Matrix::Identity(6, 6));
  for (const BlockPair& bp : BlockPairsUpTo(3)) {
    const Matrix blk = PeirceBlock(id, p, bp.ij, bp.kl);
    if (bp.ij == bp.kl) {
      EXPECT_LE((blk - Matrix::Identity(blk.rows(), blk.cols())).norm(), 1e-12);
    } else {
      EXPECT_LE(blk.norm(), 1e-12);
    }
  }
}

TEST(PeirceBlockTest, HornDiagonalCoupling) {
  const Algebra a(AlgebraDescriptor::SymMat(5));
  const PeirceDecomposition p = PeirceDecompose(a, CanonicalFrame(a));
  const SelfAdjointOperator h = BuildHorn(ExtremeRaySet::Canonical(a));
  // H_{11,22} = -|c1||c2| in normalized bases.
  EXPECT_NEAR(PeirceBlock(h, p, {1, 1}, {2, 2})(0, 0), -1.0, 1e-12);
}

TEST(PeirceBlockTest, EmbedRoundTrip) {
  const Algebra a(AlgebraDescriptor::Spin(5));
  const PeirceDecomposition p = PeirceDecompose(a, CanonicalFrame(a));
  const Matrix blk = Matrix::Random(1, 3);
  const SelfAdjointOperator e = EmbedBlock(p, {1, 1}, {1, 2}, blk);
  EXPECT_LE((PeirceBlock(e, p, {1, 1}, {1, 2}) - blk).norm(), 1e-12);
  EXPECT_LE(PeirceBlock(e, p, {1, 2}, {1, 2}).norm(), 1e-12);
}

TEST(OrderTest, BlockPairs) {
  EXPECT_TRUE(BlockPrecedesOrEqual({1, 2}, {2, 2}));
  EXPECT_TRUE(BlockPrecedesOrEqual({2, 2}, {1, 3}));
  EXPECT_FALSE(BlockPrecedesOrEqual({1, 3}, {2, 2}));
  EXPECT_EQ(BlocksUpTo(5).size(), 15u);
  EXPECT_EQ(BlockPairsUpTo(5).size(), 120u);
  EXPECT_EQ(BlockPairsUpTo(6).size(), 231u);
  for (const BlockPair& bp : BlockPairsUpTo(6)) {
    EXPECT_TRUE(BlockPrecedesOrEqual(bp.ij, bp.kl));
  }
}

TEST(OperatorTest, MultAndQuadRep) {
  std::mt19937_64 rng(12);
  const Algebra a(AlgebraDescriptor::Spin(4));
  const Element c = RandomElement(a, rng);
  const Element x = RandomElement(a, rng);
  EXPECT_LE((MultOperator(c).Apply(x) - Product(c, x)).Norm(), 1e-12);
  const Element want = 2.0 * Product(c, Product(c, x)) - Product(Square(c), x);
  EXPECT_LE((QuadRep(c).Apply(x) - want).Norm(), 1e-10 * (1 + want.Norm()));
}

}  // namespace
}  // namespace symcone
