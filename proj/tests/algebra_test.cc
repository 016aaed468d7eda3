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


#include "symcone/algebra.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "symcone/error.h"
#include "symcone/operators.h"

namespace symcone {
namespace {

std::vector<AlgebraDescriptor> TestAlgebras() {
  return {AlgebraDescriptor::Hadamard(1),
          AlgebraDescriptor::Hadamard(5),
          AlgebraDescriptor::Spin(2),
          AlgebraDescriptor::Spin(3),
          AlgebraDescriptor::Spin(6),
          AlgebraDescriptor::SymMat(1),
          AlgebraDescriptor::SymMat(3),
          AlgebraDescriptor::SymMat(5),
          AlgebraDescriptor::Product({AlgebraDescriptor::Spin(3),
                                      AlgebraDescriptor::Hadamard(2),
                                      AlgebraDescriptor::SymMat(2)})};
}

Element E(const Algebra& a, std::initializer_list<double> v) {
  Vector c(v.size());
  int k = 0;
  for (double x : v) c(k++) = x;
  return a.FromCoords(c);
}

TEST(DescriptorTest, DimAndRank) {
  const Algebra h5(AlgebraDescriptor::Hadamard(5));
  EXPECT_EQ(h5.dim(), 5);
  EXPECT_EQ(h5.rank(), 5);
  EXPECT_EQ(h5.Unit().coords(), Vector::Ones(5));

  const Algebra s3(AlgebraDescriptor::Spin(3));
  EXPECT_EQ(s3.dim(), 3);
  EXPECT_EQ(s3.rank(), 2);
  EXPECT_EQ(s3.Unit().coords(), Vector::Unit(3, 0));

  const Algebra m3(AlgebraDescriptor::SymMat(3));
  EXPECT_EQ(m3.dim(), 6);
  EXPECT_EQ(m3.rank(), 3);
  Vector unit(6);
  unit << 1, 1, 1, 0, 0, 0;
  EXPECT_EQ(m3.Unit().coords(), unit);

  const AlgebraDescriptor p = AlgebraDescriptor::Product(
      {AlgebraDescriptor::Spin(3), AlgebraDescriptor::SymMat(2)});
  EXPECT_EQ(p.Dim(), 6);
  EXPECT_EQ(p.Rank(), 4);
}

TEST(DescriptorTest, RejectsInvalid) {
  EXPECT_THROW(AlgebraDescriptor::Hadamard(0).Validate(), Error);
  EXPECT_THROW(AlgebraDescriptor::Spin(1).Validate(), Error);
  EXPECT_THROW(AlgebraDescriptor::SymMat(0).Validate(), Error);
  EXPECT_THROW(AlgebraDescriptor::Product({}).Validate(), Error);
  EXPECT_THROW(Algebra(AlgebraDescriptor::Spin(1)), Error);
}

TEST(ProductTest, KnownValues) {
  const Algebra h2(AlgebraDescriptor::Hadamard(2));
  EXPECT_EQ(Product(E(h2, {1, 2}), E(h2, {3, 4})).coords(), Eigen::Vector2d(3, 8));

  // Spin: (x0, xb)∘(y0, yb) = (x•y, x0 yb + y0 xb).
  const Algebra s3(AlgebraDescriptor::Spin(3));
  EXPECT_EQ(Product(E(s3, {1, 1, 0}), E(s3, {1, 0, 1})).coords(),
            Eigen::Vector3d(1, 1, 1));
}

TEST(ProductTest, SymMatMatchesMatrixJordanProduct) {
  std::mt19937_64 rng(3);
  const Algebra m(AlgebraDescriptor::SymMat(4));
  for (int t = 0; t < 20; ++t) {
    const Element x = RandomElement(m, rng);
    const Element y = RandomElement(m, rng);
    const Matrix xm = CoordsToSymMat(x.coords(), 4);
    const Matrix ym = CoordsToSymMat(y.coords(), 4);
    const Matrix want = 0.5 * (xm * ym + ym * xm);
    EXPECT_LE((CoordsToSymMat(Product(x, y).coords(), 4) - want).norm(),
              1e-12 * (1 + want.norm()));
    EXPECT_NEAR(Inner(x, y), (xm * ym).trace(), 1e-12 * (1 + xm.norm() * ym.norm()));
  }
}

TEST(ProductTest, MismatchThrows) {
  const Algebra a(AlgebraDescriptor::Hadamard(3));
  const Algebra b(AlgebraDescriptor::Spin(3));
  try {
    Product(a.Unit(), b.Unit());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlgebraMismatch);
  }
}

TEST(InnerTest, KnownValues) {
  const Algebra h3(AlgebraDescriptor::Hadamard(3));
  EXPECT_DOUBLE_EQ(Inner(E(h3, {1, 2, 3}), E(h3, {1, 1, 1})), 6.0);
  const Algebra m2(AlgebraDescriptor::SymMat(2));
  Matrix x = Matrix::Zero(2, 2), y = Matrix::Zero(2, 2);
  x.diagonal() << 1, 2;
  y.diagonal() << 3, 4;
  EXPECT_DOUBLE_EQ(Inner(m2.FromCoords(SymMatToCoords(x)),
                         m2.FromCoords(SymMatToCoords(y))),
                   11.0);
}

TEST(MultiplicationMatrixTest, KnownValues) {
  const Algebra h4(AlgebraDescriptor::Hadamard(4));
  const Element a = E(h4, {1, -2, 3, 0.5});
  EXPECT_EQ(MultiplicationMatrix(a), Matrix(a.coords().asDiagonal()));

  const Algebra s3(AlgebraDescriptor::Spin(3));
  EXPECT_EQ(MultiplicationMatrix(E(s3, {1, 0, 0})), Matrix::Identity(3, 3));
  Matrix l1(3, 3);
  l1 << 0, 1, 0, 1, 0, 0, 0, 0, 0;
  EXPECT_EQ(MultiplicationMatrix(E(s3, {0, 1, 0})), l1);
}

TEST(SpectralTest, SpinExample) {
  const Algebra s3(AlgebraDescriptor::Spin(3));
  const SpectralDecomposition d = SpectralDecompose(E(s3, {2, 1, 0}));
  ASSERT_EQ(d.eigenvalues.size(), 2u);
  EXPECT_NEAR(d.eigenvalues[0], 3.0, 1e-14);
  EXPECT_NEAR(d.eigenvalues[1], 1.0, 1e-14);
  EXPECT_LE((d.frame[0].coords() - Eigen::Vector3d(0.5, 0.5, 0)).norm(), 1e-14);
  EXPECT_LE((d.frame[1].coords() - Eigen::Vector3d(0.5, -0.5, 0)).norm(), 1e-14);
}

TEST(SpectralTest, UnitHasAllOnes) {
  for (const auto& d : TestAlgebras()) {
    const Algebra a(d);
    for (double l : SpectralDecompose(a.Unit()).eigenvalues) {
      EXPECT_NEAR(l, 1.0, 1e-12) << d.DebugString();
    }
  }
}

TEST(SpectralTest, RepeatedEigenvaluesStillGiveAFrame) {
  const Algebra m(AlgebraDescriptor::SymMat(4));
  Matrix x = Matrix::Identity(4, 4);
  x(3, 3) = 2.0;
  const SpectralDecomposition d =
      SpectralDecompose(m.FromCoords(SymMatToCoords(x)));
  EXPECT_EQ(d.frame.size(), 4u);
  for (size_t i = 0; i < d.frame.size(); ++i) {
    EXPECT_LE((Square(d.frame[i]) - d.frame[i]).Norm(), 1e-10);
  }
}

TEST(ConeTest, Membership) {
  const Algebra h5(AlgebraDescriptor::Hadamard(5));
  EXPECT_TRUE(ConeContains(E(h5, {1, 0, 2, 3, 0})));
  EXPECT_FALSE(ConeContains(E(h5, {1, 0, -2, 3, 0})));
  const Algebra s3(AlgebraDescriptor::Spin(3));
  EXPECT_FALSE(ConeContains(E(s3, {1, 1, 1})));
  EXPECT_TRUE(ConeContains(E(s3, {std::sqrt(2.0), 1, 1})));
}

TEST(QuadraticRepresentationTest, KnownValues) {
  const Algebra h4(AlgebraDescriptor::Hadamard(4));
  const Element c = E(h4, {1, -2, 3, 0.5});
  EXPECT_LE((QuadraticRepresentationMatrix(c) -
             Matrix(c.coords().cwiseAbs2().asDiagonal()))
                .norm(),
            1e-14);
  for (const auto& d : TestAlgebras()) {
    const Algebra a(d);
    EXPECT_LE((QuadraticRepresentationMatrix(a.Unit()) -
               Matrix::Identity(a.dim(), a.dim()))
                  .norm(),
              1e-13);
  }
}

TEST(RandomTest, Determinism) {
  const Algebra a(AlgebraDescriptor::SymMat(3));
  EXPECT_EQ(RandomConeElement(a, 7).coords(), RandomConeElement(a, 7).coords());
  EXPECT_NE(RandomConeElement(a, 7).coords(), RandomConeElement(a, 8).coords());
  EXPECT_TRUE(ConeContains(RandomConeElement(a, 7)));
}

TEST(IdempotentNormsTest, PerAlgebra) {
  const Algebra s3(AlgebraDescriptor::Spin(3));
  for (double n : IdempotentNorms(s3)) EXPECT_NEAR(n, std::sqrt(0.5), 1e-15);
  const Algebra m3(AlgebraDescriptor::SymMat(3));
  for (double n : IdempotentNorms(m3)) EXPECT_DOUBLE_EQ(n, 1.0);
}

// Properties over every test algebra and many seeds.
class AlgebraPropertyTest
    : public testing::TestWithParam<AlgebraDescriptor> {};

TEST_P(AlgebraPropertyTest, JordanAxioms) {
  const Algebra a(GetParam());
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Element x = RandomElement(a, rng);
    const Element y = RandomElement(a, rng);
    const Element z = RandomElement(a, rng);
    const double s = x.Norm() * y.Norm();
    EXPECT_LE((Product(a.Unit(), x) - x).Norm(), 1e-12 * x.Norm());
    EXPECT_LE((Product(x, y) - Product(y, x)).Norm(), 1e-12 * s);
    const Element x2 = Square(x);
    EXPECT_LE((Product(x, Product(x2, y)) - Product(x2, Product(x, y))).Norm(),
              1e-10 * s * x.Norm() * x.Norm());
    EXPECT_LE(std::abs(Inner(Product(x, y), z) - Inner(x, Product(y, z))),
              1e-10 * s * z.Norm());
  }
}

TEST_P(AlgebraPropertyTest, SpectralReconstruction) {
  const Algebra a(GetParam());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Element x = RandomElement(a, rng);
    const SpectralDecomposition d = SpectralDecompose(x);
    EXPECT_EQ(static_cast<int>(d.frame.size()), a.rank());
    EXPECT_LE((d.Reconstruct() - x).Norm(), 1e-9 * x.Norm());
    Element sum = a.Zero();
    for (const Element& c : d.frame) sum += c;
    EXPECT_LE((sum - a.Unit()).Norm(), 1e-9);
  }
}

TEST_P(AlgebraPropertyTest, SquaresAreInTheCone) {
  const Algebra a(GetParam());
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    EXPECT_TRUE(ConeContains(Square(RandomElement(a, rng))));
  }
}

TEST_P(AlgebraPropertyTest, QuadraticRepresentationPreservesCone) {
  const Algebra a(GetParam());
  std::mt19937_64 rng(8);
  const Element c = RandomElement(a, rng);
  const Matrix q = QuadraticRepresentationMatrix(c);
  const Element c2 = Square(c);
  const Matrix lc = MultiplicationMatrix(c);
  EXPECT_LE((q - (2 * lc * lc - MultiplicationMatrix(c2))).norm(),
            1e-10 * (1 + q.norm()));
  for (int t = 0; t < 50; ++t) {
    const Element x = RandomConeElement(a, rng);
    EXPECT_TRUE(ConeContains(a.FromCoords(q * x.coords()), 1e-8));
  }
}

INSTANTIATE_TEST_SUITE_P(All, AlgebraPropertyTest,
                         testing::ValuesIn(TestAlgebras()));

}  // namespace
}  // namespace symcone
