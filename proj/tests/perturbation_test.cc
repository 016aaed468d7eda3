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


#include "symcone/perturbation.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "symcone/error.h"
#include "symcone/horn.h"

namespace symcone {
namespace {

SelfAdjointOperator RandomOperator(const Algebra& a, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix m(a.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = i; j < a.dim(); ++j) m(i, j) = m(j, i) = g(rng);
  }
  return SelfAdjointOperator(a, m);
}

// Coefficient of eps^power in q(x+) - q(x-), from an exact degree-8 fit on
// equispaced nodes (the library uses Chebyshev nodes and a QR solve).
double Quotient(const SelfAdjointOperator& a, const PerturbationFamily& f) {
  constexpr int kNodes = 9;
  Matrix v(kNodes, kNodes);
  Vector d(kNodes);
  for (int k = 0; k < kNodes; ++k) {
    const double e = 0.25 * (k - 4);
    for (int p = 0; p < kNodes; ++p) v(k, p) = std::pow(e, p);
    d(k) = a.QuadraticForm(f.point(e, 1)) - a.QuadraticForm(f.point(e, -1));
  }
  const Vector c = v.fullPivLu().solve(d);
  return c(f.power) / (2 * f.divisor);
}

TEST(Rank5FamilyTest, HadamardCaseADegenerates) {
  const Algebra a(AlgebraDescriptor::Hadamard(5));
  const PeirceDecomposition p = PeirceDecompose(a, CanonicalFrame(a));
  std::mt19937_64 rng(1);
  const PerturbationFamily f =
      MakeRank5Family(Rank5Case::kA, p, RandomBlockInputs(p, rng));
  EXPECT_TRUE(f.degenerate);
  const SlopeResult s = LeadingCoeffCheck(RandomOperator(a, rng), f);
  EXPECT_NEAR(s.slope, 0.0, 1e-12);
  EXPECT_EQ(s.formula, 0.0);
  EXPECT_TRUE(s.in_cone);
}

TEST(Rank5FamilyTest, IdentityAndHornFormulasVanish) {
  const Algebra a(AlgebraDescriptor::SymMat(5));
  std::mt19937_64 rng(2);
  const PeirceDecomposition p = PeirceDecompose(a, RandomFrame(a, rng));
  const BlockInputs x = RandomBlockInputs(p, rng);
  const SelfAdjointOperator id(a, Matrix::Identity(a.dim(), a.dim()));
  EXPECT_NEAR(MakeRank5Family(Rank5Case::kA, p, x).formula(id), 0.0, 1e-12);
  std::vector<Element> five = p.frame();
  const SelfAdjointOperator h = BuildHorn(ExtremeRaySet(five, Vector5::Ones()));
  for (Rank5Case c : kAllRank5Cases) {
    for (const DihedralMap& sigma : DihedralMap::All()) {
      EXPECT_NEAR(MakeRank5Family(c, p, x, sigma).formula(h), 0.0, 1e-10);
    }
  }
}

// The formulas hold for A in the proof context: a multiple of H on the
// triple-block support and zero on the cases already settled.
TEST(Rank5FamilyTest, SlopesMatchFormulasAndStayInCone) {
  const Algebra a(AlgebraDescriptor::SymMat(5));
  std::mt19937_64 rng(3);
  const PeirceDecomposition p = PeirceDecompose(a, RandomFrame(a, rng));
  const SelfAdjointOperator h =
      BuildHorn(ExtremeRaySet(p.frame(), Vector5::Ones()));
  for (int t = 0; t < 5; ++t) {
    const BlockInputs x = RandomBlockInputs(p, rng);
    for (Rank5Case c : kAllRank5Cases) {
      const SelfAdjointOperator op = Rank5ContextOperator(c, p, h, rng);
      for (const DihedralMap& sigma : DihedralMap::All()) {
        const PerturbationFamily f = MakeRank5Family(c, p, x, sigma);
        const SlopeResult s = LeadingCoeffCheck(op, f);
        const double scale = std::max(1.0, std::abs(s.formula));
        EXPECT_NEAR(s.slope, s.formula, 1e-6 * scale) << f.name;
        EXPECT_NEAR(Quotient(op, f), s.formula, 1e-6 * scale) << f.name;
        EXPECT_LE(s.lower_order, 1e-8 * scale) << f.name;
        EXPECT_TRUE(s.in_cone) << f.name;
        EXPECT_FALSE(f.degenerate);
      }
    }
  }
}

TEST(TailFamilyTest, CaseADecomposesIntoThreeBlocks) {
  const Algebra a(AlgebraDescriptor::SymMat(6));
  std::mt19937_64 rng(4);
  const PeirceDecomposition p = PeirceDecompose(a, RandomFrame(a, rng));
  const BlockInputs x = RandomBlockInputs(p, rng);
  for (const TailIndices& idx : TailCaseIndices(IndexCase::kCaseA, 6)) {
    const PerturbationFamily f = MakeTailFamily(IndexCase::kCaseA, p, x, idx);
    const Element pt = f.point(0.1, 1);
    double outside = 0.0;
    for (const BlockKey& b : BlocksUpTo(6)) {
      const bool allowed = (b == BlockKey{idx.i, idx.i}) ||
                           (b == BlockKey{idx.i, 6}) || (b == BlockKey{6, 6});
      if (!allowed) outside += BlockProject(p, pt, b.i, b.j).Norm();
    }
    EXPECT_LE(outside, 1e-10);
    EXPECT_TRUE(ConeContains(pt));
  }
}

TEST(TailFamilyTest, SlopesMatchFormulas) {
  const Algebra a(AlgebraDescriptor::SymMat(6));
  std::mt19937_64 rng(5);
  const PeirceDecomposition p = PeirceDecompose(a, RandomFrame(a, rng));
  std::vector<Element> five = p.frame();
  five.resize(5, a.Zero());
  const SelfAdjointOperator h = BuildHorn(ExtremeRaySet(five, Vector5::Ones()));
  const BlockInputs x = RandomBlockInputs(p, rng);
  for (IndexCase c : {IndexCase::kCaseA, IndexCase::kCaseB, IndexCase::kCaseC,
                      IndexCase::kCaseD, IndexCase::kCaseE, IndexCase::kCaseF}) {
    const SelfAdjointOperator op = TailContextOperator(c, p, h, rng);
    const auto indices = TailCaseIndices(c, 6);
    EXPECT_FALSE(indices.empty());
    for (const TailIndices& idx : indices) {
      const PerturbationFamily f = MakeTailFamily(c, p, x, idx);
      EXPECT_EQ(ClassifyIndex(f.target, 6), c);
      const SlopeResult s = LeadingCoeffCheck(op, f);
      const double scale = std::max(1.0, std::abs(s.formula));
      EXPECT_NEAR(s.slope, s.formula, 1e-6 * scale) << f.name;
      EXPECT_NEAR(Quotient(op, f), s.formula, 1e-6 * scale) << f.name;
      EXPECT_TRUE(s.in_cone) << f.name;
    }
  }
}

TEST(TailFamilyTest, RejectsBadIndices) {
  const Algebra a(AlgebraDescriptor::SymMat(6));
  const PeirceDecomposition p = PeirceDecompose(a, CanonicalFrame(a));
  std::mt19937_64 rng(6);
  const BlockInputs x = RandomBlockInputs(p, rng);
  EXPECT_THROW(MakeTailFamily(IndexCase::kCaseB, p, x, {2, 0, 1}), Error);
  EXPECT_THROW(MakeTailFamily(IndexCase::kInRankR, p, x, {1, 0, 0}), Error);
}

TEST(Rank5FamilyTest, FreeOperatorBreaksCaseA) {
  // Outside the proof context the A_{22,24} coupling enters the slope.
  const Algebra a(AlgebraDescriptor::SymMat(5));
  std::mt19937_64 rng(10);
  const PeirceDecomposition p = PeirceDecompose(a, RandomFrame(a, rng));
  const SelfAdjointOperator op = RandomOperator(a, rng);
  const BlockInputs x = RandomBlockInputs(p, rng);
  const PerturbationFamily f = MakeRank5Family(Rank5Case::kA, p, x);
  const Element& c2 = p.idempotent(2);
  const Element& x24 = x.at({2, 4});
  const double t1 = 1 / p.idempotent(1).Norm(), t2 = 1 / c2.Norm();
  const double extra = t2 * t2 / (t1 * t1) * Inner(c2, op.Apply(x24));
  EXPECT_NEAR(LeadingCoeffCheck(op, f).slope, f.formula(op) + extra, 1e-8);
}

TEST(LeadingCoeffTest, RejectsTinyEps) {
  const Algebra a(AlgebraDescriptor::SymMat(5));
  const PeirceDecomposition p = PeirceDecompose(a, CanonicalFrame(a));
  std::mt19937_64 rng(7);
  const PerturbationFamily f =
      MakeRank5Family(Rank5Case::kB, p, RandomBlockInputs(p, rng));
  EXPECT_THROW(LeadingCoeffCheck(RandomOperator(a, rng), f, 1e-9), Error);
}

TEST(ContextOperatorTest, AgreesWithHornOnTripleSupport) {
  const Algebra a(AlgebraDescriptor::SymMat(5));
  std::mt19937_64 rng(8);
  const PeirceDecomposition p = PeirceDecompose(a, RandomFrame(a, rng));
  const SelfAdjointOperator h =
      BuildHorn(ExtremeRaySet(p.frame(), Vector5::Ones()));
  const SelfAdjointOperator ctx = Rank5ContextOperator(Rank5Case::kD, p, h, rng);
  const double w = PeirceBlock(ctx, p, {1, 1}, {1, 1})(0, 0) /
                   PeirceBlock(h, p, {1, 1}, {1, 1})(0, 0);
  for (const BlockPair& bp : BlockPairsUpTo(5)) {
    const Matrix blk = PeirceBlock(ctx, p, bp.ij, bp.kl);
    if (InTripleSupport(bp)) {
      EXPECT_LE((blk - w * PeirceBlock(h, p, bp.ij, bp.kl)).norm(), 1e-10);
    } else if (*ClassifyRank5(bp) < Rank5Case::kD) {
      EXPECT_LE(blk.norm(), 1e-10);
    }
  }
}

}  // namespace
}  // namespace symcone
