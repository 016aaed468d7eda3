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


#include "symcone/sos.h"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "symcone/error.h"
#include "symcone/hierarchy.h"
#include "symcone/horn.h"
#include "symcone/linalg.h"
#include "symcone/sdp.h"

namespace symcone {
namespace {

SdpConstraint Pin(int n, int i, int j, double value) {
  Matrix a = Matrix::Zero(n, n);
  a(i, j) = a(j, i) = 1.0;
  return {SparseSymmetric::FromDense(a), i == j ? value : 2 * value};
}

TEST(SdpTest, TraceBudget) {
  SdpProblem p;
  p.dim = 2;
  p.constraints.push_back(
      {SparseSymmetric::FromDense(Matrix::Identity(2, 2)), 2.0});
  const SdpSolution s = SolveMargin(p);
  ASSERT_TRUE(s.converged);
  EXPECT_NEAR(s.margin, 1.0, 1e-7);
  ASSERT_TRUE(s.primal.has_value());
  EXPECT_LE((*s.primal - Matrix::Identity(2, 2)).norm(), 1e-6);
  EXPECT_TRUE(VerifySolution(p, s));
}

TEST(SdpTest, PinnedMatrixHasDualCertificate) {
  SdpProblem p;
  p.dim = 2;
  p.constraints = {Pin(2, 0, 0, 1), Pin(2, 1, 1, 1), Pin(2, 0, 1, 2)};
  SdpSolution s = SolveMargin(p);
  EXPECT_NEAR(s.margin, -1.0, 1e-7);
  ASSERT_TRUE(s.dual.has_value());
  EXPECT_TRUE(VerifySolution(p, s));
  // Independent check: sum y_k A_k is PSD and b^T y < 0.
  Matrix m = Matrix::Zero(2, 2);
  double bound = 0.0;
  for (size_t k = 0; k < p.constraints.size(); ++k) {
    m += (*s.dual)(k) * p.constraints[k].a.ToDense(2);
    bound += (*s.dual)(k) * p.constraints[k].b;
  }
  EXPECT_GE(Eigen::SelfAdjointEigenSolver<Matrix>(m).eigenvalues()(0), -1e-8);
  EXPECT_LE(bound, -1e-6);

  SdpSolution flipped = s;
  *flipped.dual = -*flipped.dual;
  EXPECT_FALSE(VerifySolution(p, flipped));
  SdpSolution bumped = s;
  (*bumped.primal)(0, 0) += 1.0;
  EXPECT_FALSE(VerifySolution(p, bumped));
}

TEST(SdpTest, AffineInfeasibleAndSizeCap) {
  SdpProblem p;
  p.dim = 2;
  p.constraints = {Pin(2, 0, 0, 1), Pin(2, 0, 0, 2)};
  try {
    SolveMargin(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAffineInfeasible);
  }
  SdpProblem big;
  big.dim = 1;
  big.constraints.assign(kMaxSdpConstraints + 1, Pin(1, 0, 0, 1));
  EXPECT_THROW(SolveMargin(big), Error);
}

TEST(SdpTest, RedundantConstraintsAreTolerated) {
  SdpProblem p;
  p.dim = 3;
  p.constraints = {Pin(3, 0, 0, 1), Pin(3, 0, 0, 1), Pin(3, 1, 2, 0.25)};
  const SdpSolution s = SolveMargin(p);
  EXPECT_TRUE(s.converged);
  EXPECT_TRUE(VerifySolution(p, s));
}

double IdentityMargin(int n) { return 2.0 / (n + 1); }

TEST(SosTest, IdentityMarginOnOrthant) {
  // Gram blocks: diagonal 1, off-diagonal g with -2g on the cross terms, so
  // the best margin is 2/(n+1).
  for (int n = 2; n <= 5; ++n) {
    const Algebra a(AlgebraDescriptor::Hadamard(n));
    const SosResult r = SosTest(SelfAdjointOperator(a, Matrix::Identity(n, n)), 0);
    EXPECT_EQ(r.status, SosStatus::kFeasible);
    EXPECT_NEAR(r.margin, IdentityMargin(n), 1e-6) << n;
  }
}

TEST(SosTest, IdentityFeasibleEverywhere) {
  for (const auto& d :
       {AlgebraDescriptor::Spin(3), AlgebraDescriptor::Spin(5),
        AlgebraDescriptor::SymMat(2), AlgebraDescriptor::SymMat(3),
        AlgebraDescriptor::Product(
            {AlgebraDescriptor::Spin(3), AlgebraDescriptor::Hadamard(2)})}) {
    const Algebra a(d);
    const SosResult r = SosTest(
        SelfAdjointOperator(a, Matrix::Identity(a.dim(), a.dim())), 0);
    EXPECT_EQ(r.status, SosStatus::kFeasible) << d.DebugString();
    EXPECT_GE(r.margin, -1e-7);
  }
}

TEST(SosTest, HornIsOutsideLevelZero) {
  const Algebra a(AlgebraDescriptor::Hadamard(5));
  const SelfAdjointOperator h = BuildHorn(ExtremeRaySet::Canonical(a));
  const SosResult r = SosTest(h, 0);
  ASSERT_EQ(r.status, SosStatus::kInfeasible);
  EXPECT_LE(r.dual_bound, -1e-6);
  EXPECT_EQ(r.basis.size(), 15u);
  const Polynomial target = QuarticExpand(h);
  EXPECT_TRUE(VerifySosResult(target, r));

  // Rebuild the moment matrix from y by hand.
  std::map<Exponent, int> index;
  for (size_t k = 0; k < r.monomials.size(); ++k) index[r.monomials[k]] = k;
  const int m = static_cast<int>(r.basis.size());
  Matrix lambda(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Exponent e(5);
      for (int v = 0; v < 5; ++v) e[v] = r.basis[i][v] + r.basis[j][v];
      lambda(i, j) = r.farkas(index.at(e));
    }
  }
  EXPECT_GE(MinSymmetricEigenvalue(lambda), -1e-8 * r.farkas.norm());
  double bound = 0.0;
  for (const auto& [e, c] : target.terms()) bound += c * r.farkas(index.at(e));
  EXPECT_LE(bound, -1e-6);

  SosResult tampered = r;
  tampered.farkas = -tampered.farkas;
  EXPECT_FALSE(VerifySosResult(target, tampered));
}

TEST(SosTest, HornEntersLevelOne) {
  const Algebra a(AlgebraDescriptor::Hadamard(5));
  const SosResult r = SosTest(BuildHorn(ExtremeRaySet::Canonical(a)), 1);
  EXPECT_EQ(r.status, SosStatus::kFeasible);
}

TEST(SosTest, LorentzFormIsSos) {
  const Algebra a(AlgebraDescriptor::Spin(3));
  const Matrix m = Eigen::Vector3d(1, -1, -1).asDiagonal();
  const SosResult r = SosTest(SelfAdjointOperator(a, m), 0);
  EXPECT_EQ(r.status, SosStatus::kFeasible);
  EXPECT_GE(r.margin, -1e-7);
  // m^T G m reassembles the quartic.
  Polynomial sum(3);
  for (size_t i = 0; i < r.basis.size(); ++i) {
    for (size_t j = 0; j < r.basis.size(); ++j) {
      Exponent e(3);
      for (int v = 0; v < 3; ++v) e[v] = r.basis[i][v] + r.basis[j][v];
      sum.AddTerm(e, r.gram(i, j));
    }
  }
  EXPECT_LE(sum.MaxCoefficientDifference(QuarticExpand(SelfAdjointOperator(a, m))),
            1e-6);
}

TEST(SosTest, MonotoneInLevel) {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> g;
  for (int t = 0; t < 6; ++t) {
    const Algebra a(t % 2 ? AlgebraDescriptor::Spin(3)
                          : AlgebraDescriptor::SymMat(2));
    Matrix b(a.dim(), a.dim());
    for (int k = 0; k < b.size(); ++k) b.data()[k] = g(rng);
    const SelfAdjointOperator op(a, b * b.transpose());
    ASSERT_EQ(SosTest(op, 0).status, SosStatus::kFeasible);
    EXPECT_EQ(SosTest(op, 1).status, SosStatus::kFeasible);
  }
}

TEST(SosTest, RejectsBadInput) {
  const Algebra a(AlgebraDescriptor::Hadamard(2));
  const SelfAdjointOperator id(a, Matrix::Identity(2, 2));
  EXPECT_THROW(SosTest(id, 2), Error);
  SosOptions tiny;
  tiny.max_basis_size = 2;
  try {
    SosTest(id, 0, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeCap);
  }
}

}  // namespace
}  // namespace symcone
