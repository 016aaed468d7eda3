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

#include "symcone/hierarchy.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symcone/error.h"
#include "symcone/linalg.h"
#include "symcone/peirce.h"
#include "symcone/sdp.h"

namespace symcone {
namespace {

constexpr double kCopositiveThreshold = -1e-7;

Matrix GeneratorMatrix(const std::vector<Element>& g) {
  Matrix d(g.front().dim(), g.size());
  for (size_t i = 0; i < g.size(); ++i) d.col(i) = g[i].coords();
  return d;
}

// M = P + N, P PSD, N >= 0 entrywise, as one block-diagonal matrix
// diag(P, N_11, N_12, ...) whose off-block entries are pinned to zero.
CopositivityVerdict PsdPlusNonnegative(const Matrix& m) {
  const int r = static_cast<int>(m.rows());
  const int dim = r + r * (r + 1) / 2;
  SdpProblem problem;
  problem.dim = dim;
  int slot = r;
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j, ++slot) {
      SdpConstraint c;
      c.a.entries.push_back({i, j, i == j ? 1.0 : 0.5});
      c.a.entries.push_back({slot, slot, 1.0});
      c.b = m(i, j);
      problem.constraints.push_back(std::move(c));
    }
  }
  for (int q = 0; q < dim; ++q) {
    for (int p = 0; p < q; ++p) {
      if (q < r) continue;
      SdpConstraint c;
      c.a.entries.push_back({p, q, 0.5});
      problem.constraints.push_back(std::move(c));
    }
  }
  const SdpSolution s = SolveMargin(problem);
  return {s.margin >= kCopositiveThreshold, s.margin};
}

Vector ProjectToSimplex(const Vector& v) {
  Vector u = v;
  std::sort(u.data(), u.data() + u.size(), std::greater<double>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (int k = 0; k < u.size(); ++k) {
    cumulative += u(k);
    const double t = (cumulative - 1.0) / (k + 1);
    if (u(k) - t > 0) theta = t;
  }
  return (v.array() - theta).max(0.0).matrix();
}

CopositivityVerdict SimplexMinimum(const Matrix& m) {
  constexpr int kSteps = 40;
  constexpr int kStarts = 16;
  std::vector<std::pair<double, Vector>> best;
  Vector v(5);
  for (int a = 0; a <= kSteps; ++a) {
    for (int b = 0; a + b <= kSteps; ++b) {
      for (int c = 0; a + b + c <= kSteps; ++c) {
        for (int d = 0; a + b + c + d <= kSteps; ++d) {
          v << a, b, c, d, kSteps - a - b - c - d;
          v /= kSteps;
          const double q = v.dot(m * v);
          if (static_cast<int>(best.size()) < kStarts || q < best.back().first) {
            best.emplace_back(q, v);
            std::sort(best.begin(), best.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            if (static_cast<int>(best.size()) > kStarts) best.pop_back();
          }
        }
      }
    }
  }
  const double lipschitz = 2.0 * std::max(1e-12, m.norm());
  double minimum = best.front().first;
  for (auto& [q, start] : best) {
    Vector x = start;
    for (int it = 0; it < 500; ++it) {
      x = ProjectToSimplex(x - (2.0 / lipschitz) * (m * x));
    }
    minimum = std::min(minimum, x.dot(m * x));
  }
  return {minimum >= kCopositiveThreshold, minimum};
}

}  // namespace

SliceMap::SliceMap(std::vector<Element> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorCode::kParameter, "no generators");
  for (size_t i = 0; i < generators_.size(); ++i) {
    CheckSameAlgebra(generators_[i], generators_.front());
    if (generators_[i].Norm() == 0.0) {
      throw Error(ErrorCode::kParameter, "zero generator");
    }
    for (size_t j = 0; j < i; ++j) {
      const double scale = generators_[i].Norm() * generators_[j].Norm();
      if (std::abs(Inner(generators_[i], generators_[j])) > 1e-9 * scale) {
        throw Error(ErrorCode::kParameter, "generators are not orthogonal");
      }
    }
  }
}

SliceMap SliceMap::FromRays(const ExtremeRaySet& rays) {
  return SliceMap(rays.deltas());
}

SelfAdjointOperator SliceMap::Forward(const Matrix& m) const {
  if (m.rows() != size() || m.cols() != size()) {
    throw Error(ErrorCode::kDimension, "slice matrix has the wrong size");
  }
  if (AsymmetryOf(m) > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw Error(ErrorCode::kParameter, "slice matrix is not symmetric");
  }
  const Matrix d = GeneratorMatrix(generators_);
  return SelfAdjointOperator(algebra(), d * m * d.transpose());
}

SliceMap::BackwardResult SliceMap::Backward(const SelfAdjointOperator& a) const {
  CheckSameAlgebra(a.algebra(), algebra());
  const Matrix d = GeneratorMatrix(generators_);
  const Vector sq = d.colwise().squaredNorm().transpose();
  Matrix m = d.transpose() * a.matrix() * d;
  m = m.cwiseQuotient(sq * sq.transpose());
  m = (0.5 * (m + m.transpose())).eval();
  const double residual = (a.matrix() - d * m * d.transpose()).norm() /
                          std::max(1.0, a.matrix().norm());
  if (residual > 1e-8) {
    throw Error(ErrorCode::kNotInSlice,
                "operator is not in the slice; residual " +
                    std::to_string(residual),
                residual);
  }
  return {std::move(m), residual};
}

CopositivityVerdict CopOracleSmall(const Matrix& m) {
  const int r = static_cast<int>(m.rows());
  if (r != m.cols() || r < 1) throw Error(ErrorCode::kDimension, "square matrix");
  if (AsymmetryOf(m) > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw Error(ErrorCode::kParameter, "matrix is not symmetric");
  }
  if (r > 5) throw Error(ErrorCode::kParameter, "copositivity oracle needs r <= 5");
  const Matrix sym = 0.5 * (m + m.transpose());
  return r <= 4 ? PsdPlusNonnegative(sym) : SimplexMinimum(sym);
}

ProbeResult SampleCopositivity(const SelfAdjointOperator& a, int samples,
                               std::mt19937_64& rng,
                               const std::vector<Element>& rays,
                               double threshold) {
  const Algebra& alg = a.algebra();
  std::vector<Element> dual;
  for (const Element& d : rays) dual.push_back((1.0 / Inner(d, d)) * d);
  double minimum = std::numeric_limits<double>::infinity();
  auto record = [&](const Element& x) {
    const double n = x.Norm();
    if (n > 0) minimum = std::min(minimum, a.QuadraticForm(x) / (n * n));
  };
  std::exponential_distribution<double> weight;
  std::bernoulli_distribution keep(0.5);
  int used = 0;
  for (size_t i = 0; i < dual.size() && used < samples; ++i, ++used) {
    record(dual[i]);
  }
  while (used < samples) {
    if (!dual.empty() && used % 2 == 0) {
      Element x = alg.Zero();
      for (const Element& d : dual) {
        if (keep(rng)) x += weight(rng) * d;
      }
      record(x);
    } else {
      record(RandomConeElement(alg, rng));
    }
    ++used;
  }
  return {minimum >= threshold, minimum};
}

Polynomial QuarticExpand(const SelfAdjointOperator& a) {
  const int n = a.dim();
  const auto& t = a.algebra().product_tensor();
  const std::vector<Exponent> quad = MonomialsOfDegree(n, 2);
  std::map<Exponent, int, GradedLexBefore> index;
  for (size_t q = 0; q < quad.size(); ++q) index[quad[q]] = static_cast<int>(q);
  // s[q, k]: coefficient of the q-th quadratic monomial in (x∘x)_k.
  Matrix s = Matrix::Zero(quad.size(), n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double c = i == j ? t[k](i, i) : 2.0 * t[k](i, j);
        if (c == 0.0) continue;
        Exponent e(n, 0);
        ++e[i];
        ++e[j];
        s(index[e], k) += c;
      }
    }
  }
  const Matrix w = s * a.matrix() * s.transpose();
  Polynomial out(n);
  Exponent e(n);
  for (size_t p = 0; p < quad.size(); ++p) {
    for (size_t q = 0; q < quad.size(); ++q) {
      if (w(p, q) == 0.0) continue;
      for (int i = 0; i < n; ++i) e[i] = quad[p][i] + quad[q][i];
      out.AddTerm(e, w(p, q));
    }
  }
  return out;
}

Polynomial DegreeLift(const Polynomial& q, int l) {
  if (l < 0 || l > 2) throw Error(ErrorCode::kParameter, "lift level must be 0, 1 or 2");
  const int n = q.num_vars();
  const Polynomial norm2 = Polynomial::Quadratic(Matrix::Identity(n, n));
  Polynomial out = q;
  for (int k = 0; k < l; ++k) out = out * norm2;
  return out;
}

Polynomial HornThreeTermQuartic(const ExtremeRaySet& rays, int i) {
  if (i < 1 || i > 5) throw Error(ErrorCode::kIndex, "i must be in 1..5");
  const Algebra& alg = rays.algebra();
  const auto& t = alg.product_tensor();
  std::vector<Polynomial> p;
  for (int j = 1; j <= 5; ++j) {
    Matrix q = Matrix::Zero(alg.dim(), alg.dim());
    for (int k = 0; k < alg.dim(); ++k) q += rays.delta(j)[k] * t[k];
    p.push_back(Polynomial::Quadratic(q));
  }
  auto pp = [&](int k) -> const Polynomial& { return p[CyclicAdd(i, k) - 1]; };
  const Polynomial alt = pp(0) - pp(1) + pp(2) - pp(3) + pp(4);
  return alt * alt + 4.0 * ((pp(1) - pp(0)) * pp(4)) + 4.0 * (pp(0) * pp(3));
}

SelfAdjointOperator CpBuild(const std::vector<Element>& generators) {
  if (generators.empty()) throw Error(ErrorCode::kParameter, "no generators");
  SelfAdjointOperator out = SelfAdjointOperator::Zero(generators.front().algebra());
  for (const Element& g : generators) {
    if (!ConeContains(g)) {
      throw Error(ErrorCode::kOutsideCone, "generator outside the cone");
    }
    out += Tensor(g);
  }
  return out;
}

IrreducibilityResult ClassifyQuadraticForm(const Matrix& form) {
  const Matrix sym = 0.5 * (form + form.transpose());
  int rank = 0;
  if (sym.size() > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    for (int k = 0; k < sym.rows(); ++k) {
      rank += std::abs(es.eigenvalues()(k)) > 1e-9 * scale;
    }
  }
  return {sym, rank, rank >= 3};
}

IrreducibilityResult IrreducibilityRank(const ExtremeRaySet& rays, int i) {
  if (i < 1 || i > 5) throw Error(ErrorCode::kIndex, "i must be in 1..5");
  const PeirceDecomposition p = PeirceDecompose(rays.algebra(), rays.idempotents());
  const Matrix basis = StackedBasis(p, TripleBlocks(i));
  const Matrix l = MultiplicationMatrix(rays.delta(i)) -
                   MultiplicationMatrix(rays.delta(CyclicAdd(i, 1))) +
                   MultiplicationMatrix(rays.delta(CyclicAdd(i, 2)));
  return ClassifyQuadraticForm(basis.transpose() * l * basis);
}

}  // namespace symcone
