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

#include "symcone/horn.h"

#include <cmath>

#include "symcone/error.h"

namespace symcone {

int CyclicAdd(int i, int k) { return ((i - 1 + k) % 5 + 5) % 5 + 1; }

Matrix5 HornMatrix() {
  Matrix5 h;
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      const int d = ((j - i) % 5 + 5) % 5;
      h(i - 1, j - 1) = (d == 0 || d == 2 || d == 3) ? 1.0 : -1.0;
    }
  }
  return h;
}

ExtremeRaySet::ExtremeRaySet(std::vector<Element> idempotents,
                             const Vector5& scales)
    : idempotents_(std::move(idempotents)), scales_(scales) {
  if (idempotents_.size() != 5) {
    throw Error(ErrorCode::kParameter, "need exactly five idempotents");
  }
  for (int i = 0; i < 5; ++i) {
    if (!(scales_(i) > 0.0) || !std::isfinite(scales_(i))) {
      throw Error(ErrorCode::kParameter, "scales must be positive");
    }
  }
  ValidateIdempotents(idempotents_);
  for (int i = 0; i < 5; ++i) {
    deltas_.push_back(scales_(i) * idempotents_[i]);
    if (!ConeContains(deltas_.back())) {
      throw Error(ErrorCode::kFrame, "extreme ray outside the cone");
    }
  }
}

ExtremeRaySet ExtremeRaySet::Canonical(const Algebra& algebra,
                                       const Vector5& scales) {
  if (algebra.rank() < 5) {
    throw Error(ErrorCode::kParameter, "the Horn construction needs rank >= 5");
  }
  std::vector<Element> frame = CanonicalFrame(algebra);
  frame.resize(5, algebra.Zero());
  return ExtremeRaySet(std::move(frame), scales);
}

Matrix ExtremeRaySet::DeltaMatrix() const {
  Matrix d(algebra().dim(), 5);
  for (int i = 0; i < 5; ++i) d.col(i) = deltas_[i].coords();
  return d;
}

std::vector<Element> RandomFrame(const Algebra& algebra, std::mt19937_64& rng) {
  return SpectralDecompose(RandomElement(algebra, rng)).frame;
}

SelfAdjointOperator BuildHorn(const ExtremeRaySet& rays) {
  const Matrix d = rays.DeltaMatrix();
  return SelfAdjointOperator(rays.algebra(), d * HornMatrix() * d.transpose());
}

Vector5 VDelta(const ExtremeRaySet& rays, const Element& x) {
  CheckSameAlgebra(x.algebra(), rays.algebra());
  return rays.DeltaMatrix().transpose() * x.coords();
}

Witness NonPsdWitness(const SelfAdjointOperator& h, const ExtremeRaySet& rays) {
  auto unit_dual = [&](int i) {
    const Element& d = rays.delta(i);
    return (1.0 / Inner(d, d)) * d;
  };
  Element x = unit_dual(4) - unit_dual(1) - unit_dual(2);
  const double value = h.QuadraticForm(x);
  return {std::move(x), value};
}

Element ConjugatingElement(const std::vector<Element>& frame,
                           const std::vector<double>& scales) {
  if (frame.empty()) throw Error(ErrorCode::kParameter, "empty frame");
  if (scales.size() > frame.size()) {
    throw Error(ErrorCode::kParameter, "more scales than frame idempotents");
  }
  Element c = frame.front().algebra().Zero();
  for (size_t i = 0; i < frame.size(); ++i) {
    const double a = i < scales.size() ? scales[i] : 1.0;
    if (!(a > 0.0)) throw Error(ErrorCode::kParameter, "scales must be positive");
    c += std::sqrt(a) * frame[i];
  }
  return c;
}

SelfAdjointOperator QcConjugate(const SelfAdjointOperator& h,
                                const std::vector<Element>& frame,
                                const std::vector<double>& scales) {
  const Matrix q = QuadRep(ConjugatingElement(frame, scales)).matrix();
  return SelfAdjointOperator(h.algebra(), q * h.matrix() * q);
}

std::vector<BlockKey> TripleBlocks(int i) {
  auto key = [](int a, int b) { return BlockKey{std::min(a, b), std::max(a, b)}; };
  const int j = CyclicAdd(i, 1);
  const int k = CyclicAdd(i, 2);
  return {key(i, i), key(i, j), key(j, j), key(i, k), key(j, k), key(k, k)};
}

CertificateParts BuildCertificateParts(const PeirceDecomposition& p) {
  const int rp = p.rank();
  if (rp < 6) throw Error(ErrorCode::kParameter, "certificate parts need rank >= 6");
  const Algebra& alg = p.algebra();
  auto c = [&](int i) -> const Element& { return p.idempotent(i); };
  auto t = [&](int i) { return 1.0 / c(i).Norm(); };
  auto u = [&](int i, int j) {
    return Element(alg, p.Basis(i, rp).col(j - 1));
  };

  CertificateParts parts{Tensor(c(rp)), SelfAdjointOperator::Zero(alg),
                         SelfAdjointOperator::Zero(alg), {}, {}};
  for (int i = 1; i <= 5; ++i) {
    const int n = p.BlockDim(i, rp);
    const int next = CyclicAdd(i, 1);
    for (int j = 1; j <= n; ++j) {
      for (int k = j; k <= n; ++k) {
        const Element w = u(i, j) + u(i, k);
        for (double s : {1.0, -1.0}) {
          Element g = 2.0 * Square(t(i) * c(i) + s * w) +
                      (2.0 + Inner(w, w)) * t(next) * t(next) * c(next);
          parts.d4 += Tensor(g);
          parts.d4_generators.push_back(std::move(g));
        }
      }
    }
  }
  for (int i = 6; i <= rp - 1; ++i) {
    const int n = p.BlockDim(i, rp);
    for (int j = 1; j <= n; ++j) {
      for (int k = j; k <= n; ++k) {
        const Element w = u(i, j) + u(i, k);
        for (double s : {1.0, -1.0}) {
          Element g = Square(c(i) + s * w);
          parts.d5 += Tensor(g);
          parts.d5_generators.push_back(std::move(g));
        }
      }
    }
  }
  return parts;
}

}  // namespace symcone
