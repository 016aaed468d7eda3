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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "symcone/error.h"
#include "symcone/linalg.h"

namespace symcone {
namespace {

using Kind = AlgebraDescriptor::Kind;

// Row/column of each symmetric-matrix coordinate.
std::vector<std::pair<int, int>> SymMatCells(int d) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < d; ++i) cells.emplace_back(i, i);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) cells.emplace_back(i, j);
  }
  return cells;
}

void Flatten(const AlgebraDescriptor& desc, int& offset, int& frame_offset,
             std::vector<Algebra::SimpleFactor>& out) {
  if (desc.kind == Kind::kProduct) {
    for (const AlgebraDescriptor& f : desc.factors) {
      Flatten(f, offset, frame_offset, out);
    }
    return;
  }
  Algebra::SimpleFactor f{desc.kind, desc.size,  offset,
                          desc.Dim(), desc.Rank(), frame_offset};
  offset += f.dim;
  frame_offset += f.rank;
  out.push_back(f);
}

void FillTensor(const Algebra::SimpleFactor& f, std::vector<Matrix>& t) {
  const int o = f.offset;
  switch (f.kind) {
    case Kind::kHadamard:
      for (int k = 0; k < f.dim; ++k) t[o + k](o + k, o + k) = 1.0;
      break;
    case Kind::kSpin:
      for (int k = 0; k < f.dim; ++k) t[o](o + k, o + k) = 1.0;
      for (int k = 1; k < f.dim; ++k) {
        t[o + k](o, o + k) = 1.0;
        t[o + k](o + k, o) = 1.0;
      }
      break;
    case Kind::kSymmetricMatrix: {
      const int d = f.size;
      const auto cells = SymMatCells(d);
      std::vector<Matrix> basis;
      for (const auto& [i, j] : cells) {
        Matrix b = Matrix::Zero(d, d);
        if (i == j) {
          b(i, i) = 1.0;
        } else {
          b(i, j) = b(j, i) = M_SQRT1_2;
        }
        basis.push_back(std::move(b));
      }
      for (int a = 0; a < f.dim; ++a) {
        for (int b = a; b < f.dim; ++b) {
          const Matrix ab = basis[a] * basis[b];
          const Vector c = SymMatToCoords(0.5 * (ab + ab.transpose()));
          for (int k = 0; k < f.dim; ++k) {
            if (c(k) == 0.0) continue;
            t[o + k](o + a, o + b) = c(k);
            t[o + k](o + b, o + a) = c(k);
          }
        }
      }
      break;
    }
    case Kind::kProduct:
      break;
  }
}

void DecomposeSimple(const Algebra::SimpleFactor& f, const Algebra& algebra,
                     const Vector& x, SpectralDecomposition& out) {
  const auto seg = x.segment(f.offset, f.dim);
  auto push = [&](double lambda, const Vector& local) {
    Vector coords = Vector::Zero(algebra.dim());
    coords.segment(f.offset, f.dim) = local;
    out.eigenvalues.push_back(lambda);
    out.frame.emplace_back(algebra, std::move(coords));
  };
  switch (f.kind) {
    case Kind::kHadamard:
      for (int k = 0; k < f.dim; ++k) {
        push(seg(k), Vector::Unit(f.dim, k));
      }
      break;
    case Kind::kSpin: {
      const double x0 = seg(0);
      const Vector bar = seg.tail(f.dim - 1);
      const double r = bar.norm();
      Vector u = Vector::Unit(f.dim - 1, 0);
      if (r > 0.0) u = bar / r;
      Vector c = Vector(f.dim);
      c(0) = 0.5;
      c.tail(f.dim - 1) = 0.5 * u;
      push(x0 + r, c);
      c.tail(f.dim - 1) = -0.5 * u;
      push(x0 - r, c);
      break;
    }
    case Kind::kSymmetricMatrix: {
      const int d = f.size;
      Eigen::SelfAdjointEigenSolver<Matrix> es(CoordsToSymMat(seg, d));
      const Vector evals = es.eigenvalues().reverse();
      const Matrix evecs = es.eigenvectors().rowwise().reverse();
      const double gap = 1e-8 * std::max(seg.norm(), 1e-300);
      int start = 0;
      while (start < d) {
        int end = start + 1;
        while (end < d && evals(end - 1) - evals(end) <= gap) ++end;
        const Matrix block = evecs.middleCols(start, end - start);
        const Matrix v = BasisFromProjector(block * block.transpose(),
                                            static_cast<int>(block.cols()));
        const double lambda = evals.segment(start, end - start).mean();
        for (int q = 0; q < v.cols(); ++q) {
          push(lambda, SymMatToCoords(v.col(q) * v.col(q).transpose()));
        }
        start = end;
      }
      break;
    }
    case Kind::kProduct:
      break;
  }
}

}  // namespace

AlgebraDescriptor AlgebraDescriptor::Hadamard(int n) {
  return {Kind::kHadamard, n, {}};
}
AlgebraDescriptor AlgebraDescriptor::Spin(int n) { return {Kind::kSpin, n, {}}; }
AlgebraDescriptor AlgebraDescriptor::SymMat(int d) {
  return {Kind::kSymmetricMatrix, d, {}};
}
AlgebraDescriptor AlgebraDescriptor::Product(
    std::vector<AlgebraDescriptor> factors) {
  return {Kind::kProduct, 0, std::move(factors)};
}

void AlgebraDescriptor::Validate() const {
  switch (kind) {
    case Kind::kHadamard:
      if (size < 1) throw Error(ErrorCode::kDescriptor, "hadamard needs n >= 1");
      break;
    case Kind::kSpin:
      if (size < 2) throw Error(ErrorCode::kDescriptor, "spin needs n >= 2");
      break;
    case Kind::kSymmetricMatrix:
      if (size < 1) throw Error(ErrorCode::kDescriptor, "symmat needs d >= 1");
      break;
    case Kind::kProduct:
      if (factors.empty()) {
        throw Error(ErrorCode::kDescriptor, "product needs at least one factor");
      }
      for (const AlgebraDescriptor& f : factors) f.Validate();
      break;
  }
}

int AlgebraDescriptor::Dim() const {
  switch (kind) {
    case Kind::kHadamard:
    case Kind::kSpin:
      return size;
    case Kind::kSymmetricMatrix:
      return size * (size + 1) / 2;
    case Kind::kProduct: {
      int n = 0;
      for (const AlgebraDescriptor& f : factors) n += f.Dim();
      return n;
    }
  }
  return 0;
}

int AlgebraDescriptor::Rank() const {
  switch (kind) {
    case Kind::kHadamard:
    case Kind::kSymmetricMatrix:
      return size;
    case Kind::kSpin:
      return 2;
    case Kind::kProduct: {
      int r = 0;
      for (const AlgebraDescriptor& f : factors) r += f.Rank();
      return r;
    }
  }
  return 0;
}

std::string AlgebraDescriptor::DebugString() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kHadamard:
      os << "hadamard(" << size << ")";
      break;
    case Kind::kSpin:
      os << "spin(" << size << ")";
      break;
    case Kind::kSymmetricMatrix:
      os << "symmat(" << size << ")";
      break;
    case Kind::kProduct:
      os << "product(";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) os << ", ";
        os << factors[i].DebugString();
      }
      os << ")";
      break;
  }
  return os.str();
}

struct Algebra::Impl {
  AlgebraDescriptor descriptor;
  int dim = 0;
  int rank = 0;
  std::vector<SimpleFactor> factors;
  std::vector<Matrix> tensor;
};

Algebra::Algebra(const AlgebraDescriptor& descriptor) {
  descriptor.Validate();
  auto impl = std::make_shared<Impl>();
  impl->descriptor = descriptor;
  impl->dim = descriptor.Dim();
  impl->rank = descriptor.Rank();
  int offset = 0;
  int frame_offset = 0;
  Flatten(descriptor, offset, frame_offset, impl->factors);
  impl->tensor.assign(impl->dim, Matrix::Zero(impl->dim, impl->dim));
  for (const SimpleFactor& f : impl->factors) FillTensor(f, impl->tensor);
  impl_ = std::move(impl);
}

const AlgebraDescriptor& Algebra::descriptor() const {
  return impl_->descriptor;
}
int Algebra::dim() const { return impl_->dim; }
int Algebra::rank() const { return impl_->rank; }
const std::vector<Algebra::SimpleFactor>& Algebra::simple_factors() const {
  return impl_->factors;
}
const std::vector<Matrix>& Algebra::product_tensor() const {
  return impl_->tensor;
}

Element Algebra::Unit() const {
  Vector e = Vector::Zero(dim());
  for (const SimpleFactor& f : simple_factors()) {
    switch (f.kind) {
      case Kind::kHadamard:
        e.segment(f.offset, f.dim).setOnes();
        break;
      case Kind::kSpin:
        e(f.offset) = 1.0;
        break;
      case Kind::kSymmetricMatrix:
        e.segment(f.offset, f.size).setOnes();
        break;
      case Kind::kProduct:
        break;
    }
  }
  return Element(*this, std::move(e));
}

Element Algebra::Zero() const { return Element(*this, Vector::Zero(dim())); }

Element Algebra::FromCoords(Vector coords) const {
  return Element(*this, std::move(coords));
}

Element Algebra::BasisVector(int k) const {
  if (k < 0 || k >= dim()) throw Error(ErrorCode::kIndex, "basis index");
  return Element(*this, Vector::Unit(dim(), k));
}

bool operator==(const Algebra& a, const Algebra& b) {
  return a.impl_ == b.impl_ || a.impl_->descriptor == b.impl_->descriptor;
}

Element::Element(Algebra algebra, Vector coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim()) {
    throw Error(ErrorCode::kDimension,
                "expected " + std::to_string(algebra_.dim()) +
                    " coordinates, got " + std::to_string(coords_.size()));
  }
}

Element Element::operator-() const { return Element(algebra_, -coords_); }

Element& Element::operator+=(const Element& other) {
  CheckSameAlgebra(*this, other);
  coords_ += other.coords_;
  return *this;
}

Element& Element::operator-=(const Element& other) {
  CheckSameAlgebra(*this, other);
  coords_ -= other.coords_;
  return *this;
}

Element& Element::operator*=(double s) {
  coords_ *= s;
  return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(double s, Element a) { return a *= s; }
Element operator*(Element a, double s) { return a *= s; }

void CheckSameAlgebra(const Algebra& a, const Algebra& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kAlgebraMismatch, a.descriptor().DebugString() +
                                                 " vs " +
                                                 b.descriptor().DebugString());
  }
}

void CheckSameAlgebra(const Element& a, const Element& b) {
  CheckSameAlgebra(a.algebra(), b.algebra());
}

Element Product(const Element& x, const Element& y) {
  CheckSameAlgebra(x, y);
  const auto& t = x.algebra().product_tensor();
  Vector z(x.dim());
  for (int k = 0; k < x.dim(); ++k) z(k) = x.coords().dot(t[k] * y.coords());
  return Element(x.algebra(), std::move(z));
}

Element Square(const Element& x) { return Product(x, x); }

double Inner(const Element& x, const Element& y) {
  CheckSameAlgebra(x, y);
  return x.coords().dot(y.coords());
}

Matrix MultiplicationMatrix(const Element& a) {
  const auto& t = a.algebra().product_tensor();
  const int n = a.dim();
  Matrix l(n, n);
  for (int k = 0; k < n; ++k) l.row(k) = (t[k] * a.coords()).transpose();
  return l;
}

Matrix QuadraticRepresentationMatrix(const Element& c) {
  const Matrix l = MultiplicationMatrix(c);
  return 2.0 * l * l - MultiplicationMatrix(Square(c));
}

Element SpectralDecomposition::Reconstruct() const {
  if (frame.empty()) throw Error(ErrorCode::kParameter, "empty decomposition");
  Element x = frame.front().algebra().Zero();
  for (size_t i = 0; i < frame.size(); ++i) x += eigenvalues[i] * frame[i];
  return x;
}

SpectralDecomposition SpectralDecompose(const Element& x) {
  SpectralDecomposition out;
  for (const Algebra::SimpleFactor& f : x.algebra().simple_factors()) {
    DecomposeSimple(f, x.algebra(), x.coords(), out);
  }
  return out;
}

double MinEigenvalue(const Element& x) {
  const SpectralDecomposition sd = SpectralDecompose(x);
  return *std::min_element(sd.eigenvalues.begin(), sd.eigenvalues.end());
}

bool ConeContains(const Element& x, double tol) {
  return MinEigenvalue(x) >= -tol * std::max(1.0, x.Norm());
}

Element RandomElement(const Algebra& algebra, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector y(algebra.dim());
  for (int k = 0; k < algebra.dim(); ++k) y(k) = normal(rng);
  return Element(algebra, std::move(y));
}

Element RandomConeElement(const Algebra& algebra, std::mt19937_64& rng) {
  return Square(RandomElement(algebra, rng));
}

Element RandomConeElement(const Algebra& algebra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return RandomConeElement(algebra, rng);
}

std::vector<Element> CanonicalFrame(const Algebra& algebra) {
  std::vector<Element> frame;
  for (const Algebra::SimpleFactor& f : algebra.simple_factors()) {
    switch (f.kind) {
      case Kind::kHadamard:
      case Kind::kSymmetricMatrix:
        for (int k = 0; k < f.rank; ++k) {
          frame.push_back(algebra.BasisVector(f.offset + k));
        }
        break;
      case Kind::kSpin:
        for (double s : {1.0, -1.0}) {
          Vector c = Vector::Zero(algebra.dim());
          c(f.offset) = 0.5;
          c(f.offset + 1) = 0.5 * s;
          frame.emplace_back(algebra, std::move(c));
        }
        break;
      case Kind::kProduct:
        break;
    }
  }
  return frame;
}

std::vector<double> IdempotentNorms(const Algebra& algebra) {
  std::vector<double> norms;
  for (const Algebra::SimpleFactor& f : algebra.simple_factors()) {
    const double n = f.kind == Kind::kSpin ? M_SQRT1_2 : 1.0;
    norms.insert(norms.end(), f.rank, n);
  }
  return norms;
}

Vector SymMatToCoords(const Matrix& x) {
  const int d = static_cast<int>(x.rows());
  const auto cells = SymMatCells(d);
  Vector c(cells.size());
  for (size_t k = 0; k < cells.size(); ++k) {
    const auto [i, j] = cells[k];
    c(k) = i == j ? x(i, i) : M_SQRT2 * 0.5 * (x(i, j) + x(j, i));
  }
  return c;
}

Matrix CoordsToSymMat(const Vector& coords, int d) {
  const auto cells = SymMatCells(d);
  if (static_cast<int>(cells.size()) != coords.size()) {
    throw Error(ErrorCode::kDimension, "symmat coordinate count");
  }
  Matrix x(d, d);
  for (size_t k = 0; k < cells.size(); ++k) {
    const auto [i, j] = cells[k];
    if (i == j) {
      x(i, i) = coords(k);
    } else {
      x(i, j) = x(j, i) = M_SQRT1_2 * coords(k);
    }
  }
  return x;
}

}  // namespace symcone
