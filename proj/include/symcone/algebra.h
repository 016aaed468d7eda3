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

// Finite-dimensional formally real Jordan algebras in coordinates.
//
// Every algebra is presented on R^n with the plain dot product as its
// associative inner product. Four families are supported: componentwise
// products (hadamard), spin factors, real symmetric matrices with the Jordan
// product (XY+YX)/2, and direct products of those.

#ifndef SYMCONE_ALGEBRA_H_
#define SYMCONE_ALGEBRA_H_

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "Eigen/Dense"

namespace symcone {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct AlgebraDescriptor {
  enum class Kind { kHadamard, kSpin, kSymmetricMatrix, kProduct };

  Kind kind = Kind::kHadamard;
  // n for hadamard and spin, d for symmetric matrices, unused for products.
  int size = 0;
  std::vector<AlgebraDescriptor> factors;

  static AlgebraDescriptor Hadamard(int n);
  static AlgebraDescriptor Spin(int n);
  static AlgebraDescriptor SymMat(int d);
  static AlgebraDescriptor Product(std::vector<AlgebraDescriptor> factors);

  // Throws Error(kDescriptor) on n < 1, spin with n < 2, d < 1 or an empty
  // product.
  void Validate() const;
  int Dim() const;
  int Rank() const;
  std::string DebugString() const;

  friend bool operator==(const AlgebraDescriptor&,
                         const AlgebraDescriptor&) = default;
};

class Element;

// Cheap to copy; instances built from equal descriptors compare equal.
class Algebra {
 public:
  // A non-product summand of the algebra, with its position in the
  // coordinate vector and in the canonical frame.
  struct SimpleFactor {
    AlgebraDescriptor::Kind kind;
    int size;
    int offset;
    int dim;
    int rank;
    int frame_offset;
  };

  explicit Algebra(const AlgebraDescriptor& descriptor);

  const AlgebraDescriptor& descriptor() const;
  int dim() const;
  int rank() const;
  const std::vector<SimpleFactor>& simple_factors() const;

  // (x∘y)_k = x^T T[k] y, with every T[k] symmetric.
  const std::vector<Matrix>& product_tensor() const;

  Element Unit() const;
  Element Zero() const;
  Element FromCoords(Vector coords) const;
  Element BasisVector(int k) const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

class Element {
 public:
  Element(Algebra algebra, Vector coords);

  const Algebra& algebra() const { return algebra_; }
  const Vector& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int k) const { return coords_(k); }
  double Norm() const { return coords_.norm(); }

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(double s);

 private:
  Algebra algebra_;
  Vector coords_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(double s, Element a);
Element operator*(Element a, double s);

// Throws Error(kAlgebraMismatch) if the two elements live in different
// algebras.
void CheckSameAlgebra(const Element& a, const Element& b);
void CheckSameAlgebra(const Algebra& a, const Algebra& b);

Element Product(const Element& x, const Element& y);
Element Square(const Element& x);
double Inner(const Element& x, const Element& y);

// Matrix of x -> a∘x in canonical coordinates.
Matrix MultiplicationMatrix(const Element& a);
// Q_c = 2 L(c)^2 - L(c^2).
Matrix QuadraticRepresentationMatrix(const Element& c);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Element> frame;

  Element Reconstruct() const;
};

// Hadamard: components in coordinate order. Spin and symmetric matrices:
// eigenvalues in descending order. Products concatenate their factors.
// Repeated matrix eigenvalues are split deterministically by orthonormalizing
// the projected canonical basis vectors.
SpectralDecomposition SpectralDecompose(const Element& x);

double MinEigenvalue(const Element& x);

// Cone membership: min eigenvalue >= -tol * max(1, |x|).
inline constexpr double kDefaultTolerance = 1e-9;
bool ConeContains(const Element& x, double tol = kDefaultTolerance);

// y∘y for y with i.i.d. standard normal coordinates.
Element RandomConeElement(const Algebra& algebra, std::mt19937_64& rng);
Element RandomConeElement(const Algebra& algebra, std::uint64_t seed);
Element RandomElement(const Algebra& algebra, std::mt19937_64& rng);

// hadamard: e_i. symmat: diagonal cells. spin: (1, ±e_1)/2. Products
// concatenate.
std::vector<Element> CanonicalFrame(const Algebra& algebra);

// |c| of a primitive idempotent in each simple factor, listed per frame slot:
// 1 for hadamard and symmetric matrices, 1/sqrt(2) for spin factors.
std::vector<double> IdempotentNorms(const Algebra& algebra);

// Symmetric-matrix coordinate helpers: diagonal cells first, then i<j cells in
// lexicographic order carrying sqrt(2) X_ij.
Vector SymMatToCoords(const Matrix& x);
Matrix CoordsToSymMat(const Vector& coords, int d);

}  // namespace symcone

#endif  // SYMCONE_ALGEBRA_H_
