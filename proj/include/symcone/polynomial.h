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

// Sparse real polynomials in n variables with monomials kept in graded
// lexicographic order (higher total degree first, then larger exponent of
// x_1, then x_2, ...).

#ifndef SYMCONE_POLYNOMIAL_H_
#define SYMCONE_POLYNOMIAL_H_

#include <map>
#include <vector>

#include "Eigen/Dense"

namespace symcone {

using Exponent = std::vector<int>;

struct GradedLexBefore {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, double, GradedLexBefore>;

  explicit Polynomial(int num_vars) : num_vars_(num_vars) {}
  static Polynomial Constant(int num_vars, double c);
  static Polynomial Variable(int num_vars, int i);
  // x^T q x.
  static Polynomial Quadratic(const Eigen::MatrixXd& q);

  int num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  // -1 for the zero polynomial.
  int Degree() const;
  bool IsHomogeneous(int degree) const;
  double Coefficient(const Exponent& e) const;
  // Terms that cancel to exactly zero are dropped.
  void AddTerm(const Exponent& e, double c);

  double Evaluate(const Eigen::VectorXd& x) const;
  // max |coefficient difference|.
  double MaxCoefficientDifference(const Polynomial& other) const;
  double MaxAbsCoefficient() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double s);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  int num_vars_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(double s, Polynomial a);

// All exponents of total degree d in n variables, in graded-lex order.
std::vector<Exponent> MonomialsOfDegree(int n, int d);

}  // namespace symcone

#endif  // SYMCONE_POLYNOMIAL_H_
