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

#include "symcone/polynomial.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symcone/error.h"

namespace symcone {

bool GradedLexBefore::operator()(const Exponent& a, const Exponent& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::Constant(int num_vars, double c) {
  Polynomial p(num_vars);
  p.AddTerm(Exponent(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::Variable(int num_vars, int i) {
  if (i < 0 || i >= num_vars) throw Error(ErrorCode::kIndex, "variable index");
  Polynomial p(num_vars);
  Exponent e(num_vars, 0);
  e[i] = 1;
  p.AddTerm(e, 1.0);
  return p;
}

Polynomial Polynomial::Quadratic(const Eigen::MatrixXd& q) {
  const int n = static_cast<int>(q.rows());
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double c = i == j ? q(i, i) : q(i, j) + q(j, i);
      if (c == 0.0) continue;
      Exponent e(n, 0);
      ++e[i];
      ++e[j];
      p.AddTerm(e, c);
    }
  }
  return p;
}

int Polynomial::Degree() const {
  if (terms_.empty()) return -1;
  const Exponent& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool Polynomial::IsHomogeneous(int degree) const {
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
  }
  return true;
}

double Polynomial::Coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial::AddTerm(const Exponent& e, double c) {
  if (static_cast<int>(e.size()) != num_vars_) {
    throw Error(ErrorCode::kDimension, "exponent length");
  }
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double Polynomial::Evaluate(const Eigen::VectorXd& x) const {
  if (x.size() != num_vars_) throw Error(ErrorCode::kDimension, "point length");
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = c;
    for (int i = 0; i < num_vars_; ++i) {
      for (int p = 0; p < e[i]; ++p) m *= x(i);
    }
    s += m;
  }
  return s;
}

double Polynomial::MaxCoefficientDifference(const Polynomial& other) const {
  return (*this - other).MaxAbsCoefficient();
}

double Polynomial::MaxAbsCoefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) {
    throw Error(ErrorCode::kDimension, "variable count mismatch");
  }
  for (const auto& [e, c] : other.terms_) AddTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) {
    throw Error(ErrorCode::kDimension, "variable count mismatch");
  }
  for (const auto& [e, c] : other.terms_) AddTerm(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) {
    throw Error(ErrorCode::kDimension, "variable count mismatch");
  }
  Polynomial out(a.num_vars_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.AddTerm(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(double s, Polynomial a) { return a *= s; }

std::vector<Exponent> MonomialsOfDegree(int n, int d) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  // Depth-first with the largest exponent of the earliest variable first.
  auto fill = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int p = left; p >= 0; --p) {
      e[i] = p;
      self(self, i + 1, left - p);
    }
  };
  if (n > 0 && d >= 0) fill(fill, 0, d);
  return out;
}

}  // namespace symcone
