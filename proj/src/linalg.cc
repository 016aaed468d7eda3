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

#include "symcone/linalg.h"

namespace symcone {

Eigen::MatrixXd BasisFromProjector(const Eigen::MatrixXd& p, int rank) {
  const int n = static_cast<int>(p.rows());
  Eigen::MatrixXd out(n, rank);
  int found = 0;
  // Columns of p below this norm are treated as lying in the span already.
  constexpr double kDrop = 1e-6;
  for (int k = 0; k < n && found < rank; ++k) {
    Eigen::VectorXd w = p.col(k);
    for (int pass = 0; pass < 2; ++pass) {
      for (int q = 0; q < found; ++q) w -= out.col(q).dot(w) * out.col(q);
    }
    const double norm = w.norm();
    if (norm > kDrop) out.col(found++) = w / norm;
  }
  return out.leftCols(found);
}

double MinSymmetricEigenvalue(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a,
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double AsymmetryOf(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return 0.0;
  return (a - a.transpose()).cwiseAbs().maxCoeff();
}

}  // namespace symcone
