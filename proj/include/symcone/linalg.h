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

// Small dense helpers shared across modules.

#ifndef SYMCONE_LINALG_H_
#define SYMCONE_LINALG_H_

#include "Eigen/Dense"

namespace symcone {

// Orthonormal basis of the column space of the orthogonal projector `p`,
// built by Gram-Schmidt over p e_0, p e_1, ... . The result only depends on
// the subspace, not on how `p` was computed. Returns at most `rank` columns.
Eigen::MatrixXd BasisFromProjector(const Eigen::MatrixXd& p, int rank);

double MinSymmetricEigenvalue(const Eigen::MatrixXd& a);

// Max |a - a^T| entry.
double AsymmetryOf(const Eigen::MatrixXd& a);

}  // namespace symcone

#endif  // SYMCONE_LINALG_H_
