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

// Semidefinite margin problems: maximize lambda_min(G) over symmetric G
// subject to <A_k, G> = b_k. A negative optimum comes with a Farkas-style
// certificate y: sum y_k A_k is PSD with unit trace and b^T y < 0.

#ifndef SYMCONE_SDP_H_
#define SYMCONE_SDP_H_

#include <optional>
#include <vector>

#include "Eigen/Dense"

namespace symcone {

// Symmetric matrix given by its upper-triangular entries (row <= col); an
// off-diagonal entry v stands for v at both (row, col) and (col, row).
struct SparseSymmetric {
  struct Entry {
    int row;
    int col;
    double value;
  };
  std::vector<Entry> entries;

  Eigen::MatrixXd ToDense(int dim) const;
  // <A, G> for symmetric G.
  double Dot(const Eigen::MatrixXd& g) const;
  static SparseSymmetric FromDense(const Eigen::MatrixXd& a);
};

struct SdpConstraint {
  SparseSymmetric a;
  double b = 0.0;
};

struct SdpProblem {
  int dim = 0;
  std::vector<SdpConstraint> constraints;
};

inline constexpr int kMaxSdpConstraints = 5000;

struct SdpConfig {
  int max_iterations = 500;
  double tolerance = 1e-8;
  // Certificates with b^T y above -infeasible_tolerance are not reported.
  double infeasible_tolerance = 1e-6;
};

struct SdpSolution {
  // lambda_min of the returned primal point.
  double margin = 0.0;
  // Affine-feasible G; present unless the constraints could not be met.
  std::optional<Eigen::MatrixXd> primal;
  // y with sum y_k A_k PSD, unit trace, b^T y <= -infeasible_tolerance.
  std::optional<Eigen::VectorXd> dual;
  double dual_bound = 0.0;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  bool converged = false;
};

// Primal-dual interior point method (HKM direction with Mehrotra
// correction), started from the least-norm affine point shifted by a multiple
// of the identity. Throws Error(kAffineInfeasible) with the least-squares
// residual when no G meets the constraints, and Error(kParameter) on
// malformed problems.
SdpSolution SolveMargin(const SdpProblem& problem,
                        const SdpConfig& config = {});

// Re-checks every certificate the solution carries, using only the problem
// data and fresh eigenvalue computations.
bool VerifySolution(const SdpProblem& problem, const SdpSolution& solution,
                    const SdpConfig& config = {});

// sum_k y_k A_k.
Eigen::MatrixXd DualMatrix(const SdpProblem& problem, const Eigen::VectorXd& y);

}  // namespace symcone

#endif  // SYMCONE_SDP_H_
