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

#include "symcone/sdp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "symcone/error.h"
#include "symcone/linalg.h"

namespace symcone {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Both orientations of every off-diagonal entry.
struct FullEntry {
  int p;
  int q;
  double v;
};

std::vector<FullEntry> Expand(const SparseSymmetric& a) {
  std::vector<FullEntry> out;
  for (const auto& e : a.entries) {
    out.push_back({e.row, e.col, e.value});
    if (e.row != e.col) out.push_back({e.col, e.row, e.value});
  }
  return out;
}

// The standard-form problem solved internally:
//   min -s  s.t.  <A_k, S> + tr(A_k) s = b_k + shift tr(A_k),  S ⪰ 0, s >= 0,
// which is the margin problem with G = S + (s - shift) I.
class MarginSolver {
 public:
  MarginSolver(const SdpProblem& problem, const SdpConfig& config)
      : problem_(problem), config_(config), m_(problem.dim) {}

  SdpSolution Solve();

 private:
  void Prepare();
  VectorXd Apply(const MatrixXd& y) const;  // 𝒜(Y), any square Y.
  MatrixXd Adjoint(const VectorXd& y) const;
  MatrixXd Schur(const MatrixXd& x, const MatrixXd& zinv, double ratio) const;
  MatrixXd ProjectAffine(const MatrixXd& g) const;
  static double MaxStep(const MatrixXd& x, const MatrixXd& dx);

  const SdpProblem& problem_;
  const SdpConfig& config_;
  int m_;
  std::vector<int> kept_;
  std::vector<std::vector<FullEntry>> full_;
  VectorXd b_;
  VectorXd trace_;
  Eigen::LDLT<MatrixXd> gram_;
};

VectorXd MarginSolver::Apply(const MatrixXd& y) const {
  VectorXd out(full_.size());
  for (size_t k = 0; k < full_.size(); ++k) {
    double s = 0.0;
    for (const FullEntry& e : full_[k]) s += e.v * y(e.q, e.p);
    out(k) = s;
  }
  return out;
}

MatrixXd MarginSolver::Adjoint(const VectorXd& y) const {
  MatrixXd out = MatrixXd::Zero(m_, m_);
  for (size_t k = 0; k < full_.size(); ++k) {
    for (const FullEntry& e : full_[k]) out(e.p, e.q) += y(k) * e.v;
  }
  return out;
}

// M_ij = tr(A_i X A_j Z^-1) + tr(A_i) tr(A_j) ratio.
MatrixXd MarginSolver::Schur(const MatrixXd& x, const MatrixXd& zinv,
                             double ratio) const {
  const int k = static_cast<int>(full_.size());
  MatrixXd m(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      double s = 0.0;
      for (const FullEntry& ei : full_[i]) {
        for (const FullEntry& ej : full_[j]) {
          s += ei.v * ej.v * x(ei.q, ej.p) * zinv(ej.q, ei.p);
        }
      }
      m(i, j) = m(j, i) = s + trace_(i) * trace_(j) * ratio;
    }
  }
  return m;
}

MatrixXd MarginSolver::ProjectAffine(const MatrixXd& g) const {
  const VectorXd r = b_ - Apply(g);
  MatrixXd out = g + Adjoint(gram_.solve(r));
  return 0.5 * (out + out.transpose());
}

double MarginSolver::MaxStep(const MatrixXd& x, const MatrixXd& dx) {
  Eigen::LLT<MatrixXd> llt(x);
  const MatrixXd linv = llt.matrixL().solve(MatrixXd::Identity(x.rows(), x.cols()));
  const MatrixXd s = linv * dx * linv.transpose();
  const double lmin = MinSymmetricEigenvalue(0.5 * (s + s.transpose()));
  return lmin < 0.0 ? -1.0 / lmin : std::numeric_limits<double>::infinity();
}

void MarginSolver::Prepare() {
  const int total = static_cast<int>(problem_.constraints.size());
  // Gram matrix <A_i, A_j> from overlapping supports.
  std::unordered_map<long long, std::vector<std::pair<int, double>>> touch;
  for (int k = 0; k < total; ++k) {
    for (const auto& e : problem_.constraints[k].a.entries) {
      touch[static_cast<long long>(e.row) * m_ + e.col].push_back(
          {k, e.value});
    }
  }
  MatrixXd n = MatrixXd::Zero(total, total);
  for (const auto& [pos, list] : touch) {
    const bool diag = pos / m_ == pos % m_;
    const double w = diag ? 1.0 : 2.0;
    for (const auto& [i, vi] : list) {
      for (const auto& [j, vj] : list) n(i, j) += w * vi * vj;
    }
  }
  Eigen::LDLT<MatrixXd> ldlt(n);
  const VectorXd d = ldlt.vectorD();
  const double dmax = d.cwiseAbs().maxCoeff();
  int rank = 0;
  for (int k = 0; k < d.size(); ++k) rank += std::abs(d(k)) > 1e-12 * dmax;
  if (rank == total) {
    for (int k = 0; k < total; ++k) kept_.push_back(k);
  } else {
    Eigen::ColPivHouseholderQR<MatrixXd> qr(n);
    qr.setThreshold(1e-10);
    for (int k = 0; k < qr.rank(); ++k) {
      kept_.push_back(qr.colsPermutation().indices()(k));
    }
    std::sort(kept_.begin(), kept_.end());
  }
  const int k = static_cast<int>(kept_.size());
  b_.resize(k);
  trace_.resize(k);
  MatrixXd nk(k, k);
  for (int i = 0; i < k; ++i) {
    const SdpConstraint& c = problem_.constraints[kept_[i]];
    full_.push_back(Expand(c.a));
    b_(i) = c.b;
    double tr = 0.0;
    for (const auto& e : c.a.entries) tr += e.row == e.col ? e.value : 0.0;
    trace_(i) = tr;
    for (int j = 0; j < k; ++j) nk(i, j) = n(kept_[i], kept_[j]);
  }
  gram_.compute(nk);
}

SdpSolution MarginSolver::Solve() {
  if (m_ < 1) throw Error(ErrorCode::kParameter, "sdp dimension must be >= 1");
  if (problem_.constraints.empty()) {
    throw Error(ErrorCode::kParameter, "sdp needs at least one constraint");
  }
  if (problem_.constraints.size() > static_cast<size_t>(kMaxSdpConstraints)) {
    throw Error(ErrorCode::kSizeCap, "more than 5000 sdp constraints");
  }
  for (const SdpConstraint& c : problem_.constraints) {
    for (const auto& e : c.a.entries) {
      if (e.row < 0 || e.col >= m_ || e.row > e.col) {
        throw Error(ErrorCode::kParameter, "constraint entry out of range");
      }
    }
  }
  Prepare();

  // Least-norm affine point, checked against every constraint including any
  // dropped as linearly dependent.
  const MatrixXd g0 = ProjectAffine(MatrixXd::Zero(m_, m_));
  double affine_residual = 0.0;
  for (const SdpConstraint& c : problem_.constraints) {
    affine_residual =
        std::max(affine_residual, std::abs(c.a.Dot(g0) - c.b) / (1 + std::abs(c.b)));
  }
  if (affine_residual > 1e-8) {
    throw Error(ErrorCode::kAffineInfeasible,
                "constraints are inconsistent; least-squares residual " +
                    std::to_string(affine_residual),
                affine_residual);
  }

  const int k = static_cast<int>(kept_.size());
  const double shift = std::max(0.0, -MinSymmetricEigenvalue(g0)) + 2.0;
  const MatrixXd eye = MatrixXd::Identity(m_, m_);
  const VectorXd g = b_ + shift * trace_;

  MatrixXd x = g0 + (shift - 1.0) * eye;
  double xs = 1.0;
  VectorXd y = VectorXd::Zero(k);
  MatrixXd z = eye;
  double zs = 1.0;

  const double tol = config_.tolerance;
  const double gnorm = 1.0 + g.norm();
  SdpSolution out;
  for (int it = 0; it < config_.max_iterations; ++it) {
    out.iterations = it;
    const VectorXd rp = g - Apply(x) - trace_ * xs;
    const MatrixXd rd = -Adjoint(y) - z;
    const double rds = -1.0 - trace_.dot(y) - zs;
    const double mu = (x.cwiseProduct(z).sum() + xs * zs) / (m_ + 1);
    const double pobj = -xs;
    const double dobj = g.dot(y);
    const double gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    const double pinf = rp.norm() / gnorm;
    const double dinf = std::sqrt(rd.squaredNorm() + rds * rds);
    if (gap <= tol && pinf <= tol && dinf <= 1e-2 * tol) {
      out.converged = true;
      break;
    }
    if (xs > 1e12) break;  // Unbounded margin.

    Eigen::LLT<MatrixXd> zllt(z);
    const MatrixXd zinv = zllt.solve(eye);
    const MatrixXd schur = Schur(x, zinv, xs / zs);
    Eigen::LLT<MatrixXd> mllt(schur);
    if (mllt.info() != Eigen::Success) break;

    auto direction = [&](double target, const MatrixXd& corr, double corrs,
                         MatrixXd& dx, double& dxs, VectorXd& dy,
                         MatrixXd& dz, double& dzs) {
      const MatrixXd base = target * zinv - x - x * rd * zinv - corr;
      const double bases = target / zs - xs - xs * rds / zs - corrs;
      const VectorXd rhs = rp - Apply(base) - trace_ * bases;
      dy = mllt.solve(rhs);
      dz = rd - Adjoint(dy);
      dzs = rds - trace_.dot(dy);
      dx = base + x * Adjoint(dy) * zinv;
      dx = (0.5 * (dx + dx.transpose())).eval();
      dxs = bases + xs * trace_.dot(dy) / zs;
    };
    auto steps = [&](const MatrixXd& dx, double dxs, const MatrixXd& dz,
                     double dzs, double& ap, double& ad) {
      ap = MaxStep(x, dx);
      if (dxs < 0) ap = std::min(ap, -xs / dxs);
      ad = MaxStep(z, dz);
      if (dzs < 0) ad = std::min(ad, -zs / dzs);
    };

    MatrixXd dx, dz;
    VectorXd dy;
    double dxs, dzs, ap, ad;
    const MatrixXd zero = MatrixXd::Zero(m_, m_);
    direction(0.0, zero, 0.0, dx, dxs, dy, dz, dzs);
    steps(dx, dxs, dz, dzs, ap, ad);
    ap = std::min(1.0, ap);
    ad = std::min(1.0, ad);
    const double mu_aff =
        ((x + ap * dx).cwiseProduct(z + ad * dz).sum() +
         (xs + ap * dxs) * (zs + ad * dzs)) /
        (m_ + 1);
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);
    const MatrixXd corr = dx * dz * zinv;
    const double corrs = dxs * dzs / zs;
    direction(sigma * mu, corr, corrs, dx, dxs, dy, dz, dzs);
    steps(dx, dxs, dz, dzs, ap, ad);
    constexpr double kStepFraction = 0.95;
    ap = std::min(1.0, kStepFraction * ap);
    ad = std::min(1.0, kStepFraction * ad);

    x += ap * dx;
    x = (0.5 * (x + x.transpose())).eval();
    xs += ap * dxs;
    y += ad * dy;
    z += ad * dz;
    z = (0.5 * (z + z.transpose())).eval();
    zs += ad * dzs;
    out.iterations = it + 1;
  }

  const MatrixXd gmat = ProjectAffine(x + (xs - shift) * eye);
  out.primal = gmat;
  out.margin = MinSymmetricEigenvalue(gmat);
  double pres = 0.0;
  for (const SdpConstraint& c : problem_.constraints) {
    pres = std::max(pres, std::abs(c.a.Dot(gmat) - c.b) / (1 + std::abs(c.b)));
  }
  out.primal_residual = pres;

  // Certificate from the dual iterate, normalized to unit trace.
  VectorXd w = VectorXd::Zero(problem_.constraints.size());
  double tr = 0.0;
  for (int i = 0; i < k; ++i) {
    w(kept_[i]) = -y(i);
    tr -= y(i) * trace_(i);
  }
  if (tr > 0.0) {
    w /= tr;
    const MatrixXd lambda = DualMatrix(problem_, w);
    out.dual_residual = std::max(0.0, -MinSymmetricEigenvalue(lambda));
    double bound = 0.0;
    for (size_t i = 0; i < problem_.constraints.size(); ++i) {
      bound += problem_.constraints[i].b * w(i);
    }
    out.dual_bound = bound;
    if (out.converged && bound <= -config_.infeasible_tolerance) out.dual = w;
  }
  return out;
}

}  // namespace

Eigen::MatrixXd SparseSymmetric::ToDense(int dim) const {
  MatrixXd out = MatrixXd::Zero(dim, dim);
  for (const Entry& e : entries) {
    out(e.row, e.col) += e.value;
    if (e.row != e.col) out(e.col, e.row) += e.value;
  }
  return out;
}

double SparseSymmetric::Dot(const Eigen::MatrixXd& g) const {
  double s = 0.0;
  for (const Entry& e : entries) {
    s += e.row == e.col ? e.value * g(e.row, e.row)
                        : e.value * (g(e.row, e.col) + g(e.col, e.row));
  }
  return s;
}

SparseSymmetric SparseSymmetric::FromDense(const Eigen::MatrixXd& a) {
  SparseSymmetric out;
  for (int c = 0; c < a.cols(); ++c) {
    for (int r = 0; r <= c; ++r) {
      const double v = r == c ? a(r, r) : 0.5 * (a(r, c) + a(c, r));
      if (v != 0.0) out.entries.push_back({r, c, v});
    }
  }
  return out;
}

Eigen::MatrixXd DualMatrix(const SdpProblem& problem, const Eigen::VectorXd& y) {
  if (y.size() != static_cast<int>(problem.constraints.size())) {
    throw Error(ErrorCode::kDimension, "dual vector length");
  }
  MatrixXd out = MatrixXd::Zero(problem.dim, problem.dim);
  for (size_t k = 0; k < problem.constraints.size(); ++k) {
    for (const auto& e : problem.constraints[k].a.entries) {
      out(e.row, e.col) += y(k) * e.value;
      if (e.row != e.col) out(e.col, e.row) += y(k) * e.value;
    }
  }
  return out;
}

SdpSolution SolveMargin(const SdpProblem& problem, const SdpConfig& config) {
  return MarginSolver(problem, config).Solve();
}

bool VerifySolution(const SdpProblem& problem, const SdpSolution& solution,
                    const SdpConfig& config) {
  const double tol = config.tolerance;
  if (!solution.primal && !solution.dual) return false;
  if (solution.primal) {
    const MatrixXd& g = *solution.primal;
    if (g.rows() != problem.dim || g.cols() != problem.dim) return false;
    if (AsymmetryOf(g) > tol) return false;
    for (const SdpConstraint& c : problem.constraints) {
      if (std::abs(c.a.Dot(g) - c.b) > tol * (1 + std::abs(c.b))) return false;
    }
    if (MinSymmetricEigenvalue(g) < solution.margin - tol) return false;
  }
  if (solution.dual) {
    const VectorXd& y = *solution.dual;
    if (y.size() != static_cast<int>(problem.constraints.size())) return false;
    if (MinSymmetricEigenvalue(DualMatrix(problem, y)) < -tol * y.norm()) {
      return false;
    }
    double bound = 0.0;
    for (size_t k = 0; k < problem.constraints.size(); ++k) {
      bound += problem.constraints[k].b * y(k);
    }
    if (bound > -config.infeasible_tolerance) return false;
  }
  return true;
}

}  // namespace symcone
