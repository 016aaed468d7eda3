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

#include "symcone/perturbation.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "symcone/error.h"
#include "symcone/horn.h"

namespace symcone {
namespace {

BlockKey Key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Accessors shared by the family builders, with frame relabeling applied.
struct FamilyContext {
  const PeirceDecomposition& p;
  const BlockInputs& inputs;
  std::function<int(int)> relabel;
  bool degenerate = false;

  Element c(int i) const { return p.idempotent(relabel(i)); }
  double t(int i) const { return 1.0 / p.idempotent(relabel(i)).Norm(); }
  Element x(int i, int j) {
    const BlockKey k = Key(relabel(i), relabel(j));
    if (p.BlockDim(k.i, k.j) == 0) degenerate = true;
    return inputs.at(k);
  }
  BlockPair Target(int i, int j, int k, int l) const {
    return NormalizedPair(Key(relabel(i), relabel(j)),
                          Key(relabel(k), relabel(l)));
  }
};

// Bilinear form u • A v.
std::function<double(const SelfAdjointOperator&)> Bilinear(Element u,
                                                           Element v) {
  return [u = std::move(u), v = std::move(v)](const SelfAdjointOperator& a) {
    return u.coords().dot(a.matrix() * v.coords());
  };
}

std::vector<std::pair<BlockPair, Rank5Case>> BuildRank5Orbits() {
  std::vector<std::pair<BlockPair, Rank5Case>> table;
  for (Rank5Case c : kAllRank5Cases) {
    for (const DihedralMap& s : DihedralMap::All()) {
      table.emplace_back(Rank5Target(c, s), c);
    }
  }
  return table;
}

}  // namespace

int DihedralMap::operator()(int i) const {
  return ((orientation * (i - 1) + shift) % 5 + 5) % 5 + 1;
}

std::vector<DihedralMap> DihedralMap::All() {
  std::vector<DihedralMap> out;
  for (int o : {1, -1}) {
    for (int s = 0; s < 5; ++s) out.push_back({s, o});
  }
  return out;
}

std::string_view Rank5CaseName(Rank5Case c) {
  static constexpr std::string_view kNames[] = {"a", "b", "c", "d",
                                                "e", "f", "g"};
  return kNames[static_cast<int>(c)];
}

BlockPair NormalizedPair(BlockKey a, BlockKey b) {
  a = Key(a.i, a.j);
  b = Key(b.i, b.j);
  if (!BlockPrecedesOrEqual(a, b)) std::swap(a, b);
  return {a, b};
}

bool InTripleSupport(const BlockPair& pair) {
  for (int q = 1; q <= 5; ++q) {
    const std::vector<BlockKey> blocks = TripleBlocks(q);
    auto has = [&](BlockKey k) {
      return std::find(blocks.begin(), blocks.end(), k) != blocks.end();
    };
    if (has(pair.ij) && has(pair.kl)) return true;
  }
  return false;
}

BlockPair Rank5Target(Rank5Case c, DihedralMap s) {
  auto pair = [&](int i, int j, int k, int l) {
    return NormalizedPair(Key(s(i), s(j)), Key(s(k), s(l)));
  };
  switch (c) {
    case Rank5Case::kA:
      return pair(1, 1, 2, 4);
    case Rank5Case::kB:
      return pair(1, 1, 3, 4);
    case Rank5Case::kC:
      return pair(1, 2, 2, 4);
    case Rank5Case::kD:
      return pair(1, 3, 1, 4);
    case Rank5Case::kE:
      return pair(1, 2, 3, 4);
    case Rank5Case::kF:
      return pair(1, 2, 3, 5);
    case Rank5Case::kG:
      return pair(1, 3, 2, 4);
  }
  return pair(1, 1, 1, 1);
}

std::optional<Rank5Case> ClassifyRank5(const BlockPair& pair) {
  const BlockPair n = NormalizedPair(pair.ij, pair.kl);
  if (n.ij.i < 1 || n.kl.j > 5) {
    throw Error(ErrorCode::kIndex, "pair outside the rank-5 index set");
  }
  if (InTripleSupport(n)) return std::nullopt;
  static const auto kTable = BuildRank5Orbits();
  for (const auto& [p, c] : kTable) {
    if (p == n) return c;
  }
  throw Error(ErrorCode::kIndex, "pair not covered by any rank-5 case");
}

BlockInputs RandomBlockInputs(const PeirceDecomposition& p,
                              std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  BlockInputs out;
  for (const BlockKey& k : BlocksUpTo(p.rank())) {
    const Matrix& b = p.Basis(k);
    Vector g(b.cols());
    for (int q = 0; q < g.size(); ++q) g(q) = normal(rng);
    out.emplace(k, Element(p.algebra(), b * g));
  }
  return out;
}

PerturbationFamily MakeRank5Family(Rank5Case which,
                                   const PeirceDecomposition& p,
                                   const BlockInputs& inputs,
                                   DihedralMap sigma) {
  if (p.rank() < 5) throw Error(ErrorCode::kParameter, "needs rank >= 5");
  FamilyContext f{p, inputs, sigma};
  PerturbationFamily out;
  out.name = "rank5_case_" + std::string(Rank5CaseName(which));
  out.target = Rank5Target(which, sigma);
  const double t1 = f.t(1), t2 = f.t(2), t3 = f.t(3), t5 = f.t(5);
  const Element c1 = f.c(1), c2 = f.c(2), c3 = f.c(3), c5 = f.c(5);
  switch (which) {
    case Rank5Case::kA: {
      const Element x24 = f.x(2, 4);
      out.point = [=](double e, int s) {
        return t1 * t1 * c1 + Square(t2 * c2 + s * e * x24);
      };
      out.divisor = 2 * t1 * t1 * t2;
      out.formula = Bilinear(c1, x24);
      break;
    }
    case Rank5Case::kB: {
      const Element x34 = f.x(3, 4);
      out.point = [=](double e, int s) {
        return t1 * t1 * c1 + 2 * t2 * t2 * c2 + Square(t3 * c3 + s * e * x34);
      };
      out.divisor = 2 * t1 * t1 * t3;
      out.formula = Bilinear(c1, x34);
      break;
    }
    case Rank5Case::kC: {
      const Element x12 = f.x(1, 2), x24 = f.x(2, 4);
      out.point = [=](double e, int s) {
        return 2 * t1 * t1 * c1 + Square(t1 * c1 + x12 + t2 * c2) +
               2 * Square(t2 * c2 + s * e * x24);
      };
      out.divisor = 4 * (t1 + t2) * t2;
      out.formula = Bilinear(x12, x24);
      break;
    }
    case Rank5Case::kD: {
      const Element x13 = f.x(1, 3), x14 = f.x(1, 4);
      const double n13 = Inner(x13, x13);
      out.point = [=](double e, int s) {
        return (6 + n13) * t2 * t2 * c2 + 2 * t3 * t3 * c3 +
               Square(t1 * c1 + x13 + t3 * c3) +
               2 * Square(t1 * c1 + s * e * x14);
      };
      out.divisor = 4 * (t1 + t3) * t1;
      out.formula = Bilinear(x13, x14);
      break;
    }
    case Rank5Case::kE: {
      const Element x12 = f.x(1, 2), x34 = f.x(3, 4);
      out.point = [=](double e, int s) {
        return Square(t2 * c2 + s * e * x12) + Square(t3 * c3 + e * x34);
      };
      out.power = 2;
      out.divisor = 2 * t2 * t3;
      out.formula = Bilinear(x12, x34);
      break;
    }
    case Rank5Case::kF: {
      const Element x12 = f.x(1, 2), x35 = f.x(3, 5);
      out.point = [=](double e, int s) {
        return Square(t1 * c1 + s * x12 + t2 * c2) +
               e * Square(t3 * c3 + x35 + t5 * c5);
      };
      out.divisor = 2 * (t1 + t2) * (t3 + t5);
      out.formula = Bilinear(x12, x35);
      break;
    }
    case Rank5Case::kG: {
      const Element x24 = f.x(2, 4), x13 = f.x(1, 3);
      out.point = [=](double e, int s) {
        return Square(t2 * c2 + e * x24) + Square(t3 * c3 + s * e * x13);
      };
      out.power = 2;
      out.divisor = 2 * t2 * t3;
      out.formula = Bilinear(x13, x24);
      break;
    }
  }
  out.degenerate = f.degenerate;
  return out;
}

std::vector<TailIndices> TailCaseIndices(IndexCase c, int r_plus) {
  const int r = r_plus - 1;
  std::vector<TailIndices> out;
  for (int i = 1; i <= r; ++i) {
    switch (c) {
      case IndexCase::kCaseA:
      case IndexCase::kCaseC:
        out.push_back({i, 0, 0});
        break;
      case IndexCase::kCaseB:
        for (int k = i + 1; k <= r; ++k) out.push_back({i, 0, k});
        break;
      case IndexCase::kCaseD:
        for (int k = 1; k <= r; ++k) {
          if (k != i) out.push_back({i, 0, k});
        }
        break;
      case IndexCase::kCaseE:
      case IndexCase::kCaseF:
        for (int j = i + 1; j <= r; ++j) {
          for (int k = 1; k <= r; ++k) {
            const bool shared = k == i || k == j;
            if (shared == (c == IndexCase::kCaseE)) out.push_back({i, j, k});
          }
        }
        break;
      default:
        throw Error(ErrorCode::kParameter, "not a tail case");
    }
  }
  return out;
}

PerturbationFamily MakeTailFamily(IndexCase which,
                                  const PeirceDecomposition& p,
                                  const BlockInputs& inputs, TailIndices idx) {
  const int rp = p.rank();
  const auto valid = TailCaseIndices(which, rp);
  const bool known = std::any_of(valid.begin(), valid.end(), [&](auto v) {
    return v.i == idx.i && v.j == idx.j && v.k == idx.k;
  });
  if (!known) throw Error(ErrorCode::kParameter, "bad tail indices");
  FamilyContext f{p, inputs, [](int i) { return i; }};
  PerturbationFamily out;
  out.name = "tail_" + std::string(IndexCaseName(which));
  out.divisor = 2.0;
  const Element cr = f.c(rp);
  const int i = idx.i, j = idx.j, k = idx.k;
  switch (which) {
    case IndexCase::kCaseA: {
      const Element xi = f.x(i, rp);
      out.target = f.Target(i, rp, rp, rp);
      out.point = [=](double e, int s) { return Square(s * e * xi + cr); };
      out.formula = Bilinear(xi, cr);
      break;
    }
    case IndexCase::kCaseB: {
      const Element ci = f.c(i), ck = f.c(k);
      const Element xi = f.x(i, rp), xk = f.x(k, rp);
      out.target = f.Target(i, rp, k, rp);
      out.power = 2;
      out.point = [=](double e, int s) {
        return Square(e * e * ci + s * e * xi + cr) +
               Square(e * e * ck + e * xk + cr);
      };
      out.formula = Bilinear(xi, xk);
      break;
    }
    case IndexCase::kCaseC: {
      const Element ci = f.c(i), xi = f.x(i, rp);
      out.target = f.Target(i, i, i, rp);
      out.power = 5;
      out.point = [=](double e, int s) {
        return e * e * e * ci + Square(s * e * e * xi + cr);
      };
      out.formula = Bilinear(ci, xi);
      break;
    }
    case IndexCase::kCaseD: {
      const Element ci = f.c(i), xk = f.x(k, rp);
      out.target = f.Target(i, i, k, rp);
      out.power = 3;
      out.point = [=](double e, int s) {
        return e * e * ci + Square(s * e * xk + cr);
      };
      out.formula = Bilinear(ci, xk);
      break;
    }
    case IndexCase::kCaseE:
    case IndexCase::kCaseF: {
      // For E the idempotent paired with x_ij is c_k (k is i or j); for F it
      // is c_i.
      const int m = which == IndexCase::kCaseE ? k : i;
      const Element cm = f.c(m), xij = f.x(i, j), xk = f.x(k, rp);
      out.target = f.Target(i, j, k, rp);
      out.power = 3;
      out.point = [=](double e, int s) {
        return e * e * Square(cm + s * xij) + Square(e * xk + cr);
      };
      out.formula = Bilinear(xij, xk);
      break;
    }
    default:
      throw Error(ErrorCode::kParameter, "not a tail case");
  }
  out.degenerate = f.degenerate;
  return out;
}

SlopeResult LeadingCoeffCheck(const SelfAdjointOperator& a,
                              const PerturbationFamily& family, double eps) {
  if (!(eps >= 1e-8)) throw Error(ErrorCode::kParameter, "eps must be >= 1e-8");
  auto diff = [&](double e) {
    return a.QuadraticForm(family.point(e, 1)) -
           a.QuadraticForm(family.point(e, -1));
  };
  constexpr int kNodes = 12;
  Matrix vander(kNodes, kNodes);
  Vector values(kNodes);
  for (int m = 0; m < kNodes; ++m) {
    const double node = std::cos((2 * m + 1) * std::numbers::pi / (2 * kNodes));
    double power = 1.0;
    for (int d = 0; d < kNodes; ++d, power *= node) vander(m, d) = power;
    values(m) = diff(node);
  }
  const Vector coef = vander.colPivHouseholderQr().solve(values);
  const double scale = 2.0 * family.divisor;

  SlopeResult out;
  out.slope = coef(family.power) / scale;
  out.quotient_slope = diff(eps) / (scale * std::pow(eps, family.power));
  out.formula = family.formula(a);
  for (int d = 0; d < family.power; ++d) {
    out.lower_order = std::max(out.lower_order, std::abs(coef(d)) / scale);
  }
  out.in_cone = true;
  for (double e : {1e-1, 1e-3}) {
    for (int s : {1, -1}) out.in_cone &= ConeContains(family.point(e, s));
  }
  out.degenerate = family.degenerate;
  return out;
}

SelfAdjointOperator ContextOperator(
    const PeirceDecomposition& p, const SelfAdjointOperator& h, double weight,
    const std::function<BlockFill(const BlockPair&)>& fill,
    std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  SelfAdjointOperator out = SelfAdjointOperator::Zero(p.algebra());
  for (const BlockPair& bp : BlockPairsUpTo(p.rank())) {
    switch (fill(bp)) {
      case BlockFill::kHorn:
        out += EmbedBlock(p, bp.ij, bp.kl,
                          weight * PeirceBlock(h, p, bp.ij, bp.kl));
        break;
      case BlockFill::kRandom: {
        Matrix block(p.BlockDim(bp.ij.i, bp.ij.j), p.BlockDim(bp.kl.i, bp.kl.j));
        for (int q = 0; q < block.size(); ++q) block.data()[q] = normal(rng);
        out += EmbedBlock(p, bp.ij, bp.kl, block);
        break;
      }
      case BlockFill::kZero:
        break;
    }
  }
  return out;
}

SelfAdjointOperator Rank5ContextOperator(Rank5Case target,
                                         const PeirceDecomposition& p,
                                         const SelfAdjointOperator& h,
                                         std::mt19937_64& rng) {
  if (p.rank() != 5) throw Error(ErrorCode::kParameter, "needs rank 5");
  const double weight = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
  return ContextOperator(
      p, h, weight,
      [&](const BlockPair& bp) {
        const std::optional<Rank5Case> c = ClassifyRank5(bp);
        if (!c) return BlockFill::kHorn;
        return *c < target ? BlockFill::kZero : BlockFill::kRandom;
      },
      rng);
}

SelfAdjointOperator TailContextOperator(IndexCase target,
                                        const PeirceDecomposition& p,
                                        const SelfAdjointOperator& h,
                                        std::mt19937_64& rng) {
  const int rp = p.rank();
  if (rp < 6) throw Error(ErrorCode::kParameter, "needs rank >= 6");
  const double weight = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
  return ContextOperator(
      p, h, weight,
      [&](const BlockPair& bp) {
        const IndexCase c = ClassifyIndex(bp, rp);
        switch (c) {
          case IndexCase::kInRankR:
            return BlockFill::kHorn;
          case IndexCase::kTailDiag:
          case IndexCase::kDiagTail:
          case IndexCase::kTailSelf:
            return BlockFill::kZero;
          default:
            return c < target ? BlockFill::kZero : BlockFill::kRandom;
        }
      },
      rng);
}

}  // namespace symcone
