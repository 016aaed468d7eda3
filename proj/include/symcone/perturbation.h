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

// One-parameter families x(eps) in the cone whose quadratic values isolate a
// single Peirce block of an operator A. For a family with sign +/- and power
// p, q_A(x+) - q_A(x-) = 2 c eps^p (formula value) + O(eps^(p+1)) whenever A
// vanishes on the blocks handled earlier.

#ifndef SYMCONE_PERTURBATION_H_
#define SYMCONE_PERTURBATION_H_

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "symcone/index_classification.h"
#include "symcone/operators.h"
#include "symcone/peirce.h"

namespace symcone {

// Symmetry i -> orientation * (i - 1) + shift (mod 5), + 1 of the 5-cycle.
// The Horn matrix is invariant under all ten of them.
struct DihedralMap {
  int shift = 0;
  int orientation = 1;

  int operator()(int i) const;
  static std::vector<DihedralMap> All();
};

enum class Rank5Case { kA, kB, kC, kD, kE, kF, kG };
inline constexpr Rank5Case kAllRank5Cases[] = {
    Rank5Case::kA, Rank5Case::kB, Rank5Case::kC, Rank5Case::kD,
    Rank5Case::kE, Rank5Case::kF, Rank5Case::kG};
std::string_view Rank5CaseName(Rank5Case c);

// Keys ordered inside and the pair ordered by ⪯.
BlockPair NormalizedPair(BlockKey a, BlockKey b);

// True iff (ij, kl) lies in I_p x I_p for some p (see TripleBlocks).
bool InTripleSupport(const BlockPair& pair);
// nullopt on the triple support; otherwise the case whose dihedral orbit
// contains the pair. Throws Error(kIndex) outside the rank-5 index set.
std::optional<Rank5Case> ClassifyRank5(const BlockPair& pair);
BlockPair Rank5Target(Rank5Case c, DihedralMap sigma = {});

// Free vectors x_ij in each Peirce block, keyed with i <= j.
using BlockInputs = std::map<BlockKey, Element>;
// Gaussian coordinates in each block basis; zero for empty blocks.
BlockInputs RandomBlockInputs(const PeirceDecomposition& p,
                              std::mt19937_64& rng);

struct PerturbationFamily {
  std::string name;
  BlockPair target;
  int power = 1;
  // The constant c in the expansion above.
  double divisor = 1.0;
  // A block the family relies on is zero-dimensional.
  bool degenerate = false;
  std::function<Element(double eps, int sign)> point;
  std::function<double(const SelfAdjointOperator&)> formula;
};

PerturbationFamily MakeRank5Family(Rank5Case c, const PeirceDecomposition& p,
                                   const BlockInputs& x,
                                   DihedralMap sigma = {});

// Indices of a tail family: A uses i; B uses i < k; C uses i; D uses i and
// k != i; E and F use i < j and k.
struct TailIndices {
  int i = 1;
  int j = 0;
  int k = 0;
};

// Every admissible index choice for a tail case.
std::vector<TailIndices> TailCaseIndices(IndexCase c, int r_plus);

// Throws Error(kParameter) for non-tail cases or bad indices.
PerturbationFamily MakeTailFamily(IndexCase c, const PeirceDecomposition& p,
                                  const BlockInputs& x, TailIndices idx);

struct SlopeResult {
  // Coefficient of eps^p in q(x+) - q(x-), divided by 2c.
  double slope = 0.0;
  // (q(x+) - q(x-)) / (2 c eps^p) at the requested eps.
  double quotient_slope = 0.0;
  double formula = 0.0;
  // Largest |coefficient| below eps^p, divided by 2c.
  double lower_order = 0.0;
  // x(eps) in the cone at eps = 1e-1 and 1e-3 for both signs.
  bool in_cone = false;
  bool degenerate = false;
};

// q(x+) - q(x-) is a polynomial of degree <= 8 in eps; its coefficients are
// recovered exactly by interpolation at Chebyshev nodes. Throws
// Error(kParameter) when eps < 1e-8.
SlopeResult LeadingCoeffCheck(const SelfAdjointOperator& a,
                              const PerturbationFamily& family,
                              double eps = 1e-4);

enum class BlockFill { kHorn, kRandom, kZero };

// weight * (H restricted to the kHorn block pairs) + Gaussian blocks on the
// kRandom pairs.
SelfAdjointOperator ContextOperator(
    const PeirceDecomposition& p, const SelfAdjointOperator& h, double weight,
    const std::function<BlockFill(const BlockPair&)>& fill,
    std::mt19937_64& rng);

// Operators satisfying the hypotheses in force when `target` is treated:
// a multiple of H on the triple support, zero on earlier cases, random on the
// target and later cases. `h` must be H_C for the first five idempotents.
SelfAdjointOperator Rank5ContextOperator(Rank5Case target,
                                         const PeirceDecomposition& p,
                                         const SelfAdjointOperator& h,
                                         std::mt19937_64& rng);
SelfAdjointOperator TailContextOperator(IndexCase target,
                                        const PeirceDecomposition& p,
                                        const SelfAdjointOperator& h,
                                        std::mt19937_64& rng);

}  // namespace symcone

#endif  // SYMCONE_PERTURBATION_H_
