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

// Partition of the block-index pairs (ij, kl) with 11 ⪯ ij ⪯ kl ⪯ r+r+ into
// the regions handled by the rank-extension argument.

#ifndef SYMCONE_INDEX_CLASSIFICATION_H_
#define SYMCONE_INDEX_CLASSIFICATION_H_

#include <map>
#include <string_view>

#include "symcone/operators.h"

namespace symcone {

enum class IndexCase {
  kInRankR,   // l <= r
  kTailDiag,  // (r+r+, r+r+)
  kDiagTail,  // (ij, r+r+) with j <= r
  kCaseA,     // (i r+, r+r+)
  kTailSelf,  // (i r+, i r+)
  kCaseB,     // (i r+, k r+), i < k
  kCaseC,     // (ii, i r+)
  kCaseD,     // (ii, k r+), k != i
  kCaseE,     // (ij, k r+), i < j, k in {i, j}
  kCaseF,     // (ij, k r+), i < j, k outside {i, j}
};

std::string_view IndexCaseName(IndexCase c);

// Keys must satisfy i <= j, k <= l and (ij, kl) must lie in the index set for
// r_plus; otherwise throws Error(kIndex).
IndexCase ClassifyIndex(int i, int j, int k, int l, int r_plus);
inline IndexCase ClassifyIndex(const BlockPair& p, int r_plus) {
  return ClassifyIndex(p.ij.i, p.ij.j, p.kl.i, p.kl.j, r_plus);
}

std::map<IndexCase, int> PartitionCounts(int r_plus);

}  // namespace symcone

#endif  // SYMCONE_INDEX_CLASSIFICATION_H_
