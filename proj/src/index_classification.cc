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

#include "symcone/index_classification.h"

#include <string>

#include "symcone/error.h"

namespace symcone {

std::string_view IndexCaseName(IndexCase c) {
  switch (c) {
    case IndexCase::kInRankR:
      return "in_rank_r";
    case IndexCase::kTailDiag:
      return "tail_diag";
    case IndexCase::kDiagTail:
      return "diag_tail";
    case IndexCase::kCaseA:
      return "case_a";
    case IndexCase::kTailSelf:
      return "tail_self";
    case IndexCase::kCaseB:
      return "case_b";
    case IndexCase::kCaseC:
      return "case_c";
    case IndexCase::kCaseD:
      return "case_d";
    case IndexCase::kCaseE:
      return "case_e";
    case IndexCase::kCaseF:
      return "case_f";
  }
  return "unknown";
}

IndexCase ClassifyIndex(int i, int j, int k, int l, int r_plus) {
  const bool valid = r_plus >= 1 && 1 <= i && i <= j && 1 <= k && k <= l &&
                     l <= r_plus && BlockPrecedesOrEqual({i, j}, {k, l});
  if (!valid) {
    throw Error(ErrorCode::kIndex,
                "(" + std::to_string(i) + std::to_string(j) + "," +
                    std::to_string(k) + std::to_string(l) +
                    ") is outside the index set for r+ = " +
                    std::to_string(r_plus));
  }
  const int r = r_plus - 1;
  if (l <= r) return IndexCase::kInRankR;
  if (k == r_plus) {
    if (j <= r) return IndexCase::kDiagTail;
    return i == r_plus ? IndexCase::kTailDiag : IndexCase::kCaseA;
  }
  if (j == r_plus) return i == k ? IndexCase::kTailSelf : IndexCase::kCaseB;
  if (i == j) return k == i ? IndexCase::kCaseC : IndexCase::kCaseD;
  return (k == i || k == j) ? IndexCase::kCaseE : IndexCase::kCaseF;
}

std::map<IndexCase, int> PartitionCounts(int r_plus) {
  std::map<IndexCase, int> counts;
  for (const BlockPair& p : BlockPairsUpTo(r_plus)) {
    ++counts[ClassifyIndex(p, r_plus)];
  }
  return counts;
}

}  // namespace symcone
