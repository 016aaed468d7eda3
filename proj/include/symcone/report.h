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

#ifndef SYMCONE_REPORT_H_
#define SYMCONE_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcone/json_io.h"

namespace symcone {

enum class CheckStatus { kPass, kFail, kDegenerate, kIndeterminate };
std::string_view CheckStatusName(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  double residual = 0.0;
  // The identity or statement the check exercises, or "plumbing".
  std::string anchor;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  // Only reported when timing is requested, so that reports stay
  // byte-reproducible by default.
  std::optional<double> wall_time;
  // Command-specific payload (built operator, partition table, ...).
  Json payload;

  void Add(std::string name, bool pass, double residual, std::string anchor);
  void Add(Check check) { checks.push_back(std::move(check)); }

  // 0 when every check passes (degenerate counts as passing), 2 on any
  // failure, 3 when the only non-passing checks are indeterminate.
  int ExitCode() const;
  Json ToJson() const;
};

}  // namespace symcone

#endif  // SYMCONE_REPORT_H_
