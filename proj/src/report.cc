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

#include "symcone/report.h"

namespace symcone {

std::string_view CheckStatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kDegenerate:
      return "degenerate";
    case CheckStatus::kIndeterminate:
      return "indeterminate";
  }
  return "fail";
}

void Report::Add(std::string name, bool pass, double residual,
                 std::string anchor) {
  checks.push_back({std::move(name), pass ? CheckStatus::kPass : CheckStatus::kFail,
                    residual, std::move(anchor)});
}

int Report::ExitCode() const {
  bool indeterminate = false;
  for (const Check& c : checks) {
    if (c.status == CheckStatus::kFail) return 2;
    indeterminate |= c.status == CheckStatus::kIndeterminate;
  }
  return indeterminate ? 3 : 0;
}

Json Report::ToJson() const {
  Json out;
  out["command"] = command;
  out["seed"] = seed;
  Json list = Json::array();
  for (const Check& c : checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = CheckStatusName(c.status);
    j["residual"] = c.residual;
    j["anchor"] = c.anchor;
    list.push_back(std::move(j));
  }
  out["checks"] = std::move(list);
  if (wall_time) out["wall_time"] = *wall_time;
  if (!payload.is_null()) out["result"] = payload;
  return out;
}

}  // namespace symcone
