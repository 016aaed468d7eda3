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


#ifndef SYMCONE_COMMANDS_H_
#define SYMCONE_COMMANDS_H_

#include <ostream>

namespace symcone {

inline constexpr int kExitUsage = 64;

// Parses argv, runs the subcommand and prints one line per check to `out`.
// Returns the report exit code, or kExitUsage on bad arguments or input.
int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace symcone

#endif  // SYMCONE_COMMANDS_H_
