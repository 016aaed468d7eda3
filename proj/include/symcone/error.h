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

#ifndef SYMCONE_ERROR_H_
#define SYMCONE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace symcone {

enum class ErrorCode {
  kDescriptor,
  kAlgebraMismatch,
  kDimension,
  kFrame,
  kDecomposition,
  kIndex,
  kParameter,
  kNotInSlice,
  kOutsideCone,
  kSizeCap,
  kAffineInfeasible,
  kMalformedInput,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. `residual()` is
// meaningful for numerical rejections (slice residual, affine infeasibility)
// and zero otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, double residual = 0.0)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        residual_(residual) {}

  ErrorCode code() const { return code_; }
  double residual() const { return residual_; }

 private:
  ErrorCode code_;
  double residual_;
};

}  // namespace symcone

#endif  // SYMCONE_ERROR_H_
