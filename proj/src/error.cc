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

#include "symcone/error.h"

namespace symcone {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDescriptor:
      return "DescriptorError";
    case ErrorCode::kAlgebraMismatch:
      return "AlgebraMismatch";
    case ErrorCode::kDimension:
      return "DimensionError";
    case ErrorCode::kFrame:
      return "FrameError";
    case ErrorCode::kDecomposition:
      return "DecompositionError";
    case ErrorCode::kIndex:
      return "IndexError";
    case ErrorCode::kParameter:
      return "ParameterError";
    case ErrorCode::kNotInSlice:
      return "NotInSlice";
    case ErrorCode::kOutsideCone:
      return "OutsideCone";
    case ErrorCode::kSizeCap:
      return "SizeCapExceeded";
    case ErrorCode::kAffineInfeasible:
      return "AffineInfeasible";
    case ErrorCode::kMalformedInput:
      return "MalformedInput";
  }
  return "Error";
}

}  // namespace symcone
