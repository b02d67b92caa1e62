// Copyright 2026 The gtso Authors
//
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

#include "errors.hpp"

namespace gtso {

const char *error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
    case ErrorCode::DeterminantViolation:
      return "DeterminantViolation";
    case ErrorCode::NonpositiveDiagonal:
      return "NonpositiveDiagonal";
    case ErrorCode::EmptySequence:
      return "EmptySequence";
    case ErrorCode::LogDomain:
      return "LogDomain";
    case ErrorCode::NotHermitian:
      return "NotHermitian";
    case ErrorCode::ZeroState:
      return "ZeroState";
    case ErrorCode::InvalidConfig:
      return "InvalidConfig";
    case ErrorCode::WorkCutoffExceeded:
      return "WorkCutoffExceeded";
  }
  return "Unknown";
}

}  // namespace gtso
