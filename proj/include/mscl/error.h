// Copyright 2026 The MSCL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef MSCL_ERROR_H_
#define MSCL_ERROR_H_

#include <stdexcept>
#include <string>

namespace mscl {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kFactorTooLarge,
  kFrameTooSmall,
  kScaleTagViolation,
  kScaleTagMismatch,
  kMissingCandidate,
  kCodeOutOfRange,
  kCorruptPayload,
  kBadFactorIndex,
  kBadMagic,
  kUnsupportedVersion,
  kTruncatedStream,
  kNonzeroReservedBits,
  kNoOverlap,
  kTooFewPoints,
  kNonMonotoneCurve,
  kBadHeader,
  kUnsupportedColorspace,
  kTruncatedFrame,
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

// Every failure in the library surfaces as an Error carrying one of the codes
// above; the CLI maps codes to process exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mscl

#endif  // MSCL_ERROR_H_
