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
#include "mscl/error.h"

namespace mscl {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kFactorTooLarge:
      return "FactorTooLarge";
    case ErrorCode::kFrameTooSmall:
      return "FrameTooSmall";
    case ErrorCode::kScaleTagViolation:
      return "ScaleTagViolation";
    case ErrorCode::kScaleTagMismatch:
      return "ScaleTagMismatch";
    case ErrorCode::kMissingCandidate:
      return "MissingCandidate";
    case ErrorCode::kCodeOutOfRange:
      return "CodeOutOfRange";
    case ErrorCode::kCorruptPayload:
      return "CorruptPayload";
    case ErrorCode::kBadFactorIndex:
      return "BadFactorIndex";
    case ErrorCode::kBadMagic:
      return "BadMagic";
    case ErrorCode::kUnsupportedVersion:
      return "UnsupportedVersion";
    case ErrorCode::kTruncatedStream:
      return "TruncatedStream";
    case ErrorCode::kNonzeroReservedBits:
      return "NonzeroReservedBits";
    case ErrorCode::kNoOverlap:
      return "NoOverlap";
    case ErrorCode::kTooFewPoints:
      return "TooFewPoints";
    case ErrorCode::kNonMonotoneCurve:
      return "NonMonotoneCurve";
    case ErrorCode::kBadHeader:
      return "BadHeader";
    case ErrorCode::kUnsupportedColorspace:
      return "UnsupportedColorspace";
    case ErrorCode::kTruncatedFrame:
      return "TruncatedFrame";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

}  // namespace mscl
