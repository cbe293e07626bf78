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
#include "mscl/downsample_factor.h"

#include <cmath>
#include <string>

#include "mscl/error.h"

namespace mscl {

DownsampleFactor DownsampleFactor::FromIndex(int index) {
  if (index < 0 || index >= kCount) {
    throw Error(ErrorCode::kCodeOutOfRange,
                "factor index " + std::to_string(index) + " is not in [0,31]");
  }
  return DownsampleFactor(index);
}

DownsampleFactor DownsampleFactor::FromValue(double value) {
  const double steps = (value - 1.0) / kStep;
  const double rounded = std::round(steps);
  if (!std::isfinite(value) || std::abs(steps - rounded) > 1e-9 ||
      rounded < 0 || rounded >= kCount) {
    throw Error(ErrorCode::kInvalidArgument,
                "factor " + std::to_string(value) +
                    " is not one of 1.00, 1.25, ..., 8.75");
  }
  return DownsampleFactor(static_cast<int>(rounded));
}

std::vector<DownsampleFactor> DownsampleFactor::All() {
  std::vector<DownsampleFactor> all;
  all.reserve(kCount);
  for (int i = 0; i < kCount; ++i) all.push_back(DownsampleFactor(i));
  return all;
}

uint8_t EncodeSideInfo(DownsampleFactor d) {
  return static_cast<uint8_t>(d.index());
}

DownsampleFactor DecodeSideInfo(unsigned code) {
  if (code >= DownsampleFactor::kCount) {
    throw Error(ErrorCode::kCodeOutOfRange,
                "side info code " + std::to_string(code) + " exceeds 5 bits");
  }
  return DownsampleFactor::FromIndex(static_cast<int>(code));
}

}  // namespace mscl
