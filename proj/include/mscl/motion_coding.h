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
#ifndef MSCL_MOTION_CODING_H_
#define MSCL_MOTION_CODING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mscl/flow_field.h"

namespace mscl {

inline constexpr int kMotionBlockSize = 8;
inline constexpr int kQuarterPel = 4;
inline constexpr int32_t kMaxMvComponent = (1 << 15) - 1;

struct MotionVector {
  int32_t x = 0;  // quarter-pel
  int32_t y = 0;
  bool operator==(const MotionVector&) const = default;
};

// Quarter-pel vectors on the fixed full-resolution 8x8 grid.
struct BlockMotionGrid {
  int grid_w = 0;
  int grid_h = 0;
  std::vector<MotionVector> mv;

  static BlockMotionGrid ForFrame(int width, int height);

  MotionVector& at(int bx, int by) {
    return mv[static_cast<size_t>(by) * grid_w + bx];
  }
  const MotionVector& at(int bx, int by) const {
    return mv[static_cast<size_t>(by) * grid_w + bx];
  }
  // Throws kInvalidArgument if a component exceeds +/-(2^15 - 1) or the
  // vector count does not match the grid.
  void Validate() const;

  bool operator==(const BlockMotionGrid&) const = default;
};

// Samples the field at each block's center pixel, scales to quarter-pel and
// rounds half away from zero. The field's tag is not consulted.
BlockMotionGrid FlowToGrid(const FlowField& flow);

// Dense block-replicated field carrying |scale|.
FlowField GridToFlow(const BlockMotionGrid& grid, int width, int height,
                     FlowScale scale);

// Componentwise median of left, above and above-right (above-left when
// above-right is off the grid). A single available neighbor is used as is;
// otherwise missing neighbors count as zero.
MotionVector PredictMotionVector(const BlockMotionGrid& grid, int bx, int by);

// Raster-order median-predicted residuals, signed Exp-Golomb binarized and
// range coded with per-bin-position adaptive models.
std::vector<uint8_t> EncodeMotion(const BlockMotionGrid& grid);
BlockMotionGrid DecodeMotion(std::span<const uint8_t> payload, int grid_w,
                             int grid_h);

}  // namespace mscl

#endif  // MSCL_MOTION_CODING_H_
