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
#ifndef MSCL_WARP_H_
#define MSCL_WARP_H_

#include <cstdint>

#include "mscl/flow_field.h"
#include "mscl/frame.h"

namespace mscl {

enum class WarpPlanes {
  kLumaOnly,  // result is a mono frame
  kAll,       // chroma is warped with halved vectors sampled at 2x, 2y
};

// out(x, y) = bilinear ref(x + u, y + v), sample coordinates clamped to the
// frame border and rounded to the nearest integer. Needs a scene-scale field
// with the reference's dimensions.
Frame BackwardWarp(const Frame& ref, const FlowField& flow,
                   WarpPlanes planes = WarpPlanes::kLumaOnly);

// Luma SSE of cur against ref warped by the DownScaled(d) field |low| after
// bilinear upsampling to frame size and scaling by d. Bit-identical to
// warping with RescaleFlow(UpsampleFlowBilinear(low)), without building the
// full-resolution fields.
uint64_t WarpedLumaSse(const Plane& cur, const Plane& ref,
                       const FlowField& low);

}  // namespace mscl

#endif  // MSCL_WARP_H_
