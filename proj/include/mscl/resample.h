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
#ifndef MSCL_RESAMPLE_H_
#define MSCL_RESAMPLE_H_

#include "mscl/flow_field.h"
#include "mscl/frame.h"

namespace mscl {

// Smallest width or height a downsampled frame may have.
inline constexpr int kMinDownsampledDim = 16;

// Separable Catmull-Rom resampling to an arbitrary size. When shrinking, the
// kernel support is widened by the per-axis ratio so the filter antialiases.
Plane ResamplePlane(const Plane& src, int out_width, int out_height);

// Resizes every plane; chroma follows the 4:2:0 geometry of the new size.
Frame ResizeFrame(const Frame& src, int out_width, int out_height);

// Output size of DownsampleFrame, round(dim / factor) per axis.
int DownsampledDim(int dim, double factor);
bool CanDownsample(int width, int height, double factor);

// Shrinks by factor d >= 1. d == 1 returns an exact copy. Throws
// kFactorTooLarge when either output dimension would drop below 16.
Frame DownsampleFrame(const Frame& src, double factor);

// Bilinear interpolation of a downscaled field onto a larger grid. Vector
// values are interpolated only; the scale tag is preserved.
FlowField UpsampleFlowBilinear(const FlowField& flow, int target_width,
                               int target_height);

}  // namespace mscl

#endif  // MSCL_RESAMPLE_H_
