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
#include "mscl/warp.h"

#include <algorithm>
#include <cmath>

#include "mscl/error.h"
#include "src/interp_inl.h"

namespace mscl {
namespace {

using internal::SampleBilinear;

void WarpLuma(const Plane& ref, const FlowField& flow, Plane& out) {
  const auto u = flow.u_samples();
  const auto v = flow.v_samples();
  const int w = ref.width();
  for (int y = 0; y < ref.height(); ++y) {
    auto row = out.row(y);
    const size_t base = static_cast<size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      row[x] = SampleBilinear(ref, x + u[base + x], y + v[base + x]);
    }
  }
}

void WarpChroma(const Plane& ref, const FlowField& flow, Plane& out) {
  for (int y = 0; y < ref.height(); ++y) {
    const int ly = std::min(2 * y, flow.height() - 1);
    auto row = out.row(y);
    for (int x = 0; x < ref.width(); ++x) {
      const int lx = std::min(2 * x, flow.width() - 1);
      row[x] = SampleBilinear(ref, x + 0.5 * flow.u(lx, ly),
                              y + 0.5 * flow.v(lx, ly));
    }
  }
}

}  // namespace

uint64_t WarpedLumaSse(const Plane& cur, const Plane& ref,
                       const FlowField& low) {
  if (!low.scale().is_downscaled()) {
    throw Error(ErrorCode::kScaleTagViolation,
                "fused warp expects a downscaled field");
  }
  const int w = ref.width();
  const int h = ref.height();
  if (cur.width() != w || cur.height() != h) {
    throw Error(ErrorCode::kDimensionMismatch, "plane sizes differ");
  }
  if (low.width() > w || low.height() > h) {
    throw Error(ErrorCode::kDimensionMismatch,
                "flow field is larger than the frame");
  }
  const double d = low.scale().factor();
  const int lw = low.width();
  const internal::AxisLerp ax = internal::BuildAxisLerp(lw, w);
  const internal::AxisLerp ay = internal::BuildAxisLerp(low.height(), h);
  std::vector<double> col_u(lw), col_v(lw);
  uint64_t sse = 0;
  for (int y = 0; y < h; ++y) {
    internal::LerpRows(low, ay, y, col_u, col_v);
    const auto crow = cur.row(y);
    for (int x = 0; x < w; ++x) {
      // Same operation order as RescaleFlow(UpsampleFlowBilinear(low)).
      const double u = internal::LerpAt(col_u, ax, x) * d;
      const double v = internal::LerpAt(col_v, ax, x) * d;
      const int diff = static_cast<int>(crow[x]) -
                       static_cast<int>(SampleBilinear(ref, x + u, y + v));
      sse += static_cast<uint64_t>(diff * diff);
    }
  }
  return sse;
}

Frame BackwardWarp(const Frame& ref, const FlowField& flow, WarpPlanes planes) {
  if (!flow.scale().is_scene()) {
    throw Error(ErrorCode::kScaleTagViolation,
                "backward warp needs a scene-scale flow field");
  }
  if (flow.width() != ref.width() || flow.height() != ref.height()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "flow and reference dimensions differ");
  }
  const bool chroma = planes == WarpPlanes::kAll && ref.has_chroma();
  Frame out = chroma ? Frame::Yuv420(ref.width(), ref.height())
                     : Frame::Mono(ref.width(), ref.height());
  WarpLuma(ref.luma(), flow, out.luma());
  if (chroma) {
    WarpChroma(ref.u(), flow, out.u());
    WarpChroma(ref.v(), flow, out.v());
  }
  return out;
}

}  // namespace mscl
