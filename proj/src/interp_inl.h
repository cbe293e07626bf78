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
#ifndef MSCL_SRC_INTERP_INL_H_
#define MSCL_SRC_INTERP_INL_H_

// Interpolation primitives shared by flow upsampling, warping and the fused
// candidate scorer. Keeping one definition guarantees the fused path is
// bit-identical to the unfused one.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mscl/flow_field.h"
#include "mscl/frame.h"

namespace mscl::internal {

// Source taps and weight for each destination index of a centered bilinear
// mapping src_size -> dst_size.
struct AxisLerp {
  std::vector<int> i0;
  std::vector<int> i1;
  std::vector<double> f;
};

inline AxisLerp BuildAxisLerp(int src_size, int dst_size) {
  AxisLerp a;
  a.i0.resize(dst_size);
  a.i1.resize(dst_size);
  a.f.resize(dst_size);
  const double s = static_cast<double>(src_size) / dst_size;
  for (int x = 0; x < dst_size; ++x) {
    const double p = std::clamp((x + 0.5) * s - 0.5, 0.0, src_size - 1.0);
    a.i0[x] = static_cast<int>(p);
    a.i1[x] = std::min(a.i0[x] + 1, src_size - 1);
    a.f[x] = p - a.i0[x];
  }
  return a;
}

// floor(v + 0.5) clamped to [0, 255]. Clamping first lets truncation stand
// in for floor, which avoids a libm call on baseline x86-64.
inline uint8_t RoundToSample(double v) {
  return static_cast<uint8_t>(
      static_cast<int>(std::clamp(v, 0.0, 255.0) + 0.5));
}

// Lerp form keeps constant regions exact.
inline double Lerp2(double a, double b, double c, double d, double fx,
                    double fy) {
  const double top = a + fx * (b - a);
  const double bot = c + fx * (d - c);
  return top + fy * (bot - top);
}

// Flow upsampling interpolates vertically at the source width, then
// horizontally: col = rows i0/i1 of |flow| blended by ay.f[y].
inline void LerpRows(const FlowField& flow, const AxisLerp& ay, int y,
                     std::vector<double>& col_u, std::vector<double>& col_v) {
  const int w = flow.width();
  const auto su = flow.u_samples();
  const auto sv = flow.v_samples();
  const size_t r0 = static_cast<size_t>(ay.i0[y]) * w;
  const size_t r1 = static_cast<size_t>(ay.i1[y]) * w;
  const double fy = ay.f[y];
  for (int i = 0; i < w; ++i) {
    col_u[i] = su[r0 + i] + fy * (su[r1 + i] - su[r0 + i]);
    col_v[i] = sv[r0 + i] + fy * (sv[r1 + i] - sv[r0 + i]);
  }
}

inline double LerpAt(const std::vector<double>& col, const AxisLerp& ax,
                     int x) {
  const double a = col[ax.i0[x]];
  return a + ax.f[x] * (col[ax.i1[x]] - a);
}

inline uint8_t SampleBilinear(const Plane& p, double x, double y) {
  x = std::clamp(x, 0.0, p.width() - 1.0);
  y = std::clamp(y, 0.0, p.height() - 1.0);
  const int x0 = static_cast<int>(x);
  const int y0 = static_cast<int>(y);
  const int x1 = std::min(x0 + 1, p.width() - 1);
  const int y1 = std::min(y0 + 1, p.height() - 1);
  const double v = Lerp2(p.at(x0, y0), p.at(x1, y0), p.at(x0, y1), p.at(x1, y1),
                         x - x0, y - y0);
  return RoundToSample(v);
}

}  // namespace mscl::internal

#endif  // MSCL_SRC_INTERP_INL_H_
