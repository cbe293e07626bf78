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
#include "mscl/resample.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mscl/error.h"
#include "src/interp_inl.h"

namespace mscl {
namespace {

double CatmullRom(double x) {
  x = std::abs(x);
  if (x < 1.0) return (1.5 * x - 2.5) * x * x + 1.0;
  if (x < 2.0) return ((-0.5 * x + 2.5) * x - 4.0) * x + 2.0;
  return 0.0;
}

// Polyphase table for one axis: for output sample o, taps start at
// first[o] (already clamped per tap through index[]) with weights[o * taps].
struct AxisFilter {
  int taps = 0;
  std::vector<int> index;
  std::vector<float> weights;
};

AxisFilter BuildAxisFilter(int in_size, int out_size) {
  const double scale = static_cast<double>(in_size) / out_size;
  const double stretch = std::max(scale, 1.0);
  const double radius = 2.0 * stretch;
  AxisFilter f;
  f.taps = static_cast<int>(std::ceil(2.0 * radius)) + 1;
  f.index.resize(static_cast<size_t>(out_size) * f.taps);
  f.weights.resize(f.index.size());
  std::vector<double> w(f.taps);
  for (int o = 0; o < out_size; ++o) {
    const double center = (o + 0.5) * scale - 0.5;
    const int first = static_cast<int>(std::floor(center - radius)) + 1;
    double sum = 0.0;
    for (int t = 0; t < f.taps; ++t) {
      w[t] = CatmullRom((first + t - center) / stretch);
      sum += w[t];
    }
    for (int t = 0; t < f.taps; ++t) {
      const size_t k = static_cast<size_t>(o) * f.taps + t;
      f.index[k] = std::clamp(first + t, 0, in_size - 1);
      f.weights[k] = static_cast<float>(w[t] / sum);
    }
  }
  return f;
}

}  // namespace

Plane ResamplePlane(const Plane& src, int out_width, int out_height) {
  if (out_width <= 0 || out_height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "resample target must be >0");
  }
  if (out_width == src.width() && out_height == src.height()) return src;

  const int in_w = src.width();
  const int in_h = src.height();
  const AxisFilter hf = BuildAxisFilter(in_w, out_width);
  const AxisFilter vf = BuildAxisFilter(in_h, out_height);

  // Vertical pass first: it runs along contiguous rows, so the wide
  // antialiasing kernels vectorize. Result is in_w x out_height floats.
  std::vector<float> tmp(static_cast<size_t>(in_w) * out_height, 0.0f);
  for (int o = 0; o < out_height; ++o) {
    float* acc = tmp.data() + static_cast<size_t>(o) * in_w;
    const int* idx = vf.index.data() + static_cast<size_t>(o) * vf.taps;
    const float* wt = vf.weights.data() + static_cast<size_t>(o) * vf.taps;
    for (int t = 0; t < vf.taps; ++t) {
      const float w = wt[t];
      if (w == 0.0f) continue;
      const uint8_t* in = src.row(idx[t]).data();
      for (int x = 0; x < in_w; ++x) acc[x] += w * static_cast<float>(in[x]);
    }
  }

  Plane dst(out_width, out_height);
  for (int y = 0; y < out_height; ++y) {
    const float* row = tmp.data() + static_cast<size_t>(y) * in_w;
    auto out = dst.row(y);
    for (int o = 0; o < out_width; ++o) {
      const int* idx = hf.index.data() + static_cast<size_t>(o) * hf.taps;
      const float* wt = hf.weights.data() + static_cast<size_t>(o) * hf.taps;
      float acc = 0.0f;
      for (int t = 0; t < hf.taps; ++t) acc += wt[t] * row[idx[t]];
      out[o] = static_cast<uint8_t>(
          static_cast<int>(std::clamp(acc, 0.0f, 255.0f) + 0.5f));
    }
  }
  return dst;
}

Frame ResizeFrame(const Frame& src, int out_width, int out_height) {
  Plane luma = ResamplePlane(src.luma(), out_width, out_height);
  if (!src.has_chroma()) return Frame::FromPlanes(std::move(luma));
  const int cw = Frame::ChromaWidth(out_width);
  const int ch = Frame::ChromaHeight(out_height);
  return Frame::FromPlanes(std::move(luma), ResamplePlane(src.u(), cw, ch),
                           ResamplePlane(src.v(), cw, ch));
}

int DownsampledDim(int dim, double factor) {
  return static_cast<int>(std::lround(dim / factor));
}

bool CanDownsample(int width, int height, double factor) {
  if (factor == 1.0) return true;
  return DownsampledDim(width, factor) >= kMinDownsampledDim &&
         DownsampledDim(height, factor) >= kMinDownsampledDim;
}

Frame DownsampleFrame(const Frame& src, double factor) {
  if (!(factor >= 1.0) || !std::isfinite(factor)) {
    throw Error(
        ErrorCode::kInvalidArgument,
        "downsample factor must be >= 1, got " + std::to_string(factor));
  }
  if (factor == 1.0) return src;
  if (!CanDownsample(src.width(), src.height(), factor)) {
    throw Error(ErrorCode::kFactorTooLarge,
                "factor " + std::to_string(factor) + " shrinks " +
                    std::to_string(src.width()) + "x" +
                    std::to_string(src.height()) + " below " +
                    std::to_string(kMinDownsampledDim) + " px");
  }
  return ResizeFrame(src, DownsampledDim(src.width(), factor),
                     DownsampledDim(src.height(), factor));
}

FlowField UpsampleFlowBilinear(const FlowField& flow, int target_width,
                               int target_height) {
  if (!flow.scale().is_downscaled()) {
    throw Error(ErrorCode::kScaleTagViolation,
                "bilinear flow upsampling expects a downscaled field");
  }
  if (target_width < flow.width() || target_height < flow.height()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "upsampling target is smaller than the flow field");
  }
  const int w = flow.width();
  const int h = flow.height();
  FlowField out(target_width, target_height, flow.scale());
  if (w == target_width && h == target_height) {
    out = flow;
    return out;
  }

  const internal::AxisLerp ax = internal::BuildAxisLerp(w, target_width);
  const internal::AxisLerp ay = internal::BuildAxisLerp(h, target_height);
  std::vector<double> col_u(w), col_v(w);
  auto du = out.u_samples();
  auto dv = out.v_samples();
  for (int y = 0; y < target_height; ++y) {
    internal::LerpRows(flow, ay, y, col_u, col_v);
    const size_t ro = static_cast<size_t>(y) * target_width;
    for (int x = 0; x < target_width; ++x) {
      du[ro + x] = internal::LerpAt(col_u, ax, x);
      dv[ro + x] = internal::LerpAt(col_v, ax, x);
    }
  }
  return out;
}

}  // namespace mscl
