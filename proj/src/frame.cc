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
#include "mscl/frame.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mscl/error.h"

namespace mscl {

Plane::Plane(int width, int height, uint8_t fill)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "plane dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
  data_.assign(static_cast<size_t>(width) * height, fill);
}

uint8_t Plane::clamped(int x, int y) const {
  x = std::clamp(x, 0, width_ - 1);
  y = std::clamp(y, 0, height_ - 1);
  return data_[Index(x, y)];
}

Frame Frame::Mono(int width, int height, uint8_t fill) {
  Frame f;
  f.luma_ = Plane(width, height, fill);
  return f;
}

Frame Frame::Yuv420(int width, int height, uint8_t luma_fill,
                    uint8_t chroma_fill) {
  Frame f = Mono(width, height, luma_fill);
  f.u_ = Plane(ChromaWidth(width), ChromaHeight(height), chroma_fill);
  f.v_ = Plane(ChromaWidth(width), ChromaHeight(height), chroma_fill);
  return f;
}

Frame Frame::FromPlanes(Plane luma, std::optional<Plane> u,
                        std::optional<Plane> v) {
  if (luma.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty luma plane");
  }
  if (u.has_value() != v.has_value()) {
    throw Error(ErrorCode::kInvalidArgument, "chroma planes must be paired");
  }
  if (u.has_value()) {
    const int cw = ChromaWidth(luma.width());
    const int ch = ChromaHeight(luma.height());
    if (u->width() != cw || u->height() != ch || v->width() != cw ||
        v->height() != ch) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "chroma planes do not match 4:2:0 geometry");
    }
  }
  Frame f;
  f.luma_ = std::move(luma);
  f.u_ = std::move(u);
  f.v_ = std::move(v);
  return f;
}

double PlaneMse(const Plane& a, const Plane& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorCode::kDimensionMismatch, "plane sizes differ");
  }
  const auto sa = a.samples();
  const auto sb = b.samples();
  uint64_t sse = 0;
  for (size_t i = 0; i < sa.size(); ++i) {
    const int d = static_cast<int>(sa[i]) - static_cast<int>(sb[i]);
    sse += static_cast<uint64_t>(d * d);
  }
  return static_cast<double>(sse) / static_cast<double>(sa.size());
}

PsnrDb PsnrFromMse(double mse) {
  constexpr double kPeak2 = 255.0 * 255.0;
  // Below this MSE the formula would exceed the cap.
  if (mse < kPeak2 * std::pow(10.0, -kPsnrCapDb / 10.0)) return {kPsnrCapDb};
  return {10.0 * std::log10(kPeak2 / mse)};
}

PsnrDb Psnr(const Frame& a, const Frame& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(
        ErrorCode::kDimensionMismatch,
        "psnr needs equal dimensions, got " + std::to_string(a.width()) + "x" +
            std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
            "x" + std::to_string(b.height()));
  }
  return PsnrFromMse(PlaneMse(a.luma(), b.luma()));
}

double MeanLuma(const Frame& frame) {
  uint64_t sum = 0;
  for (uint8_t s : frame.luma().samples()) sum += s;
  return static_cast<double>(sum) /
         static_cast<double>(frame.luma().samples().size());
}

}  // namespace mscl
