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
#include "mscl/motion_coding.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "mscl/error.h"
#include "mscl/range_coder.h"

namespace mscl {
namespace {

constexpr int kBinContexts = 16;

struct MotionContexts {
  std::array<std::array<BitModel, kBinContexts>, 2> prefix;
  std::array<std::array<BitModel, kBinContexts>, 2> suffix;
};

int32_t Median3(int32_t a, int32_t b, int32_t c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

int32_t RoundHalfAway(double v) { return static_cast<int32_t>(std::round(v)); }

}  // namespace

BlockMotionGrid BlockMotionGrid::ForFrame(int width, int height) {
  BlockMotionGrid g;
  g.grid_w = (width + kMotionBlockSize - 1) / kMotionBlockSize;
  g.grid_h = (height + kMotionBlockSize - 1) / kMotionBlockSize;
  g.mv.resize(static_cast<size_t>(g.grid_w) * g.grid_h);
  return g;
}

void BlockMotionGrid::Validate() const {
  if (grid_w <= 0 || grid_h <= 0 ||
      mv.size() != static_cast<size_t>(grid_w) * grid_h) {
    throw Error(ErrorCode::kInvalidArgument, "motion grid size mismatch");
  }
  for (const MotionVector& m : mv) {
    if (std::abs(m.x) > kMaxMvComponent || std::abs(m.y) > kMaxMvComponent) {
      throw Error(ErrorCode::kInvalidArgument,
                  "motion vector component out of 16-bit range");
    }
  }
}

BlockMotionGrid FlowToGrid(const FlowField& flow) {
  BlockMotionGrid g = BlockMotionGrid::ForFrame(flow.width(), flow.height());
  for (int by = 0; by < g.grid_h; ++by) {
    const int y0 = by * kMotionBlockSize;
    const int cy = y0 + std::min(kMotionBlockSize, flow.height() - y0) / 2;
    for (int bx = 0; bx < g.grid_w; ++bx) {
      const int x0 = bx * kMotionBlockSize;
      const int cx = x0 + std::min(kMotionBlockSize, flow.width() - x0) / 2;
      g.at(bx, by) = {RoundHalfAway(flow.u(cx, cy) * kQuarterPel),
                      RoundHalfAway(flow.v(cx, cy) * kQuarterPel)};
    }
  }
  g.Validate();
  return g;
}

FlowField GridToFlow(const BlockMotionGrid& grid, int width, int height,
                     FlowScale scale) {
  const BlockMotionGrid expect = BlockMotionGrid::ForFrame(width, height);
  if (expect.grid_w != grid.grid_w || expect.grid_h != grid.grid_h) {
    throw Error(ErrorCode::kDimensionMismatch,
                "motion grid does not match frame size");
  }
  FlowField flow(width, height, scale);
  auto u = flow.u_samples();
  auto v = flow.v_samples();
  for (int y = 0; y < height; ++y) {
    const int by = y / kMotionBlockSize;
    for (int x = 0; x < width; ++x) {
      const MotionVector& m = grid.at(x / kMotionBlockSize, by);
      const size_t i = static_cast<size_t>(y) * width + x;
      u[i] = static_cast<double>(m.x) / kQuarterPel;
      v[i] = static_cast<double>(m.y) / kQuarterPel;
    }
  }
  return flow;
}

MotionVector PredictMotionVector(const BlockMotionGrid& grid, int bx, int by) {
  const MotionVector* n[3] = {nullptr, nullptr, nullptr};
  if (bx > 0) n[0] = &grid.at(bx - 1, by);
  if (by > 0) {
    n[1] = &grid.at(bx, by - 1);
    if (bx + 1 < grid.grid_w) {
      n[2] = &grid.at(bx + 1, by - 1);
    } else if (bx > 0) {
      n[2] = &grid.at(bx - 1, by - 1);
    }
  }
  int available = 0;
  const MotionVector* only = nullptr;
  for (const MotionVector* p : n) {
    if (p != nullptr) {
      ++available;
      only = p;
    }
  }
  if (available == 0) return {};
  if (available == 1) return *only;
  const MotionVector zero{};
  const MotionVector& a = n[0] ? *n[0] : zero;
  const MotionVector& b = n[1] ? *n[1] : zero;
  const MotionVector& c = n[2] ? *n[2] : zero;
  return {Median3(a.x, b.x, c.x), Median3(a.y, b.y, c.y)};
}

std::vector<uint8_t> EncodeMotion(const BlockMotionGrid& grid) {
  grid.Validate();
  RangeEncoder enc;
  MotionContexts ctx;
  for (int by = 0; by < grid.grid_h; ++by) {
    for (int bx = 0; bx < grid.grid_w; ++bx) {
      const MotionVector pred = PredictMotionVector(grid, bx, by);
      const MotionVector& m = grid.at(bx, by);
      EncodeExpGolomb(enc, FoldSigned(m.x - pred.x), ctx.prefix[0],
                      ctx.suffix[0]);
      EncodeExpGolomb(enc, FoldSigned(m.y - pred.y), ctx.prefix[1],
                      ctx.suffix[1]);
    }
  }
  return enc.Finish();
}

BlockMotionGrid DecodeMotion(std::span<const uint8_t> payload, int grid_w,
                             int grid_h) {
  if (grid_w <= 0 || grid_h <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty motion grid");
  }
  BlockMotionGrid grid;
  grid.grid_w = grid_w;
  grid.grid_h = grid_h;
  grid.mv.resize(static_cast<size_t>(grid_w) * grid_h);
  RangeDecoder dec(payload);
  MotionContexts ctx;
  for (int by = 0; by < grid_h; ++by) {
    for (int bx = 0; bx < grid_w; ++bx) {
      const MotionVector pred = PredictMotionVector(grid, bx, by);
      const int64_t x =
          static_cast<int64_t>(pred.x) +
          UnfoldSigned(DecodeExpGolomb(dec, ctx.prefix[0], ctx.suffix[0]));
      const int64_t y =
          static_cast<int64_t>(pred.y) +
          UnfoldSigned(DecodeExpGolomb(dec, ctx.prefix[1], ctx.suffix[1]));
      if (std::abs(x) > kMaxMvComponent || std::abs(y) > kMaxMvComponent) {
        throw Error(ErrorCode::kCorruptPayload,
                    "decoded motion vector out of range at block (" +
                        std::to_string(bx) + "," + std::to_string(by) + ")");
      }
      grid.at(bx, by) = {static_cast<int32_t>(x), static_cast<int32_t>(y)};
    }
  }
  return grid;
}

}  // namespace mscl
