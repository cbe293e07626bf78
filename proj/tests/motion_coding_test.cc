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
#include <random>

#include "gtest/gtest.h"
#include "mscl/error.h"

namespace mscl {
namespace {

BlockMotionGrid RandomGrid(int w, int h, int max_abs, uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int32_t> dist(-max_abs, max_abs);
  BlockMotionGrid g;
  g.grid_w = w;
  g.grid_h = h;
  for (int i = 0; i < w * h; ++i) g.mv.push_back({dist(rng), dist(rng)});
  return g;
}

int32_t NaiveMedian(int32_t a, int32_t b, int32_t c) {
  int32_t v[3] = {a, b, c};
  std::sort(v, v + 3);
  return v[1];
}

TEST(FlowToGridTest, ConstantFlow) {
  const FlowField f(40, 24, FlowScale::Scene(), 1.25, -0.5);
  const BlockMotionGrid g = FlowToGrid(f);
  ASSERT_EQ(g.grid_w, 5);
  ASSERT_EQ(g.grid_h, 3);
  for (const MotionVector& m : g.mv) EXPECT_EQ(m, (MotionVector{5, -2}));
}

TEST(FlowToGridTest, RaggedGridDimensions) {
  const BlockMotionGrid g = BlockMotionGrid::ForFrame(33, 29);
  EXPECT_EQ(g.grid_w, 5);
  EXPECT_EQ(g.grid_h, 4);
  EXPECT_EQ(g.mv.size(), 20u);
}

TEST(FlowToGridTest, RoundsHalfAwayFromZero) {
  const BlockMotionGrid pos =
      FlowToGrid(FlowField(8, 8, FlowScale::Scene(), 0.625, -0.625));
  EXPECT_EQ(pos.mv[0], (MotionVector{3, -3}));
  const BlockMotionGrid small =
      FlowToGrid(FlowField(8, 8, FlowScale::Scene(), 0.1, -0.1));
  EXPECT_EQ(small.mv[0], (MotionVector{0, 0}));
}

TEST(FlowToGridTest, SamplesBlockCenter) {
  FlowField f(16, 8, FlowScale::Scene());
  f.Set(4, 4, 2.0, 0.0);
  f.Set(12, 4, 0.0, 3.0);
  const BlockMotionGrid g = FlowToGrid(f);
  EXPECT_EQ(g.at(0, 0), (MotionVector{8, 0}));
  EXPECT_EQ(g.at(1, 0), (MotionVector{0, 12}));
}

TEST(FlowToGridTest, ConstantFieldRoundTrip) {
  const FlowField f(33, 29, FlowScale::Scene(), -3.75, 2.5);
  const FlowField back = GridToFlow(FlowToGrid(f), 33, 29, FlowScale::Scene());
  EXPECT_EQ(back, f);
}

TEST(FlowToGridTest, RejectsOutOfRangeVectors) {
  const FlowField f(8, 8, FlowScale::Scene(), 9000.0, 0.0);
  EXPECT_THROW(FlowToGrid(f), Error);
}

TEST(GridToFlowTest, ReplicatesBlocksAndKeepsTag) {
  BlockMotionGrid g = BlockMotionGrid::ForFrame(20, 10);
  g.at(2, 1) = {-6, 1};
  const FlowField f = GridToFlow(g, 20, 10, FlowScale::DownScaled(2.0));
  EXPECT_EQ(f.scale(), FlowScale::DownScaled(2.0));
  EXPECT_EQ(f.u(19, 9), -1.5);
  EXPECT_EQ(f.v(16, 8), 0.25);
  EXPECT_EQ(f.u(15, 9), 0.0);
  EXPECT_THROW(GridToFlow(g, 30, 10, FlowScale::Scene()), Error);
}

TEST(PredictMotionVectorTest, NeighborRules) {
  BlockMotionGrid g = RandomGrid(6, 5, 50, 3);
  EXPECT_EQ(PredictMotionVector(g, 0, 0), (MotionVector{}));
  EXPECT_EQ(PredictMotionVector(g, 3, 0), g.at(2, 0));
  for (int by = 1; by < 5; ++by) {
    for (int bx = 0; bx < 6; ++bx) {
      const MotionVector left = bx > 0 ? g.at(bx - 1, by) : MotionVector{};
      const MotionVector up = g.at(bx, by - 1);
      const MotionVector diag =
          bx + 1 < 6 ? g.at(bx + 1, by - 1) : g.at(bx - 1, by - 1);
      const MotionVector p = PredictMotionVector(g, bx, by);
      EXPECT_EQ(p.x, NaiveMedian(left.x, up.x, diag.x));
      EXPECT_EQ(p.y, NaiveMedian(left.y, up.y, diag.y));
    }
  }
}

TEST(PredictMotionVectorTest, SingleColumnUsesAbove) {
  BlockMotionGrid g = RandomGrid(1, 4, 50, 8);
  for (int by = 1; by < 4; ++by) {
    EXPECT_EQ(PredictMotionVector(g, 0, by), g.at(0, by - 1));
  }
}

TEST(MotionCodingTest, ZeroGridIsTiny) {
  BlockMotionGrid g = BlockMotionGrid::ForFrame(80, 80);
  const auto bytes = EncodeMotion(g);
  EXPECT_LT(bytes.size(), 40u);
  EXPECT_EQ(DecodeMotion(bytes, 10, 10), g);
}

TEST(MotionCodingTest, RandomGridsRoundTrip) {
  for (uint32_t seed = 0; seed < 30; ++seed) {
    const int w = 1 + seed % 13;
    const int h = 1 + (seed * 7) % 11;
    const BlockMotionGrid g = RandomGrid(w, h, 512, seed);
    EXPECT_EQ(DecodeMotion(EncodeMotion(g), w, h), g) << seed;
  }
}

TEST(MotionCodingTest, ExtremeComponentsRoundTrip) {
  BlockMotionGrid g = RandomGrid(4, 4, 10, 1);
  g.at(0, 0) = {kMaxMvComponent, -kMaxMvComponent};
  g.at(3, 3) = {-kMaxMvComponent, kMaxMvComponent};
  EXPECT_EQ(DecodeMotion(EncodeMotion(g), 4, 4), g);
}

TEST(MotionCodingTest, ConstantGridBeatsRawByFourTimes) {
  BlockMotionGrid g = BlockMotionGrid::ForFrame(320, 192);
  for (MotionVector& m : g.mv) m = {-96, 13};
  const auto bytes = EncodeMotion(g);
  const double raw_bits = 32.0 * g.mv.size();
  EXPECT_LE(8.0 * bytes.size() * 4.0, raw_bits);
}

TEST(MotionCodingTest, SmoothGridsCostLessThanNoise) {
  BlockMotionGrid smooth = BlockMotionGrid::ForFrame(320, 192);
  for (int by = 0; by < smooth.grid_h; ++by) {
    for (int bx = 0; bx < smooth.grid_w; ++bx) smooth.at(bx, by) = {bx, by};
  }
  const BlockMotionGrid noisy = RandomGrid(smooth.grid_w, smooth.grid_h, 40, 2);
  EXPECT_LT(EncodeMotion(smooth).size(), EncodeMotion(noisy).size());
}

TEST(MotionCodingTest, CorruptPayloadNeverCrashes) {
  const BlockMotionGrid g = RandomGrid(8, 6, 64, 5);
  const auto bytes = EncodeMotion(g);
  std::mt19937 rng(1);
  int detected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<uint8_t> bad = bytes;
    bad[rng() % bad.size()] ^= static_cast<uint8_t>(1 + rng() % 255);
    const size_t cut = rng() % 3 == 0 ? rng() % bad.size() : bad.size();
    bad.resize(cut);
    try {
      if (DecodeMotion(bad, 8, 6) != g) ++detected;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kCorruptPayload);
      ++detected;
    }
  }
  EXPECT_GT(detected, 250);
}

TEST(MotionCodingTest, InvalidGridsRejected) {
  BlockMotionGrid g = RandomGrid(2, 2, 4, 1);
  g.mv.pop_back();
  EXPECT_THROW(EncodeMotion(g), Error);
  EXPECT_THROW(DecodeMotion(std::vector<uint8_t>(8), 0, 3), Error);
}

}  // namespace
}  // namespace mscl
