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
#include "mscl/flow_predictor.h"

#include <cmath>
#include <cstdlib>

#include "gtest/gtest.h"
#include "mscl/error.h"
#include "mscl/flow_field.h"
#include "tests/block_search_oracle.h"
#include "tests/test_util.h"

namespace mscl {
namespace {

// A reference related to cur by a small shift plus sparse perturbations, so
// minima are meaningful; low-contrast variants exercise tie-breaking.
std::pair<Frame, Frame> OraclePair(uint32_t seed, int w, int h) {
  std::mt19937 rng(seed);
  const int hi = (seed % 3 == 0) ? 3 : 255;
  const Frame ref = testing::RandomFrame(w, h, seed * 2 + 1, 0, hi);
  const int su = static_cast<int>(rng() % 5) - 2;
  const int sv = static_cast<int>(rng() % 5) - 2;
  Frame cur = Frame::Mono(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int s = ref.luma().clamped(x + su, y + sv);
      if (rng() % 7 == 0) s = static_cast<int>(rng() % (hi + 1));
      cur.luma().at(x, y) = static_cast<uint8_t>(s);
    }
  }
  return {cur, ref};
}

TEST(BlockMatchTest, MatchesExhaustiveOracle) {
  for (uint32_t seed = 0; seed < 200; ++seed) {
    const auto [cur, ref] = OraclePair(seed, 16, 16);
    BlockMatchParams params;
    params.search_radius = 2;
    const BlockVectorGrid grid = MatchBlocks(cur, ref, params);
    const auto oracle = testing::ExhaustiveBlockSearch(cur, ref, 8, 2);
    ASSERT_EQ(grid.vectors.size(), oracle.size());
    for (size_t i = 0; i < oracle.size(); ++i) {
      EXPECT_EQ(grid.vectors[i].u, oracle[i].u) << "seed " << seed;
      EXPECT_EQ(grid.vectors[i].v, oracle[i].v) << "seed " << seed;
    }
  }
}

TEST(BlockMatchTest, MatchesOracleOnRaggedFrames) {
  for (uint32_t seed = 0; seed < 30; ++seed) {
    const auto [cur, ref] = OraclePair(seed + 1000, 21, 13);
    for (int bs : {4, 8}) {
      BlockMatchParams params;
      params.block_size = bs;
      params.search_radius = 3;
      const BlockVectorGrid grid = MatchBlocks(cur, ref, params);
      const auto oracle = testing::ExhaustiveBlockSearch(cur, ref, bs, 3);
      ASSERT_EQ(grid.vectors.size(), oracle.size());
      for (size_t i = 0; i < oracle.size(); ++i) {
        EXPECT_EQ(grid.vectors[i].u, oracle[i].u);
        EXPECT_EQ(grid.vectors[i].v, oracle[i].v);
      }
    }
  }
}

TEST(BlockMatchTest, IdenticalFramesGiveZeroField) {
  const Frame f = testing::RandomFrame(64, 48, 3);
  const FlowField flow = EstimateFlowBlock(f, f, {});
  for (double u : flow.u_samples()) EXPECT_EQ(u, 0.0);
  for (double v : flow.v_samples()) EXPECT_EQ(v, 0.0);
}

TEST(BlockMatchTest, FlatFramesPreferZero) {
  const Frame f = testing::ConstantFrame(32, 32, 90);
  const FlowField flow = EstimateFlowBlock(f, f, {});
  for (double u : flow.u_samples()) EXPECT_EQ(u, 0.0);
}

// The generator moves content by +v per frame, so the backward flow from
// frame 1 to frame 0 is -v.
TEST(BlockMatchTest, RecoversGlobalShift) {
  const VideoSequence seq = testing::MovingPair(160, 96, 5, 0);
  const BlockVectorGrid grid =
      MatchBlocks(seq.frames[1], seq.frames[0], BlockMatchParams{});
  int interior = 0, hits = 0;
  for (int by = 1; by < grid.blocks_y - 1; ++by) {
    for (int bx = 2; bx < grid.blocks_x - 1; ++bx) {
      ++interior;
      const BlockVector& b = grid.at(bx, by);
      if (b.u == -5 && b.v == 0) ++hits;
    }
  }
  EXPECT_GE(hits, 0.95 * interior);
}

TEST(BlockMatchTest, SaturatesBeyondSearchRange) {
  const VideoSequence seq = testing::MovingPair(160, 96, 24, 0);
  const FlowField flow = EstimateFlowBlock(seq.frames[1], seq.frames[0], {});
  for (double u : flow.u_samples()) EXPECT_LE(std::abs(u), 8.0);
  for (double v : flow.v_samples()) EXPECT_LE(std::abs(v), 8.0);
}

TEST(BlockMatchTest, ShiftEquivariantInsideWindow) {
  const Frame base = testing::RandomFrame(64, 64, 12);
  for (int s : {-3, 1, 6}) {
    Frame cur = Frame::Mono(64, 64);
    for (int y = 0; y < 64; ++y) {
      for (int x = 0; x < 64; ++x) {
        cur.luma().at(x, y) = base.luma().clamped(x + s, y - s);
      }
    }
    const BlockVectorGrid grid = MatchBlocks(cur, base, BlockMatchParams{});
    // Blocks whose window stays inside the frame: 8 <= x0 - R, x0 + 15 < 64.
    for (int by = 2; by < 6; ++by) {
      for (int bx = 2; bx < 6; ++bx) {
        EXPECT_EQ(grid.at(bx, by).u, s);
        EXPECT_EQ(grid.at(bx, by).v, -s);
      }
    }
  }
}

TEST(BlockMatchTest, PyramidBoundAndRecovery) {
  BlockMatchParams params;
  params.pyramid_levels = 3;
  EXPECT_EQ(params.MaxDisplacement(), 8 + 16 + 32);
  const VideoSequence seq = testing::MovingPair(256, 128, 20, 0);
  const BlockVectorGrid grid =
      MatchBlocks(seq.frames[1], seq.frames[0], params);
  int hits = 0, interior = 0;
  for (int by = 2; by < grid.blocks_y - 2; ++by) {
    for (int bx = 4; bx < grid.blocks_x - 2; ++bx) {
      ++interior;
      const BlockVector& b = grid.at(bx, by);
      EXPECT_LE(std::abs(b.u), params.MaxDisplacement());
      if (b.u == -20 && b.v == 0) ++hits;
    }
  }
  EXPECT_GE(hits, 0.8 * interior);
}

TEST(BlockMatchTest, HalfPelFindsHalfShift) {
  const VideoSequence seq = testing::MovingPair(128, 64, 2.5, 0);
  BlockMatchParams params;
  params.use_half_pel = true;
  const BlockVectorGrid grid =
      MatchBlocks(seq.frames[1], seq.frames[0], params);
  int hits = 0, interior = 0;
  for (int by = 1; by < grid.blocks_y - 1; ++by) {
    for (int bx = 1; bx < grid.blocks_x - 1; ++bx) {
      ++interior;
      if (grid.at(bx, by).u == -2.5) ++hits;
    }
  }
  EXPECT_GE(hits, 0.8 * interior);
}

TEST(BlockMatchTest, Deterministic) {
  const VideoSequence seq = testing::MovingPair(96, 64, 3, 2);
  const BlockMatchPredictor p;
  EXPECT_EQ(p.Estimate(seq.frames[1], seq.frames[0]),
            p.Estimate(seq.frames[1], seq.frames[0]));
}

TEST(BlockMatchTest, ContractErrors) {
  try {
    EstimateFlowBlock(Frame::Mono(16, 16), Frame::Mono(16, 8), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  try {
    EstimateFlowBlock(Frame::Mono(6, 16), Frame::Mono(6, 16), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFrameTooSmall);
  }
  BlockMatchParams bad;
  bad.block_size = 5;
  EXPECT_THROW(bad.Validate(), Error);
  bad = {};
  bad.search_radius = 0;
  EXPECT_THROW(bad.Validate(), Error);
}

TEST(FlowMagnitudeTest, ZeroField) {
  EXPECT_EQ(MeanFlowMagnitude(FlowField(8, 8, FlowScale::Scene())), 0.0);
}

TEST(FlowMagnitudeTest, ThreeFourFive) {
  EXPECT_EQ(MeanFlowMagnitude(FlowField(8, 8, FlowScale::Scene(), 3, 4)), 5.0);
}

TEST(FlowMagnitudeTest, HalfAndHalfMatchesDirectSum) {
  FlowField f(10, 4, FlowScale::Scene());
  for (int y = 0; y < 4; ++y) {
    for (int x = 5; x < 10; ++x) f.Set(x, y, 2.0, 0.0);
  }
  double sum = 0.0;
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 10; ++x) {
      sum += std::sqrt(f.u(x, y) * f.u(x, y) + f.v(x, y) * f.v(x, y));
    }
  }
  EXPECT_EQ(MeanFlowMagnitude(f), sum / 40.0);
  EXPECT_EQ(MeanFlowMagnitude(f), 1.0);
}

TEST(FlowMagnitudeTest, RejectsDownscaled) {
  try {
    MeanFlowMagnitude(FlowField(4, 4, FlowScale::DownScaled(2.0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScaleTagViolation);
  }
}

}  // namespace
}  // namespace mscl
