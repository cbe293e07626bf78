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
#ifndef MSCL_FLOW_PREDICTOR_H_
#define MSCL_FLOW_PREDICTOR_H_

#include <vector>

#include "mscl/flow_field.h"
#include "mscl/frame.h"

namespace mscl {

// Estimates the backward flow from cur to ref at the inputs' resolution.
// Implementations must be deterministic. The returned field is tagged scene
// scale; callers working on downsampled frames retag it.
class FlowPredictor {
 public:
  virtual ~FlowPredictor() = default;
  virtual FlowField Estimate(const Frame& cur, const Frame& ref) const = 0;
};

struct BlockMatchParams {
  int block_size = 8;
  int search_radius = 8;
  int pyramid_levels = 1;
  bool use_half_pel = false;

  // Throws kInvalidArgument on out-of-range values.
  void Validate() const;
  // Largest displacement the search can return on either axis.
  int MaxDisplacement() const;
};

struct BlockVector {
  double u = 0.0;
  double v = 0.0;
  bool operator==(const BlockVector&) const = default;
};

// One vector per block, row-major, ceil(W/bs) x ceil(H/bs).
struct BlockVectorGrid {
  int blocks_x = 0;
  int blocks_y = 0;
  int block_size = 0;
  std::vector<BlockVector> vectors;

  const BlockVector& at(int bx, int by) const {
    return vectors[static_cast<size_t>(by) * blocks_x + bx];
  }
};

// Full-search SAD block matching on luma with a hard search radius. Reference
// reads are clamped to the frame border. Ties go to the smaller |(u, v)|,
// then to the earlier candidate in raster order (dy outer, dx inner).
BlockVectorGrid MatchBlocks(const Frame& cur, const Frame& ref,
                            const BlockMatchParams& params);

// Expands a block grid to a dense field by replication.
FlowField ExpandBlockVectors(const BlockVectorGrid& grid, int width,
                             int height);

FlowField EstimateFlowBlock(const Frame& cur, const Frame& ref,
                            const BlockMatchParams& params);

class BlockMatchPredictor : public FlowPredictor {
 public:
  explicit BlockMatchPredictor(BlockMatchParams params = {});

  FlowField Estimate(const Frame& cur, const Frame& ref) const override;
  const BlockMatchParams& params() const { return params_; }

 private:
  BlockMatchParams params_;
};

}  // namespace mscl

#endif  // MSCL_FLOW_PREDICTOR_H_
