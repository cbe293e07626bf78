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
#ifndef MSCL_ANALYSIS_H_
#define MSCL_ANALYSIS_H_

#include <vector>

#include "mscl/adaptive_inference.h"
#include "mscl/flow_predictor.h"
#include "mscl/frame.h"
#include "mscl/video_io.h"

namespace mscl {

// Smallest width/height accepted by SceneComplexity.
inline constexpr int kMinComplexityDim = 64;

// Luma PSNR between a frame and its 4x bicubic down/up round trip. Lower
// values mean more texture. Throws kFrameTooSmall below 64 px.
double SceneComplexity(const Frame& frame);

struct SequenceStats {
  // From the factor search: the flow of the best-PSNR candidate, at scene
  // scale.
  double avg_motion_magnitude = 0.0;
  // Direct full-resolution estimate (d = 1), which saturates at the search
  // range.
  double avg_motion_direct = 0.0;
  double scene_complexity = 0.0;
  std::vector<double> per_frame_motion;  // one per consecutive pair
  std::vector<double> per_frame_motion_direct;
  std::vector<double> per_frame_argmax_d;
  std::vector<double> per_frame_complexity;  // one per frame
};

// Needs at least two frames of at least 64x64. Frame t is estimated against
// frame t-1.
SequenceStats SequenceMotionStats(const VideoSequence& seq,
                                  const FlowPredictor& predictor,
                                  const AdaptConfig& config);

// Histogram of per-sequence average motion, as used to characterize the
// motion distribution of a training corpus.
class MotionHistogram {
 public:
  // Bins of |bin_width| px starting at 0; the last bin is open-ended.
  MotionHistogram(double bin_width, int bins);

  void Add(double motion);

  int bins() const { return static_cast<int>(counts_.size()); }
  double bin_width() const { return bin_width_; }
  const std::vector<int>& counts() const { return counts_; }
  int total() const { return total_; }
  int BinOf(double motion) const;
  double BinCenter(int bin) const { return (bin + 0.5) * bin_width_; }
  // Mean of the added samples (exact, not binned).
  double Mean() const;
  // Center of the most populated bin; the lowest such bin on ties.
  double ModeCenter() const;

 private:
  double bin_width_;
  std::vector<int> counts_;
  int total_ = 0;
  double sum_ = 0.0;
};

}  // namespace mscl

#endif  // MSCL_ANALYSIS_H_
