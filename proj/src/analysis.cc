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
#include "mscl/analysis.h"

#include <algorithm>
#include <cmath>

#include "mscl/error.h"
#include "mscl/resample.h"

namespace mscl {

double SceneComplexity(const Frame& frame) {
  if (frame.width() < kMinComplexityDim || frame.height() < kMinComplexityDim) {
    throw Error(ErrorCode::kFrameTooSmall,
                "scene complexity needs at least 64x64 luma");
  }
  const Plane down =
      ResamplePlane(frame.luma(), DownsampledDim(frame.width(), 4.0),
                    DownsampledDim(frame.height(), 4.0));
  const Plane up = ResamplePlane(down, frame.width(), frame.height());
  return PsnrFromMse(PlaneMse(frame.luma(), up)).value;
}

SequenceStats SequenceMotionStats(const VideoSequence& seq,
                                  const FlowPredictor& predictor,
                                  const AdaptConfig& config) {
  if (seq.frames.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "motion stats need >= 2 frames");
  }
  seq.Validate();
  config.Validate();
  SequenceStats s;
  for (const Frame& f : seq.frames) {
    s.per_frame_complexity.push_back(SceneComplexity(f));
  }
  for (size_t t = 1; t < seq.frames.size(); ++t) {
    const Frame& cur = seq.frames[t];
    const Frame& ref = seq.frames[t - 1];
    const std::vector<CandidateEvaluation> evals = EvaluateCandidates(
        cur, ref, config, predictor, CandidateDetail::kScoresOnly);
    const CandidateEvaluation* best = nullptr;
    const CandidateEvaluation* direct = nullptr;
    for (const CandidateEvaluation& e : evals) {
      if (e.d == DownsampleFactor::Identity()) direct = &e;
      if (!e.feasible) continue;
      if (best == nullptr || e.prediction_psnr > best->prediction_psnr) {
        best = &e;
      }
    }
    if (best == nullptr || direct == nullptr) {
      throw Error(ErrorCode::kMissingCandidate, "no usable factor evaluation");
    }
    auto motion = [&](const CandidateEvaluation& e) {
      CandidateEvaluation copy = e;
      MaterializeFlows(copy, cur.width(), cur.height());
      return MeanFlowMagnitude(copy.flow_scene);
    };
    s.per_frame_motion.push_back(motion(*best));
    s.per_frame_motion_direct.push_back(motion(*direct));
    s.per_frame_argmax_d.push_back(best->d.value());
  }
  auto mean = [](const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
  };
  s.avg_motion_magnitude = mean(s.per_frame_motion);
  s.avg_motion_direct = mean(s.per_frame_motion_direct);
  s.scene_complexity = mean(s.per_frame_complexity);
  return s;
}

MotionHistogram::MotionHistogram(double bin_width, int bins)
    : bin_width_(bin_width) {
  if (!(bin_width > 0.0) || bins < 1) {
    throw Error(ErrorCode::kInvalidArgument, "histogram needs bins > 0");
  }
  counts_.assign(bins, 0);
}

int MotionHistogram::BinOf(double motion) const {
  if (!(motion > 0.0)) return 0;
  const double b = std::floor(motion / bin_width_);
  return static_cast<int>(std::min<double>(b, bins() - 1));
}

void MotionHistogram::Add(double motion) {
  if (!std::isfinite(motion) || motion < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "motion must be finite and >= 0");
  }
  ++counts_[BinOf(motion)];
  ++total_;
  sum_ += motion;
}

double MotionHistogram::Mean() const {
  return total_ == 0 ? 0.0 : sum_ / total_;
}

double MotionHistogram::ModeCenter() const {
  const auto it = std::max_element(counts_.begin(), counts_.end());
  return BinCenter(static_cast<int>(it - counts_.begin()));
}

}  // namespace mscl
