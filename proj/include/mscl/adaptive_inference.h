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
#ifndef MSCL_ADAPTIVE_INFERENCE_H_
#define MSCL_ADAPTIVE_INFERENCE_H_

#include <string>
#include <utility>
#include <vector>

#include "mscl/downsample_factor.h"
#include "mscl/flow_field.h"
#include "mscl/flow_predictor.h"
#include "mscl/frame.h"

namespace mscl {

// Which factor seeds the next frame's bias reference.
enum class DrefPolicy {
  kTransmitted,   // factor after the motion threshold (default)
  kPreThreshold,  // factor before the motion threshold reset
};

// The ablation ladder: off, downsampling only, + decoder-side scaling,
// + temporal bias.
enum class AdaptiveMode { kOff, kDownsampling, kScaling, kFull };

const char* AdaptiveModeName(AdaptiveMode mode);

struct AdaptConfig {
  std::vector<DownsampleFactor> factors = DownsampleFactor::All();
  double motion_threshold = 5.0;  // px, scene scale
  double bias_margin = 0.1;       // dB
  bool enable_adaptive = true;
  bool enable_scaling = true;
  bool enable_bias = true;
  DrefPolicy dref_policy = DrefPolicy::kTransmitted;
  // Workers for the candidate loop; 0 = hardware concurrency. Results do
  // not depend on this value.
  int threads = 1;

  static AdaptConfig ForMode(AdaptiveMode mode);

  // Throws kInvalidArgument when factors are empty, unsorted, duplicated or
  // lack 1.0, or when threshold/margin are negative.
  void Validate() const;
  // The factors actually searched: {1.0} when adaptation is off.
  std::vector<DownsampleFactor> ActiveFactors() const;
};

struct CandidateEvaluation {
  DownsampleFactor d;
  // False when the factor shrinks the frame below what resampling or the
  // predictor accept; such candidates never win.
  bool feasible = false;
  PsnrDb prediction_psnr{0.0};
  FlowField flow_low;         // predictor output, DownScaled(d)
  FlowField flow_downscaled;  // full resolution, DownScaled(d)
  FlowField flow_scene;       // full resolution, scene scale
};

// kScoresOnly leaves flow_downscaled and flow_scene empty; the PSNR is
// computed without them and is identical to the kFull value.
enum class CandidateDetail { kFull, kScoresOnly };

struct FactorDecision {
  DownsampleFactor d_final;
  DownsampleFactor d_pre_threshold;
  DownsampleFactor d_argmax;
  CandidateEvaluation selected;  // evaluation for d_final
  std::vector<std::pair<DownsampleFactor, PsnrDb>> psnr_table;
  double selected_motion = 0.0;  // mean scene-scale magnitude before reset
};

// Estimates flow between the d-downsampled frames, upsamples it bilinearly
// to full resolution, rescales by d and scores the backward-warped
// prediction of cur by luma PSNR.
CandidateEvaluation EvaluateCandidate(
    const Frame& cur, const Frame& ref, DownsampleFactor d,
    const FlowPredictor& predictor,
    CandidateDetail detail = CandidateDetail::kFull);

// Fills flow_downscaled and flow_scene of a feasible evaluation from
// flow_low. No-op when they are already present.
void MaterializeFlows(CandidateEvaluation& eval, int width, int height);

// One evaluation per active factor, in factor order.
std::vector<CandidateEvaluation> EvaluateCandidates(
    const Frame& cur, const Frame& ref, const AdaptConfig& config,
    const FlowPredictor& predictor,
    CandidateDetail detail = CandidateDetail::kFull);

// Argmax of prediction PSNR (ties to the smallest factor), then the bias
// step: keep d_ref unless the winner beats it by at least bias_margin.
DownsampleFactor SelectFactor(const std::vector<CandidateEvaluation>& evals,
                              DownsampleFactor d_ref,
                              const AdaptConfig& config);

// Resets to 1.0 when the mean scene-scale motion is below the threshold.
DownsampleFactor ApplyMotionThreshold(DownsampleFactor d,
                                      const FlowField& flow_scene,
                                      const AdaptConfig& config);

// Multiplies a DownScaled(d) field by d and retags it scene scale. Throws
// kScaleTagMismatch when the field carries another tag.
FlowField RescaleFlow(const FlowField& flow, DownsampleFactor d);
// Inverse of RescaleFlow.
FlowField DownscaleFlow(const FlowField& flow, DownsampleFactor d);

// Full per-frame decision: candidate loop, selection with bias, threshold.
// Only the evaluations that the decision uses get full-resolution flows.
FactorDecision DecideFactor(const Frame& cur, const Frame& ref,
                            DownsampleFactor d_ref, const AdaptConfig& config,
                            const FlowPredictor& predictor);

}  // namespace mscl

#endif  // MSCL_ADAPTIVE_INFERENCE_H_
