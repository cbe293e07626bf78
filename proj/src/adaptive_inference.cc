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
#include "mscl/adaptive_inference.h"

#include <algorithm>
#include <string>

#include "mscl/error.h"
#include "mscl/parallel.h"
#include "mscl/resample.h"
#include "mscl/warp.h"

namespace mscl {

const char* AdaptiveModeName(AdaptiveMode mode) {
  switch (mode) {
    case AdaptiveMode::kOff:
      return "off";
    case AdaptiveMode::kDownsampling:
      return "downsampling";
    case AdaptiveMode::kScaling:
      return "downsampling+scaling";
    case AdaptiveMode::kFull:
      return "downsampling+scaling+bias";
  }
  return "unknown";
}

AdaptConfig AdaptConfig::ForMode(AdaptiveMode mode) {
  AdaptConfig c;
  c.enable_adaptive = mode != AdaptiveMode::kOff;
  c.enable_scaling =
      mode == AdaptiveMode::kScaling || mode == AdaptiveMode::kFull;
  c.enable_bias = mode == AdaptiveMode::kFull;
  return c;
}

void AdaptConfig::Validate() const {
  if (factors.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "factor set is empty");
  }
  for (size_t i = 1; i < factors.size(); ++i) {
    if (!(factors[i - 1] < factors[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "factor set must be strictly ascending");
    }
  }
  if (!factors.front().is_identity()) {
    throw Error(ErrorCode::kInvalidArgument, "factor set must contain 1.0");
  }
  if (!(motion_threshold >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "motion threshold must be >= 0");
  }
  if (!(bias_margin >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "bias margin must be >= 0");
  }
}

std::vector<DownsampleFactor> AdaptConfig::ActiveFactors() const {
  if (!enable_adaptive) return {DownsampleFactor::Identity()};
  return factors;
}

CandidateEvaluation EvaluateCandidate(const Frame& cur, const Frame& ref,
                                      DownsampleFactor d,
                                      const FlowPredictor& predictor,
                                      CandidateDetail detail) {
  if (cur.width() != ref.width() || cur.height() != ref.height()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "current and reference frames differ in size");
  }
  CandidateEvaluation eval;
  eval.d = d;
  const int w = cur.width();
  const int h = cur.height();
  if (!CanDownsample(w, h, d.value())) return eval;

  FlowField low;
  try {
    if (d.is_identity()) {
      low = predictor.Estimate(cur, ref);
    } else {
      // Estimation only looks at luma.
      const int dw = DownsampledDim(w, d.value());
      const int dh = DownsampledDim(h, d.value());
      const Frame small_cur =
          Frame::FromPlanes(ResamplePlane(cur.luma(), dw, dh));
      const Frame small_ref =
          Frame::FromPlanes(ResamplePlane(ref.luma(), dw, dh));
      low = predictor.Estimate(small_cur, small_ref);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kFrameTooSmall) return eval;
    throw;
  }
  low.set_scale(FlowScale::DownScaled(d.value()));
  const double n = static_cast<double>(w) * h;
  eval.prediction_psnr = PsnrFromMse(
      static_cast<double>(WarpedLumaSse(cur.luma(), ref.luma(), low)) / n);
  eval.flow_low = std::move(low);
  eval.feasible = true;
  if (detail == CandidateDetail::kFull) MaterializeFlows(eval, w, h);
  return eval;
}

void MaterializeFlows(CandidateEvaluation& eval, int width, int height) {
  if (!eval.feasible || !eval.flow_scene.empty()) return;
  eval.flow_downscaled = UpsampleFlowBilinear(eval.flow_low, width, height);
  eval.flow_scene = RescaleFlow(eval.flow_downscaled, eval.d);
}

std::vector<CandidateEvaluation> EvaluateCandidates(
    const Frame& cur, const Frame& ref, const AdaptConfig& config,
    const FlowPredictor& predictor, CandidateDetail detail) {
  const std::vector<DownsampleFactor> factors = config.ActiveFactors();
  std::vector<CandidateEvaluation> evals(factors.size());
  ParallelFor(static_cast<int>(factors.size()), config.threads, [&](int i) {
    evals[i] = EvaluateCandidate(cur, ref, factors[i], predictor, detail);
  });
  return evals;
}

DownsampleFactor SelectFactor(const std::vector<CandidateEvaluation>& evals,
                              DownsampleFactor d_ref,
                              const AdaptConfig& config) {
  const std::vector<DownsampleFactor> factors = config.ActiveFactors();
  auto find = [&](DownsampleFactor d) -> const CandidateEvaluation* {
    const CandidateEvaluation* hit = nullptr;
    for (const auto& e : evals) {
      if (e.d != d) continue;
      if (hit != nullptr) {
        throw Error(
            ErrorCode::kInvalidArgument,
            "duplicate evaluation for factor " + std::to_string(d.value()));
      }
      hit = &e;
    }
    return hit;
  };

  const CandidateEvaluation* best = nullptr;
  for (DownsampleFactor d : factors) {
    const CandidateEvaluation* e = find(d);
    if (e == nullptr) {
      throw Error(ErrorCode::kMissingCandidate,
                  "no evaluation for factor " + std::to_string(d.value()));
    }
    if (!e->feasible) continue;
    // Factors ascend, so strict > keeps the smallest factor on ties.
    if (best == nullptr || e->prediction_psnr > best->prediction_psnr) {
      best = e;
    }
  }
  if (best == nullptr) {
    throw Error(ErrorCode::kMissingCandidate, "no feasible candidate");
  }
  if (!config.enable_bias) return best->d;

  if (std::find(factors.begin(), factors.end(), d_ref) == factors.end()) {
    // With adaptation off the active set is {1.0}; nothing to bias toward.
    if (!config.enable_adaptive) return best->d;
    throw Error(ErrorCode::kInvalidArgument, "reference factor " +
                                                 std::to_string(d_ref.value()) +
                                                 " is not in the factor set");
  }
  const CandidateEvaluation* ref = find(d_ref);
  if (ref == nullptr || !ref->feasible) return best->d;
  if (best->prediction_psnr.value <
      ref->prediction_psnr.value + config.bias_margin) {
    return d_ref;
  }
  return best->d;
}

DownsampleFactor ApplyMotionThreshold(DownsampleFactor d,
                                      const FlowField& flow_scene,
                                      const AdaptConfig& config) {
  if (d.is_identity()) return d;
  if (MeanFlowMagnitude(flow_scene) < config.motion_threshold) {
    return DownsampleFactor::Identity();
  }
  return d;
}

FlowField RescaleFlow(const FlowField& flow, DownsampleFactor d) {
  if (!flow.scale().is_downscaled() || flow.scale().factor() != d.value()) {
    throw Error(ErrorCode::kScaleTagMismatch,
                "flow tag does not match factor " + std::to_string(d.value()));
  }
  FlowField out = flow;
  const double s = d.value();
  for (double& x : out.u_samples()) x *= s;
  for (double& x : out.v_samples()) x *= s;
  out.set_scale(FlowScale::Scene());
  return out;
}

FlowField DownscaleFlow(const FlowField& flow, DownsampleFactor d) {
  if (!flow.scale().is_scene()) {
    throw Error(ErrorCode::kScaleTagViolation,
                "only scene-scale fields can be downscaled");
  }
  FlowField out = flow;
  const double s = d.value();
  for (double& x : out.u_samples()) x /= s;
  for (double& x : out.v_samples()) x /= s;
  out.set_scale(FlowScale::DownScaled(s));
  return out;
}

FactorDecision DecideFactor(const Frame& cur, const Frame& ref,
                            DownsampleFactor d_ref, const AdaptConfig& config,
                            const FlowPredictor& predictor) {
  config.Validate();
  std::vector<CandidateEvaluation> evals = EvaluateCandidates(
      cur, ref, config, predictor, CandidateDetail::kScoresOnly);

  FactorDecision decision;
  for (const auto& e : evals) {
    if (e.feasible) decision.psnr_table.emplace_back(e.d, e.prediction_psnr);
  }
  AdaptConfig argmax_only = config;
  argmax_only.enable_bias = false;
  decision.d_argmax = SelectFactor(evals, d_ref, argmax_only);
  decision.d_pre_threshold = SelectFactor(evals, d_ref, config);

  auto take = [&](DownsampleFactor d) -> CandidateEvaluation& {
    for (auto& e : evals) {
      if (e.d == d) return e;
    }
    throw Error(ErrorCode::kMissingCandidate, "selected factor vanished");
  };
  CandidateEvaluation& chosen = take(decision.d_pre_threshold);
  MaterializeFlows(chosen, cur.width(), cur.height());
  decision.selected_motion = MeanFlowMagnitude(chosen.flow_scene);
  decision.d_final =
      ApplyMotionThreshold(decision.d_pre_threshold, chosen.flow_scene, config);
  // The 1.0 evaluation is always in the loop, so a reset reuses its flow.
  CandidateEvaluation& final_eval = take(decision.d_final);
  MaterializeFlows(final_eval, cur.width(), cur.height());
  decision.selected = std::move(final_eval);
  return decision;
}

}  // namespace mscl
