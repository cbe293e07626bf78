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
#include "mscl/codec.h"

#include <chrono>
#include <string>
#include <utility>

#include "mscl/error.h"
#include "mscl/motion_coding.h"
#include "mscl/warp.h"

namespace mscl {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::vector<PlaneGeometry> Geometry(int width, int height, bool chroma) {
  std::vector<PlaneGeometry> g{{width, height, PlaneKind::kLuma}};
  if (chroma) {
    const int cw = Frame::ChromaWidth(width);
    const int ch = Frame::ChromaHeight(height);
    g.push_back({cw, ch, PlaneKind::kChroma});
    g.push_back({cw, ch, PlaneKind::kChroma});
  }
  return g;
}

std::vector<const Plane*> PlanesOf(const Frame& f) {
  std::vector<const Plane*> p{&f.luma()};
  if (f.has_chroma()) {
    p.push_back(&f.u());
    p.push_back(&f.v());
  }
  return p;
}

std::vector<PlaneKind> KindsFor(const Frame& f) {
  std::vector<PlaneKind> k{PlaneKind::kLuma};
  if (f.has_chroma()) {
    k.push_back(PlaneKind::kChroma);
    k.push_back(PlaneKind::kChroma);
  }
  return k;
}

Frame Reconstruct(const Frame& pred, const std::vector<ResidualPlane>& res) {
  Plane luma = AddResidual(pred.luma(), res[0]);
  if (!pred.has_chroma()) return Frame::FromPlanes(std::move(luma));
  return Frame::FromPlanes(std::move(luma), AddResidual(pred.u(), res[1]),
                           AddResidual(pred.v(), res[2]));
}

Frame FlatFrame(int width, int height, bool chroma) {
  return chroma ? Frame::Yuv420(width, height, 128, 128)
                : Frame::Mono(width, height, 128);
}

// Codes cur - pred and returns the payload plus the reconstruction.
std::pair<std::vector<uint8_t>, Frame> CodeResidual(const Frame& cur,
                                                    const Frame& pred,
                                                    const Quantizer& q) {
  const auto cp = PlanesOf(cur);
  const auto pp = PlanesOf(pred);
  std::vector<ResidualPlane> residual;
  for (size_t i = 0; i < cp.size(); ++i) {
    residual.push_back(SubtractPlanes(*cp[i], *pp[i]));
  }
  const std::vector<PlaneKind> kinds = KindsFor(cur);
  EncodedResidual coded = EncodeResidual(residual, kinds, q);
  return {std::move(coded.payload), Reconstruct(pred, coded.reconstruction)};
}

void CheckGeometry(const Frame& f, const StreamParams& params) {
  if (f.width() != params.width || f.height() != params.height ||
      f.has_chroma() != params.chroma) {
    throw Error(ErrorCode::kDimensionMismatch,
                "frame geometry does not match stream parameters");
  }
}

}  // namespace

IntraResult EncodeFrameIntra(const Frame& cur, const Quantizer& q) {
  const auto start = Clock::now();
  const Frame flat = FlatFrame(cur.width(), cur.height(), cur.has_chroma());
  auto [payload, rec] = CodeResidual(cur, flat, q);
  IntraResult r;
  r.frame.type = FrameType::kIntra;
  r.frame.d_index = 0;
  r.frame.residual_payload = std::move(payload);
  r.frame.stats.residual_bits =
      static_cast<int64_t>(r.frame.residual_payload.size()) * 8;
  r.frame.stats.reconstruction_psnr = Psnr(cur, rec).value;
  r.frame.stats.coding_ms = MillisSince(start);
  r.rec = std::move(rec);
  return r;
}

Frame DecodeFrameIntra(const EncodedFrame& enc, const StreamParams& params) {
  if (enc.type != FrameType::kIntra) {
    throw Error(ErrorCode::kInvalidArgument, "not an intra frame");
  }
  if (enc.d_index != 0 || !enc.motion_payload.empty()) {
    throw Error(ErrorCode::kCorruptPayload,
                "intra frame carries motion or a factor index");
  }
  const Quantizer q(params.qp);
  const auto geometry = Geometry(params.width, params.height, params.chroma);
  const auto res = DecodeResidual(enc.residual_payload, geometry, q);
  return Reconstruct(FlatFrame(params.width, params.height, params.chroma),
                     res);
}

FlowField DecodedSceneFlow(const EncodedFrame& enc,
                           const StreamParams& params) {
  if (enc.d_index >= DownsampleFactor::kCount) {
    throw Error(ErrorCode::kBadFactorIndex,
                "factor index " + std::to_string(enc.d_index));
  }
  const DownsampleFactor d = DecodeSideInfo(enc.d_index);
  const BlockMotionGrid proto =
      BlockMotionGrid::ForFrame(params.width, params.height);
  const BlockMotionGrid grid =
      DecodeMotion(enc.motion_payload, proto.grid_w, proto.grid_h);
  if (!params.scaling) {
    return GridToFlow(grid, params.width, params.height, FlowScale::Scene());
  }
  return RescaleFlow(GridToFlow(grid, params.width, params.height,
                                FlowScale::DownScaled(d.value())),
                     d);
}

PredictedResult EncodeFramePredicted(const Frame& cur, const Frame& ref_rec,
                                     const AdaptConfig& config,
                                     const Quantizer& q,
                                     const FlowPredictor& predictor,
                                     DownsampleFactor d_ref,
                                     std::optional<DownsampleFactor> forced) {
  if (cur.width() != ref_rec.width() || cur.height() != ref_rec.height() ||
      cur.has_chroma() != ref_rec.has_chroma()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "current and reference geometry differ");
  }
  const auto select_start = Clock::now();
  CandidateEvaluation eval;
  DownsampleFactor d_final, d_pre;
  if (forced.has_value()) {
    eval = EvaluateCandidate(cur, ref_rec, *forced, predictor);
    if (!eval.feasible) {
      throw Error(ErrorCode::kFactorTooLarge,
                  "forced factor is not feasible for this frame size");
    }
    d_final = d_pre = *forced;
  } else {
    FactorDecision decision =
        DecideFactor(cur, ref_rec, d_ref, config, predictor);
    d_final = decision.d_final;
    d_pre = decision.d_pre_threshold;
    eval = std::move(decision.selected);
  }
  const double selection_ms = MillisSince(select_start);

  const auto coding_start = Clock::now();
  const StreamParams params{cur.width(), cur.height(), cur.has_chroma(), q.qp(),
                            config.enable_scaling};
  EncodedFrame out;
  out.type = FrameType::kPredicted;
  out.d_index = EncodeSideInfo(d_final);
  out.motion_payload = EncodeMotion(FlowToGrid(
      config.enable_scaling ? eval.flow_downscaled : eval.flow_scene));

  // Closed loop: predict from exactly what the decoder will rebuild.
  const FlowField decoded = DecodedSceneFlow(out, params);
  const Frame pred = BackwardWarp(ref_rec, decoded, WarpPlanes::kAll);
  auto [payload, rec] = CodeResidual(cur, pred, q);
  out.residual_payload = std::move(payload);

  FrameStats& s = out.stats;
  s.motion_bits = static_cast<int64_t>(out.motion_payload.size()) * 8;
  s.residual_bits = static_cast<int64_t>(out.residual_payload.size()) * 8;
  s.side_bits = config.enable_adaptive ? kSideInfoBits : 0;
  s.prediction_psnr = Psnr(cur, pred).value;
  s.selection_psnr = eval.prediction_psnr.value;
  s.reconstruction_psnr = Psnr(cur, rec).value;
  s.d_pre_threshold = d_pre.value();
  s.mean_motion = MeanFlowMagnitude(decoded);
  s.estimated_motion = MeanFlowMagnitude(eval.flow_scene);
  s.selection_ms = selection_ms;
  s.coding_ms = MillisSince(coding_start);

  PredictedResult r;
  r.frame = std::move(out);
  r.rec = std::move(rec);
  r.d_final = d_final;
  r.d_out = config.dref_policy == DrefPolicy::kTransmitted ? d_final : d_pre;
  return r;
}

Frame DecodeFramePredicted(const EncodedFrame& enc, const Frame& ref_rec,
                           const StreamParams& params) {
  if (enc.type != FrameType::kPredicted) {
    throw Error(ErrorCode::kInvalidArgument, "not a predicted frame");
  }
  CheckGeometry(ref_rec, params);
  const FlowField flow = DecodedSceneFlow(enc, params);
  const Frame pred = BackwardWarp(ref_rec, flow, WarpPlanes::kAll);
  const Quantizer q(params.qp);
  const auto geometry = Geometry(params.width, params.height, params.chroma);
  return Reconstruct(pred, DecodeResidual(enc.residual_payload, geometry, q));
}

Encoder::Encoder(const StreamParams& params, const AdaptConfig& config,
                 const FlowPredictor& predictor)
    : params_(params), config_(config), predictor_(predictor), q_(params.qp) {
  config_.Validate();
  params_.scaling = config_.enable_scaling;
}

EncodedFrame Encoder::Encode(const Frame& frame,
                             std::optional<DownsampleFactor> forced) {
  CheckGeometry(frame, params_);
  if (!have_ref_) {
    IntraResult r = EncodeFrameIntra(frame, q_);
    ref_ = std::move(r.rec);
    have_ref_ = true;
    d_ref_ = DownsampleFactor::Identity();
    return std::move(r.frame);
  }
  PredictedResult r = EncodeFramePredicted(frame, ref_, config_, q_, predictor_,
                                           d_ref_, forced);
  ref_ = std::move(r.rec);
  d_ref_ = r.d_out;
  return std::move(r.frame);
}

Decoder::Decoder(const StreamParams& params) : params_(params) {}

Frame Decoder::Decode(const EncodedFrame& frame) {
  Frame out;
  if (frame.type == FrameType::kIntra) {
    out = DecodeFrameIntra(frame, params_);
  } else {
    if (!have_ref_) {
      throw Error(ErrorCode::kCorruptPayload,
                  "predicted frame without a preceding reference");
    }
    out = DecodeFramePredicted(frame, ref_, params_);
  }
  ref_ = out;
  have_ref_ = true;
  return out;
}

}  // namespace mscl
