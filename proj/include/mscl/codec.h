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
#ifndef MSCL_CODEC_H_
#define MSCL_CODEC_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "mscl/adaptive_inference.h"
#include "mscl/downsample_factor.h"
#include "mscl/flow_predictor.h"
#include "mscl/frame.h"
#include "mscl/residual_coding.h"

namespace mscl {

enum class FrameType : uint8_t { kIntra = 0, kPredicted = 1 };

// Side information is 5 bits per predicted frame.
inline constexpr int kSideInfoBits = 5;

struct FrameStats {
  int64_t motion_bits = 0;
  int64_t residual_bits = 0;
  int64_t side_bits = 0;
  double prediction_psnr = 0.0;      // coded prediction vs source, luma
  double selection_psnr = 0.0;       // candidate-loop PSNR of d_final
  double reconstruction_psnr = 0.0;  // luma
  double d_pre_threshold = 1.0;
  double mean_motion = 0.0;       // decoded scene-scale flow, px
  double estimated_motion = 0.0;  // selected flow before quantization, px
  double selection_ms = 0.0;
  double coding_ms = 0.0;

  int64_t total_bits() const { return motion_bits + residual_bits + side_bits; }
};

struct EncodedFrame {
  FrameType type = FrameType::kIntra;
  uint8_t d_index = 0;
  std::vector<uint8_t> motion_payload;
  std::vector<uint8_t> residual_payload;
  FrameStats stats;
};

// What a decoder needs besides the payloads.
struct StreamParams {
  int width = 0;
  int height = 0;
  bool chroma = false;
  int qp = 24;
  bool scaling = true;
};

struct IntraResult {
  EncodedFrame frame;
  Frame rec;
};

IntraResult EncodeFrameIntra(const Frame& cur, const Quantizer& q);
Frame DecodeFrameIntra(const EncodedFrame& enc, const StreamParams& params);

struct PredictedResult {
  EncodedFrame frame;
  Frame rec;
  DownsampleFactor d_out;    // d_ref for the next frame
  DownsampleFactor d_final;  // transmitted factor
};

// One low-delay P frame: factor decision on (cur, ref_rec), motion grid of
// the downscaled flow when scaling is on (scene-scale flow otherwise),
// closed-loop reconstruction from the decoded motion. A forced factor skips
// the candidate loop and codes that factor directly.
PredictedResult EncodeFramePredicted(
    const Frame& cur, const Frame& ref_rec, const AdaptConfig& config,
    const Quantizer& q, const FlowPredictor& predictor, DownsampleFactor d_ref,
    std::optional<DownsampleFactor> forced = std::nullopt);

// Decodes motion, rescales by the side-info factor when the stream uses
// scaling, warps the reference and adds the decoded residual.
Frame DecodeFramePredicted(const EncodedFrame& enc, const Frame& ref_rec,
                           const StreamParams& params);

// The scene-scale field a decoder reconstructs from a predicted frame.
FlowField DecodedSceneFlow(const EncodedFrame& enc, const StreamParams& params);

// Stateful low-delay encoder: first frame intra, every later frame P.
class Encoder {
 public:
  Encoder(const StreamParams& params, const AdaptConfig& config,
          const FlowPredictor& predictor);

  EncodedFrame Encode(const Frame& frame,
                      std::optional<DownsampleFactor> forced = std::nullopt);
  const Frame& reconstruction() const { return ref_; }

 private:
  StreamParams params_;
  AdaptConfig config_;
  const FlowPredictor& predictor_;
  Quantizer q_;
  Frame ref_;
  bool have_ref_ = false;
  DownsampleFactor d_ref_;
};

class Decoder {
 public:
  explicit Decoder(const StreamParams& params);

  Frame Decode(const EncodedFrame& frame);

 private:
  StreamParams params_;
  Frame ref_;
  bool have_ref_ = false;
};

}  // namespace mscl

#endif  // MSCL_CODEC_H_
