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
#ifndef MSCL_PIPELINE_H_
#define MSCL_PIPELINE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mscl/adaptive_inference.h"
#include "mscl/bitstream.h"
#include "mscl/codec.h"
#include "mscl/flow_predictor.h"
#include "mscl/video_io.h"

namespace mscl {

struct EncodeOptions {
  int qp = 24;
  AdaptConfig config;
  BlockMatchParams flow;
};

struct FrameReport {
  int index = 0;
  FrameType type = FrameType::kIntra;
  double d = 1.0;
  FrameStats stats;
};

struct SequenceSummary {
  double bpp = 0.0;
  double psnr = 0.0;        // mean per-frame luma PSNR
  double avg_motion = 0.0;  // mean decoded scene-scale motion over P frames
  double scene_complexity = 0.0;  // 0 when frames are below 64x64
  int64_t motion_bits = 0;
  int64_t residual_bits = 0;
  int64_t side_bits = 0;
  double mean_prediction_psnr = 0.0;  // over P frames
  double selection_ms = 0.0;
  double coding_ms = 0.0;
};

struct SequenceEncodeResult {
  StreamHeader header;
  std::vector<EncodedFrame> frames;
  std::vector<Frame> reconstruction;
  std::vector<FrameReport> rows;
  SequenceSummary summary;

  std::vector<uint8_t> Serialize() const;
};

// Encodes every frame: the first intra, the rest P. |forced|, when not
// empty, gives the factor of every frame (entry 0 is ignored) and bypasses
// the factor search, which makes paired comparisons at equal d possible.
SequenceEncodeResult EncodeSequence(
    const VideoSequence& seq, const EncodeOptions& options,
    std::span<const DownsampleFactor> forced = {});

// Per-frame factors actually transmitted by an encode.
std::vector<DownsampleFactor> TransmittedFactors(
    const SequenceEncodeResult& result);

struct DecodedStream {
  ParsedStream stream;
  VideoSequence sequence;
  // Decoded scene-scale mean motion per frame (0 for intra).
  std::vector<double> mean_motion;
};

DecodedStream DecodeStream(std::span<const uint8_t> bytes);

struct RdRow {
  int qp = 0;
  double bpp = 0.0;
  double psnr = 0.0;
};

std::vector<RdRow> RdSweep(const VideoSequence& seq,
                           const EncodeOptions& options,
                           std::span<const int> qps);

}  // namespace mscl

#endif  // MSCL_PIPELINE_H_
