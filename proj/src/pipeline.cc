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
#include "mscl/pipeline.h"

#include "mscl/analysis.h"
#include "mscl/error.h"

namespace mscl {

std::vector<uint8_t> SequenceEncodeResult::Serialize() const {
  std::vector<FrameRecord> records;
  records.reserve(frames.size());
  for (const EncodedFrame& f : frames) records.push_back(ToRecord(f));
  return WriteStream(header, records);
}

SequenceEncodeResult EncodeSequence(const VideoSequence& seq,
                                    const EncodeOptions& options,
                                    std::span<const DownsampleFactor> forced) {
  seq.Validate();
  if (seq.frames.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot encode an empty sequence");
  }
  if (!forced.empty() && forced.size() != seq.frames.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "forced factor schedule must cover every frame");
  }
  if (seq.width() > 0xFFFF || seq.height() > 0xFFFF) {
    throw Error(ErrorCode::kInvalidArgument,
                "frame dimensions exceed the 16-bit header fields");
  }
  const AdaptConfig& config = options.config;
  config.Validate();
  options.flow.Validate();

  SequenceEncodeResult r;
  StreamHeader& h = r.header;
  h.width = static_cast<uint16_t>(seq.width());
  h.height = static_cast<uint16_t>(seq.height());
  h.frame_count = static_cast<uint32_t>(seq.frames.size());
  h.colorspace = seq.has_chroma() ? Colorspace::kYuv420 : Colorspace::kMono;
  h.qp = static_cast<uint8_t>(options.qp);
  h.adaptive = config.enable_adaptive;
  h.scaling = config.enable_scaling;
  h.bias = config.enable_bias;
  h.fps_num = static_cast<uint16_t>(seq.fps_num);
  h.fps_den = static_cast<uint16_t>(seq.fps_den);

  const BlockMatchPredictor predictor(options.flow);
  StreamParams params{seq.width(), seq.height(), seq.has_chroma(), options.qp,
                      config.enable_scaling};
  Encoder encoder(params, config, predictor);

  SequenceSummary& s = r.summary;
  double psnr_sum = 0.0, motion_sum = 0.0, pred_sum = 0.0;
  int p_frames = 0;
  for (size_t i = 0; i < seq.frames.size(); ++i) {
    std::optional<DownsampleFactor> force;
    if (!forced.empty() && i > 0) force = forced[i];
    EncodedFrame enc = encoder.Encode(seq.frames[i], force);
    const FrameStats& st = enc.stats;
    FrameReport row;
    row.index = static_cast<int>(i);
    row.type = enc.type;
    row.d = DecodeSideInfo(enc.d_index).value();
    row.stats = st;
    r.rows.push_back(row);

    s.motion_bits += st.motion_bits;
    s.residual_bits += st.residual_bits;
    s.side_bits += st.side_bits;
    s.selection_ms += st.selection_ms;
    s.coding_ms += st.coding_ms;
    psnr_sum += st.reconstruction_psnr;
    if (enc.type == FrameType::kPredicted) {
      ++p_frames;
      motion_sum += st.mean_motion;
      pred_sum += st.prediction_psnr;
    }
    r.reconstruction.push_back(encoder.reconstruction());
    r.frames.push_back(std::move(enc));
  }
  const double pixels = static_cast<double>(seq.width()) * seq.height() *
                        static_cast<double>(seq.frames.size());
  s.bpp = static_cast<double>(s.motion_bits + s.residual_bits + s.side_bits) /
          pixels;
  s.psnr = psnr_sum / static_cast<double>(seq.frames.size());
  if (p_frames > 0) {
    s.avg_motion = motion_sum / p_frames;
    s.mean_prediction_psnr = pred_sum / p_frames;
  }
  if (seq.width() >= kMinComplexityDim && seq.height() >= kMinComplexityDim) {
    double c = 0.0;
    for (const Frame& f : seq.frames) c += SceneComplexity(f);
    s.scene_complexity = c / static_cast<double>(seq.frames.size());
  }
  return r;
}

std::vector<DownsampleFactor> TransmittedFactors(
    const SequenceEncodeResult& result) {
  std::vector<DownsampleFactor> out;
  out.reserve(result.frames.size());
  for (const EncodedFrame& f : result.frames) {
    out.push_back(DecodeSideInfo(f.d_index));
  }
  return out;
}

DecodedStream DecodeStream(std::span<const uint8_t> bytes) {
  DecodedStream out;
  out.stream = ReadStream(bytes);
  const StreamHeader& h = out.stream.header;
  out.sequence.fps_num = h.fps_num;
  out.sequence.fps_den = h.fps_den;
  const StreamParams params = h.params();
  Decoder decoder(params);
  for (const FrameRecord& rec : out.stream.records) {
    const EncodedFrame enc = FromRecord(rec);
    out.mean_motion.push_back(
        enc.type == FrameType::kPredicted
            ? MeanFlowMagnitude(DecodedSceneFlow(enc, params))
            : 0.0);
    out.sequence.frames.push_back(decoder.Decode(enc));
  }
  return out;
}

std::vector<RdRow> RdSweep(const VideoSequence& seq,
                           const EncodeOptions& options,
                           std::span<const int> qps) {
  std::vector<RdRow> rows;
  for (int qp : qps) {
    EncodeOptions o = options;
    o.qp = qp;
    const SequenceEncodeResult r = EncodeSequence(seq, o);
    rows.push_back({qp, r.summary.bpp, r.summary.psnr});
  }
  return rows;
}

}  // namespace mscl
