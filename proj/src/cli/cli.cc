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
#include "mscl/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "mscl/analysis.h"
#include "mscl/bd_rate.h"
#include "mscl/error.h"
#include "mscl/pipeline.h"
#include "mscl/synth.h"
#include "mscl/video_io.h"

namespace mscl {
namespace {

struct InputFlags {
  std::string input;
  std::string raw_size;  // WxH; empty means Y4M input
  std::string raw_format = "420";
};

struct CodecFlags {
  int qp = 24;
  std::string adaptive = "on";
  std::string scaling = "on";
  std::string bias = "on";
  int flow_range = 8;
  int block_size = 8;
  int pyramid_levels = 1;
  bool half_pel = false;
  std::string factors;
  double threshold = 5.0;
  double bias_margin = 0.1;
  int threads = 1;
};

struct EncodeFlags {
  InputFlags in;
  CodecFlags codec;
  std::string output;
  std::string report;
  bool timing = false;
};

struct DecodeFlags {
  std::string input;
  std::string output;
  std::string reference;
  std::string report;
};

struct AnalyzeFlags {
  InputFlags in;
  CodecFlags codec;
  std::string report;
  std::string histogram;
  double bin_width = 1.0;
  int bins = 64;
};

struct BdrateFlags {
  std::string anchor;
  std::string test;
  std::string interp = "pchip";
};

struct RdFlags {
  InputFlags in;
  CodecFlags codec;
  std::string qps = "12,24,48,96";
  std::string out;
};

struct SynthFlags {
  std::string size = "320x192";
  int frames = 2;
  std::string motion = "0,0";
  std::string texture = "mixed";
  int checker_period = 16;
  double texture_sigma = 40.0;
  double noise = 0.0;
  uint64_t seed = 1;
  bool chroma = false;
  std::string fps = "30:1";
  std::string output;
};

Error BadFlag(const std::string& message) {
  return Error(ErrorCode::kInvalidArgument, message);
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t end = s.find(sep, start);
    parts.push_back(s.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
T ParseNumber(std::string_view text, const std::string& what) {
  const std::string_view s = Trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw BadFlag("bad " + what + " '" + std::string(text) + "'");
  }
  return value;
}

template <typename T>
std::vector<T> ParseList(const std::string& text, const std::string& what) {
  std::vector<T> out;
  for (std::string_view part : Split(text, ',')) {
    out.push_back(ParseNumber<T>(part, what));
  }
  return out;
}

std::pair<int, int> ParseSize(const std::string& text) {
  const auto parts = Split(text, 'x');
  if (parts.size() != 2) throw BadFlag("size must be WxH, got '" + text + "'");
  const int w = ParseNumber<int>(parts[0], "width");
  const int h = ParseNumber<int>(parts[1], "height");
  if (w <= 0 || h <= 0) throw BadFlag("size must be positive");
  return {w, h};
}

bool OnOff(const std::string& v) { return v == "on"; }

VideoSequence LoadVideo(const InputFlags& in) {
  const std::vector<uint8_t> bytes = ReadFileBytes(in.input);
  if (in.raw_size.empty()) return ReadY4m(bytes);
  const auto [w, h] = ParseSize(in.raw_size);
  return ReadRawVideo(bytes, w, h, in.raw_format == "420");
}

EncodeOptions BuildOptions(const CodecFlags& f) {
  EncodeOptions o;
  o.qp = f.qp;
  AdaptConfig& c = o.config;
  c.enable_adaptive = OnOff(f.adaptive);
  c.enable_scaling = c.enable_adaptive && OnOff(f.scaling);
  c.enable_bias = c.enable_adaptive && OnOff(f.bias);
  c.motion_threshold = f.threshold;
  c.bias_margin = f.bias_margin;
  c.threads = f.threads;
  if (!f.factors.empty()) {
    std::vector<double> values = ParseList<double>(f.factors, "factor");
    std::sort(values.begin(), values.end());
    c.factors.clear();
    for (double v : values) c.factors.push_back(DownsampleFactor::FromValue(v));
  }
  c.Validate();
  o.flow.search_radius = f.flow_range;
  o.flow.block_size = f.block_size;
  o.flow.pyramid_levels = f.pyramid_levels;
  o.flow.use_half_pel = f.half_pel;
  o.flow.Validate();
  return o;
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

void WriteText(const std::string& path, const std::string& text) {
  WriteFileBytes(path, std::span(reinterpret_cast<const uint8_t*>(text.data()),
                                 text.size()));
}

void AddInputFlags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--input", f.input, "Input video (Y4M unless --raw-size)")
      ->required();
  cmd->add_option("--raw-size", f.raw_size, "Treat input as raw planar WxH");
  cmd->add_option("--raw-format", f.raw_format, "Raw layout")
      ->check(CLI::IsMember({"420", "mono"}));
}

void AddCodecFlags(CLI::App* cmd, CodecFlags& f) {
  const auto on_off = CLI::IsMember({"on", "off"});
  cmd->add_option("--qp", f.qp, "Quantizer parameter (1-255)")
      ->check(CLI::Range(1, 255));
  cmd->add_option("--adaptive", f.adaptive, "Adaptive downsampling")
      ->check(on_off);
  cmd->add_option("--scaling", f.scaling, "Code the down-scaled flow")
      ->check(on_off);
  cmd->add_option("--bias", f.bias, "Factor hysteresis")->check(on_off);
  cmd->add_option("--flow-range", f.flow_range, "Block search radius (px)")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--block-size", f.block_size, "Flow estimator block size");
  cmd->add_option("--pyramid-levels", f.pyramid_levels,
                  "Flow estimator pyramid levels");
  cmd->add_flag("--half-pel", f.half_pel, "Half-pel flow refinement");
  cmd->add_option("--factors", f.factors, "Candidate factors, e.g. 1,2,4");
  cmd->add_option("--threshold", f.threshold, "Motion threshold (px)");
  cmd->add_option("--bias-margin", f.bias_margin, "Hysteresis margin (dB)");
  cmd->add_option("--threads", f.threads, "Candidate search workers")
      ->check(CLI::Range(0, 256));
}

int RunEncode(const EncodeFlags& f, std::ostream& out) {
  const EncodeOptions options = BuildOptions(f.codec);
  const VideoSequence seq = LoadVideo(f.in);
  const SequenceEncodeResult r = EncodeSequence(seq, options);
  WriteFileBytes(f.output, r.Serialize());
  if (!f.report.empty()) {
    std::ostringstream csv;
    csv << "frame_idx,frame_type,d_value,d_pre_threshold,motion_bits,"
           "residual_bits,side_bits,prediction_psnr,reconstruction_psnr,"
           "mean_motion,estimated_motion";
    if (f.timing) csv << ",selection_ms,coding_ms";
    csv << "\n";
    for (const FrameReport& row : r.rows) {
      const FrameStats& s = row.stats;
      const bool intra = row.type == FrameType::kIntra;
      csv << row.index << "," << (intra ? "I" : "P") << "," << Fixed(row.d, 2)
          << "," << Fixed(s.d_pre_threshold, 2) << "," << s.motion_bits << ","
          << s.residual_bits << "," << s.side_bits << ","
          << (intra ? "" : Fixed(s.prediction_psnr, 6)) << ","
          << Fixed(s.reconstruction_psnr, 6) << "," << Fixed(s.mean_motion, 4)
          << "," << Fixed(s.estimated_motion, 4);
      if (f.timing) {
        csv << "," << Fixed(s.selection_ms, 3) << "," << Fixed(s.coding_ms, 3);
      }
      csv << "\n";
    }
    WriteText(f.report, csv.str());
  }
  const SequenceSummary& s = r.summary;
  out << "bpp=" << Fixed(s.bpp, 8) << " psnr=" << Fixed(s.psnr, 10)
      << " avg_motion=" << Fixed(s.avg_motion, 4)
      << " scene_complexity=" << Fixed(s.scene_complexity, 4) << "\n";
  if (f.timing) {
    out << "selection_ms=" << Fixed(s.selection_ms, 3)
        << " coding_ms=" << Fixed(s.coding_ms, 3) << "\n";
  }
  return kExitOk;
}

int RunDecode(const DecodeFlags& f, std::ostream& out) {
  const DecodedStream d = DecodeStream(ReadFileBytes(f.input));
  WriteFileBytes(f.output, WriteY4m(d.sequence));
  if (!f.report.empty()) {
    std::ostringstream csv;
    csv << "frame_idx,frame_type,d_value,mean_motion\n";
    for (size_t i = 0; i < d.stream.records.size(); ++i) {
      const FrameRecord& rec = d.stream.records[i];
      csv << i << "," << (rec.frame_type == 0 ? "I" : "P") << ","
          << Fixed(DecodeSideInfo(rec.side_info).value(), 2) << ","
          << Fixed(d.mean_motion[i], 4) << "\n";
    }
    WriteText(f.report, csv.str());
  }
  out << "frames=" << d.sequence.frames.size();
  if (!f.reference.empty()) {
    const VideoSequence ref = ReadY4m(ReadFileBytes(f.reference));
    if (ref.frames.size() != d.sequence.frames.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "reference frame count differs from the stream");
    }
    double sum = 0.0;
    for (size_t i = 0; i < ref.frames.size(); ++i) {
      sum += Psnr(ref.frames[i], d.sequence.frames[i]).value;
    }
    out << " psnr=" << Fixed(sum / ref.frames.size(), 10);
  }
  out << "\n";
  return kExitOk;
}

int RunAnalyze(const AnalyzeFlags& f, std::ostream& out) {
  const EncodeOptions options = BuildOptions(f.codec);
  const VideoSequence seq = LoadVideo(f.in);
  const BlockMatchPredictor predictor(options.flow);
  const SequenceStats s = SequenceMotionStats(seq, predictor, options.config);
  if (!f.report.empty()) {
    std::ostringstream csv;
    csv << "frame_idx,scene_complexity,motion_adaptive,motion_direct,argmax_"
           "d\n";
    for (size_t i = 0; i < seq.frames.size(); ++i) {
      csv << i << "," << Fixed(s.per_frame_complexity[i], 4);
      if (i == 0) {
        csv << ",,,";
      } else {
        csv << "," << Fixed(s.per_frame_motion[i - 1], 4) << ","
            << Fixed(s.per_frame_motion_direct[i - 1], 4) << ","
            << Fixed(s.per_frame_argmax_d[i - 1], 2);
      }
      csv << "\n";
    }
    WriteText(f.report, csv.str());
  }
  if (!f.histogram.empty()) {
    MotionHistogram hist(f.bin_width, f.bins);
    for (double m : s.per_frame_motion) hist.Add(m);
    std::ostringstream csv;
    csv << "bin_low,bin_high,count\n";
    for (int b = 0; b < hist.bins(); ++b) {
      csv << Fixed(b * f.bin_width, 4) << ","
          << (b + 1 == hist.bins() ? std::string("inf")
                                   : Fixed((b + 1) * f.bin_width, 4))
          << "," << hist.counts()[b] << "\n";
    }
    WriteText(f.histogram, csv.str());
  }
  out << "avg_motion=" << Fixed(s.avg_motion_magnitude, 4)
      << " avg_motion_direct=" << Fixed(s.avg_motion_direct, 4)
      << " scene_complexity=" << Fixed(s.scene_complexity, 4) << "\n";
  return kExitOk;
}

std::vector<RdPoint> ReadRdCsv(const std::string& path) {
  const std::vector<uint8_t> bytes = ReadFileBytes(path);
  const std::string text(bytes.begin(), bytes.end());
  std::vector<std::string_view> lines = Split(text, '\n');
  while (!lines.empty() && Trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw BadFlag(path + ": empty CSV");
  const auto header = Split(Trim(lines[0]), ',');
  int bpp_col = -1, psnr_col = -1;
  for (size_t i = 0; i < header.size(); ++i) {
    if (Trim(header[i]) == "bpp") bpp_col = static_cast<int>(i);
    if (Trim(header[i]) == "psnr") psnr_col = static_cast<int>(i);
  }
  if (bpp_col < 0 || psnr_col < 0) {
    throw BadFlag(path + ": CSV needs bpp and psnr columns");
  }
  std::vector<RdPoint> points;
  for (size_t l = 1; l < lines.size(); ++l) {
    const auto cells = Split(Trim(lines[l]), ',');
    if (cells.size() != header.size()) {
      throw BadFlag(path + ": row " + std::to_string(l) + " has " +
                    std::to_string(cells.size()) + " cells");
    }
    points.push_back({ParseNumber<double>(cells[bpp_col], "bpp"),
                      ParseNumber<double>(cells[psnr_col], "psnr")});
  }
  return points;
}

int RunBdrate(const BdrateFlags& f, std::ostream& out) {
  const RdCurve anchor(ReadRdCsv(f.anchor));
  const RdCurve test(ReadRdCsv(f.test));
  const BdInterpolation mode = f.interp == "poly" ? BdInterpolation::kPolynomial
                                                  : BdInterpolation::kPchip;
  out << FormatPercent(BdRate(anchor, test, mode).percent) << "\n";
  return kExitOk;
}

int RunRd(const RdFlags& f, std::ostream& out) {
  const EncodeOptions options = BuildOptions(f.codec);
  const std::vector<int> qps = ParseList<int>(f.qps, "qp");
  for (int qp : qps) {
    if (qp < Quantizer::kMinQp || qp > Quantizer::kMaxQp) {
      throw BadFlag("qp " + std::to_string(qp) + " outside [1, 255]");
    }
  }
  const VideoSequence seq = LoadVideo(f.in);
  const std::vector<RdRow> rows = RdSweep(seq, options, qps);
  std::ostringstream csv;
  csv << "qp,bpp,psnr\n";
  for (const RdRow& r : rows) {
    csv << r.qp << "," << Fixed(r.bpp, 8) << "," << Fixed(r.psnr, 6) << "\n";
  }
  WriteText(f.out, csv.str());
  out << "points=" << rows.size() << "\n";
  return kExitOk;
}

int RunSynth(const SynthFlags& f, std::ostream& out) {
  SynthParams p;
  std::tie(p.width, p.height) = ParseSize(f.size);
  p.frames = f.frames;
  const std::vector<double> v = ParseList<double>(f.motion, "motion");
  if (v.size() != 2) throw BadFlag("--motion takes vx,vy");
  p.vx = v[0];
  p.vy = v[1];
  p.texture = ParseTexture(f.texture);
  p.checker_period = f.checker_period;
  p.texture_sigma = f.texture_sigma;
  p.noise_sigma = f.noise;
  p.seed = f.seed;
  p.chroma = f.chroma;
  p.Validate();
  const auto fps = Split(f.fps, ':');
  if (fps.size() != 2) throw BadFlag("--fps takes num:den");
  VideoSequence seq = SynthGenerate(p);
  seq.fps_num = ParseNumber<int>(fps[0], "fps numerator");
  seq.fps_den = ParseNumber<int>(fps[1], "fps denominator");
  if (seq.fps_num <= 0 || seq.fps_den <= 0) throw BadFlag("fps must be > 0");
  WriteFileBytes(f.output, WriteY4m(seq));
  out << "frames=" << seq.frames.size() << " size=" << p.width << "x"
      << p.height << "\n";
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kNoOverlap:
    case ErrorCode::kTooFewPoints:
    case ErrorCode::kNonMonotoneCurve:
      return kExitUsage;
    case ErrorCode::kIo:
    case ErrorCode::kBadHeader:
    case ErrorCode::kUnsupportedColorspace:
    case ErrorCode::kTruncatedFrame:
      return kExitIo;
    default:
      return kExitCodec;
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Multi-scale adaptive flow video codec"};
  app.name("mscl");
  app.require_subcommand(1);

  EncodeFlags enc;
  CLI::App* encode = app.add_subcommand("encode", "Encode a video");
  AddInputFlags(encode, enc.in);
  AddCodecFlags(encode, enc.codec);
  encode->add_option("--output", enc.output, "Output stream")->required();
  encode->add_option("--report", enc.report, "Per-frame CSV report");
  encode->add_flag("--timing", enc.timing,
                   "Add selection and coding times to the report");

  DecodeFlags dec;
  CLI::App* decode = app.add_subcommand("decode", "Decode a stream to Y4M");
  decode->add_option("--input", dec.input, "Input stream")->required();
  decode->add_option("--output", dec.output, "Output Y4M")->required();
  decode->add_option("--reference", dec.reference,
                     "Source Y4M; prints the mean luma PSNR");
  decode->add_option("--report", dec.report, "Per-frame CSV report");

  AnalyzeFlags ana;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Motion and complexity statistics");
  AddInputFlags(analyze, ana.in);
  AddCodecFlags(analyze, ana.codec);
  analyze->add_option("--report", ana.report, "Per-frame CSV report");
  analyze->add_option("--histogram", ana.histogram, "Motion histogram CSV");
  analyze->add_option("--bin-width", ana.bin_width, "Histogram bin width (px)")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--bins", ana.bins, "Histogram bin count")
      ->check(CLI::Range(1, 100000));

  BdrateFlags bd;
  CLI::App* bdrate = app.add_subcommand("bdrate", "BD-rate of two RD curves");
  bdrate->add_option("--anchor", bd.anchor, "Anchor RD CSV")->required();
  bdrate->add_option("--test", bd.test, "Test RD CSV")->required();
  bdrate->add_option("--interp", bd.interp, "Interpolation")
      ->check(CLI::IsMember({"pchip", "poly"}));

  RdFlags rdf;
  CLI::App* rd = app.add_subcommand("rd", "Rate-distortion sweep");
  AddInputFlags(rd, rdf.in);
  AddCodecFlags(rd, rdf.codec);
  rd->add_option("--qps", rdf.qps, "Comma-separated qp list");
  rd->add_option("--out", rdf.out, "Output CSV")->required();

  SynthFlags syn;
  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic clip");
  synth->add_option("--size", syn.size, "WxH");
  synth->add_option("--frames", syn.frames, "Frame count");
  synth->add_option("--motion", syn.motion, "Velocity vx,vy in px/frame");
  synth->add_option("--texture", syn.texture, "Texture")
      ->check(CLI::IsMember({"checker", "noise", "gradient", "mixed"}));
  synth->add_option("--checker-period", syn.checker_period, "Checker square");
  synth->add_option("--texture-sigma", syn.texture_sigma, "Noise texture std");
  synth->add_option("--noise", syn.noise, "Additive noise std");
  synth->add_option("--seed", syn.seed, "Generator seed");
  synth->add_flag("--chroma", syn.chroma, "Emit 4:2:0 instead of mono");
  synth->add_option("--fps", syn.fps, "Frame rate num:den");
  synth->add_option("--output", syn.output, "Output Y4M")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (encode->parsed()) return RunEncode(enc, out);
    if (decode->parsed()) return RunDecode(dec, out);
    if (analyze->parsed()) return RunAnalyze(ana, out);
    if (bdrate->parsed()) return RunBdrate(bd, out);
    if (rd->parsed()) return RunRd(rdf, out);
    if (synth->parsed()) return RunSynth(syn, out);
  } catch (const Error& e) {
    err << "mscl: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "mscl: " << e.what() << "\n";
    return kExitCodec;
  }
  return kExitUsage;
}

}  // namespace mscl
