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
#include "mscl/video_io.h"

#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string_view>

#include "mscl/error.h"

namespace mscl {
namespace {

constexpr std::string_view kY4mMagic = "YUV4MPEG2";
constexpr std::string_view kFrameMarker = "FRAME";

int ParseInt(std::string_view s, const char* what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kBadHeader,
                std::string("bad ") + what + " value '" + std::string(s) + "'");
  }
  return v;
}

size_t FrameBytes(int width, int height, bool chroma) {
  size_t n = static_cast<size_t>(width) * height;
  if (chroma) {
    n += 2 * static_cast<size_t>(Frame::ChromaWidth(width)) *
         Frame::ChromaHeight(height);
  }
  return n;
}

void CopyInto(Plane& p, const uint8_t* src) {
  auto s = p.samples();
  std::memcpy(s.data(), src, s.size());
}

Frame FrameFromBytes(const uint8_t* src, int width, int height, bool chroma) {
  if (!chroma) {
    Frame f = Frame::Mono(width, height);
    CopyInto(f.luma(), src);
    return f;
  }
  Frame f = Frame::Yuv420(width, height);
  CopyInto(f.luma(), src);
  src += f.luma().samples().size();
  CopyInto(f.u(), src);
  src += f.u().samples().size();
  CopyInto(f.v(), src);
  return f;
}

void AppendFrame(std::vector<uint8_t>& out, const Frame& f) {
  auto put = [&](const Plane& p) {
    const auto s = p.samples();
    out.insert(out.end(), s.begin(), s.end());
  };
  put(f.luma());
  if (f.has_chroma()) {
    put(f.u());
    put(f.v());
  }
}

}  // namespace

void VideoSequence::Validate() const {
  for (const Frame& f : frames) {
    if (f.width() != width() || f.height() != height() ||
        f.has_chroma() != has_chroma()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "sequence frames differ in geometry");
    }
  }
  if (fps_num <= 0 || fps_den <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "frame rate must be positive");
  }
}

VideoSequence ReadY4m(std::span<const uint8_t> bytes) {
  const std::string_view all(reinterpret_cast<const char*>(bytes.data()),
                             bytes.size());
  const size_t eol = all.find('\n');
  if (eol == std::string_view::npos ||
      all.substr(0, kY4mMagic.size()) != kY4mMagic) {
    throw Error(ErrorCode::kBadHeader, "missing YUV4MPEG2 header line");
  }
  const std::string_view header = all.substr(0, eol);
  int width = 0, height = 0;
  VideoSequence seq;
  bool chroma = true;
  size_t pos = kY4mMagic.size();
  while (pos < header.size()) {
    while (pos < header.size() && header[pos] == ' ') ++pos;
    if (pos >= header.size()) break;
    size_t end = header.find(' ', pos);
    if (end == std::string_view::npos) end = header.size();
    const std::string_view tok = header.substr(pos, end - pos);
    pos = end;
    const std::string_view val = tok.substr(1);
    switch (tok[0]) {
      case 'W':
        width = ParseInt(val, "width");
        break;
      case 'H':
        height = ParseInt(val, "height");
        break;
      case 'F': {
        const size_t colon = val.find(':');
        if (colon == std::string_view::npos) {
          throw Error(ErrorCode::kBadHeader, "frame rate needs num:den");
        }
        seq.fps_num = ParseInt(val.substr(0, colon), "fps numerator");
        seq.fps_den = ParseInt(val.substr(colon + 1), "fps denominator");
        break;
      }
      case 'C':
        if (val == "420" || val == "420jpeg" || val == "420mpeg2" ||
            val == "420paldv") {
          chroma = true;
        } else if (val == "mono") {
          chroma = false;
        } else {
          throw Error(ErrorCode::kUnsupportedColorspace,
                      "colorspace C" + std::string(val));
        }
        break;
      default:  // I, A, X and unknown tags carry nothing we use.
        break;
    }
  }
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kBadHeader, "header lacks positive W and H");
  }
  if (seq.fps_num <= 0 || seq.fps_den <= 0) {
    throw Error(ErrorCode::kBadHeader, "frame rate must be positive");
  }

  const size_t frame_bytes = FrameBytes(width, height, chroma);
  pos = eol + 1;
  while (pos < all.size()) {
    const int index = static_cast<int>(seq.frames.size());
    if (all.substr(pos, kFrameMarker.size()) != kFrameMarker) {
      throw Error(ErrorCode::kBadHeader, "expected FRAME marker before frame " +
                                             std::to_string(index));
    }
    const size_t line_end = all.find('\n', pos);
    if (line_end == std::string_view::npos) {
      throw Error(ErrorCode::kTruncatedFrame,
                  "frame " + std::to_string(index) + " header is truncated");
    }
    pos = line_end + 1;
    if (all.size() - pos < frame_bytes) {
      throw Error(ErrorCode::kTruncatedFrame,
                  "frame " + std::to_string(index) + " has " +
                      std::to_string(all.size() - pos) + " of " +
                      std::to_string(frame_bytes) + " bytes");
    }
    seq.frames.push_back(
        FrameFromBytes(bytes.data() + pos, width, height, chroma));
    pos += frame_bytes;
  }
  return seq;
}

std::vector<uint8_t> WriteY4m(const VideoSequence& seq) {
  seq.Validate();
  if (seq.frames.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write an empty sequence");
  }
  const std::string header =
      std::string(kY4mMagic) + " W" + std::to_string(seq.width()) + " H" +
      std::to_string(seq.height()) + " F" + std::to_string(seq.fps_num) + ":" +
      std::to_string(seq.fps_den) + " Ip A1:1 " +
      (seq.has_chroma() ? "C420jpeg" : "Cmono") + "\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  for (const Frame& f : seq.frames) {
    out.insert(out.end(), kFrameMarker.begin(), kFrameMarker.end());
    out.push_back('\n');
    AppendFrame(out, f);
  }
  return out;
}

VideoSequence ReadRawVideo(std::span<const uint8_t> bytes, int width,
                           int height, bool chroma) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "raw video needs dimensions");
  }
  const size_t frame_bytes = FrameBytes(width, height, chroma);
  if (bytes.size() % frame_bytes != 0) {
    throw Error(ErrorCode::kTruncatedFrame,
                "frame " + std::to_string(bytes.size() / frame_bytes) +
                    " is truncated");
  }
  VideoSequence seq;
  for (size_t off = 0; off < bytes.size(); off += frame_bytes) {
    seq.frames.push_back(
        FrameFromBytes(bytes.data() + off, width, height, chroma));
  }
  return seq;
}

std::vector<uint8_t> WriteRawVideo(const VideoSequence& seq) {
  seq.Validate();
  std::vector<uint8_t> out;
  for (const Frame& f : seq.frames) AppendFrame(out, f);
  return out;
}

std::vector<uint8_t> ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                              std::istreambuf_iterator<char>());
}

void WriteFileBytes(const std::string& path, std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot create " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace mscl
