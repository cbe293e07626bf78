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
#include "mscl/bitstream.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "mscl/error.h"

namespace mscl {
namespace {

constexpr char kMagic[4] = {'M', 'S', 'C', 'L'};
constexpr uint8_t kKnownFlags = 0x07;
constexpr uint8_t kSideInfoReserved = 0xE0;

void PutU8(std::vector<uint8_t>& out, uint8_t v) { out.push_back(v); }
void PutU16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}
void PutU32(std::vector<uint8_t>& out, uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<uint8_t>(v >> s));
}

class Reader {
 public:
  explicit Reader(std::span<const uint8_t> in) : in_(in) {}

  size_t offset() const { return pos_; }
  size_t remaining() const { return in_.size() - pos_; }

  void Need(size_t n, const char* what) const {
    if (remaining() < n) {
      throw Error(ErrorCode::kTruncatedStream,
                  std::string(what) + " truncated at byte offset " +
                      std::to_string(in_.size()) + " (needed " +
                      std::to_string(n) + " bytes at offset " +
                      std::to_string(pos_) + ")");
    }
  }
  uint8_t U8(const char* what) {
    Need(1, what);
    return in_[pos_++];
  }
  uint16_t U16(const char* what) {
    Need(2, what);
    const uint16_t v = static_cast<uint16_t>((in_[pos_] << 8) | in_[pos_ + 1]);
    pos_ += 2;
    return v;
  }
  uint32_t U32(const char* what) {
    Need(4, what);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | in_[pos_ + i];
    pos_ += 4;
    return v;
  }
  std::vector<uint8_t> Bytes(size_t n, const char* what) {
    Need(n, what);
    std::vector<uint8_t> v(in_.begin() + pos_, in_.begin() + pos_ + n);
    pos_ += n;
    return v;
  }

 private:
  std::span<const uint8_t> in_;
  size_t pos_ = 0;
};

void ValidateHeader(const StreamHeader& h) {
  if (h.version != kStreamVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "stream version " + std::to_string(h.version));
  }
  if (h.width < 16 || h.height < 16) {
    throw Error(ErrorCode::kInvalidArgument,
                "stream dimensions must be at least 16x16");
  }
  if (h.qp < 1) throw Error(ErrorCode::kInvalidArgument, "qp must be >= 1");
  if (h.fps_num == 0 || h.fps_den == 0) {
    throw Error(ErrorCode::kInvalidArgument, "frame rate must be nonzero");
  }
}

}  // namespace

uint8_t StreamHeader::flags() const {
  return static_cast<uint8_t>((adaptive ? 1 : 0) | (scaling ? 2 : 0) |
                              (bias ? 4 : 0));
}

StreamParams StreamHeader::params() const {
  return StreamParams{width, height, colorspace == Colorspace::kYuv420, qp,
                      scaling};
}

std::vector<uint8_t> WriteStream(const StreamHeader& header,
                                 std::span<const FrameRecord> records) {
  ValidateHeader(header);
  if (header.frame_count != records.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "frame_count does not match record count");
  }
  std::vector<uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  PutU8(out, header.version);
  PutU16(out, header.width);
  PutU16(out, header.height);
  PutU32(out, header.frame_count);
  PutU8(out, static_cast<uint8_t>(header.colorspace));
  PutU8(out, header.qp);
  PutU8(out, header.flags());
  PutU16(out, header.fps_num);
  PutU16(out, header.fps_den);
  for (const FrameRecord& r : records) {
    if (r.frame_type > 1) {
      throw Error(ErrorCode::kInvalidArgument, "unknown frame type");
    }
    if (r.side_info & kSideInfoReserved) {
      throw Error(ErrorCode::kNonzeroReservedBits,
                  "side info reserved bits must be zero");
    }
    PutU8(out, r.frame_type);
    PutU8(out, r.side_info);
    PutU32(out, static_cast<uint32_t>(r.motion.size()));
    PutU32(out, static_cast<uint32_t>(r.residual.size()));
    out.insert(out.end(), r.motion.begin(), r.motion.end());
    out.insert(out.end(), r.residual.begin(), r.residual.end());
  }
  return out;
}

ParsedStream ReadStream(std::span<const uint8_t> bytes) {
  Reader rd(bytes);
  rd.Need(4, "magic");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw Error(ErrorCode::kBadMagic, "stream does not start with MSCL");
  }
  rd.Bytes(4, "magic");
  ParsedStream s;
  StreamHeader& h = s.header;
  h.version = rd.U8("header");
  if (h.version != kStreamVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "stream version " + std::to_string(h.version));
  }
  h.width = rd.U16("header");
  h.height = rd.U16("header");
  h.frame_count = rd.U32("header");
  const uint8_t cs = rd.U8("header");
  if (cs > 1) {
    throw Error(ErrorCode::kCorruptPayload,
                "unknown colorspace " + std::to_string(cs));
  }
  h.colorspace = static_cast<Colorspace>(cs);
  h.qp = rd.U8("header");
  const uint8_t flags = rd.U8("header");
  if (flags & ~kKnownFlags) {
    throw Error(ErrorCode::kNonzeroReservedBits, "unknown header flag bits");
  }
  h.adaptive = flags & 1;
  h.scaling = flags & 2;
  h.bias = flags & 4;
  h.fps_num = rd.U16("header");
  h.fps_den = rd.U16("header");
  try {
    ValidateHeader(h);
  } catch (const Error& e) {
    throw Error(ErrorCode::kCorruptPayload, e.what());
  }

  for (uint32_t i = 0; i < h.frame_count; ++i) {
    const std::string where = "frame " + std::to_string(i);
    // Bound the reservation by what the input could possibly hold.
    if (s.records.empty()) {
      s.records.reserve(std::min<size_t>(
          h.frame_count, rd.remaining() / kFrameRecordHeaderSize));
    }
    FrameRecord r;
    r.frame_type = rd.U8(where.c_str());
    if (r.frame_type > 1) {
      throw Error(ErrorCode::kCorruptPayload,
                  where + ": unknown frame type at offset " +
                      std::to_string(rd.offset() - 1));
    }
    r.side_info = rd.U8(where.c_str());
    if (r.side_info & kSideInfoReserved) {
      throw Error(ErrorCode::kNonzeroReservedBits,
                  where + ": side info byte has reserved bits set");
    }
    const uint32_t motion_len = rd.U32(where.c_str());
    const uint32_t residual_len = rd.U32(where.c_str());
    r.motion = rd.Bytes(motion_len, (where + " motion payload").c_str());
    r.residual = rd.Bytes(residual_len, (where + " residual payload").c_str());
    s.records.push_back(std::move(r));
  }
  if (rd.remaining() != 0) {
    throw Error(ErrorCode::kCorruptPayload,
                std::to_string(rd.remaining()) +
                    " trailing bytes after last frame at offset " +
                    std::to_string(rd.offset()));
  }
  return s;
}

FrameRecord ToRecord(const EncodedFrame& frame) {
  FrameRecord r;
  r.frame_type = static_cast<uint8_t>(frame.type);
  r.side_info = frame.d_index;
  r.motion = frame.motion_payload;
  r.residual = frame.residual_payload;
  return r;
}

EncodedFrame FromRecord(const FrameRecord& record) {
  EncodedFrame f;
  f.type = static_cast<FrameType>(record.frame_type);
  f.d_index = record.side_info & 0x1F;
  f.motion_payload = record.motion;
  f.residual_payload = record.residual;
  f.stats.motion_bits = static_cast<int64_t>(record.motion.size()) * 8;
  f.stats.residual_bits = static_cast<int64_t>(record.residual.size()) * 8;
  return f;
}

}  // namespace mscl
