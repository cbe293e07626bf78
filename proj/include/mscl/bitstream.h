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
#ifndef MSCL_BITSTREAM_H_
#define MSCL_BITSTREAM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mscl/codec.h"

namespace mscl {

// .mscl layout, all integers big-endian:
//   "MSCL" | version u8 | width u16 | height u16 | frame_count u32 |
//   colorspace u8 (0 mono, 1 4:2:0) | qp u8 |
//   flags u8 (bit0 adaptive, bit1 scaling, bit2 bias) | fps_num u16 |
//   fps_den u16
// followed by frame_count records:
//   frame_type u8 | side_info u8 (low 5 bits factor index) |
//   motion_len u32 | residual_len u32 | motion bytes | residual bytes
inline constexpr uint8_t kStreamVersion = 1;
inline constexpr size_t kStreamHeaderSize = 20;
inline constexpr size_t kFrameRecordHeaderSize = 10;

enum class Colorspace : uint8_t { kMono = 0, kYuv420 = 1 };

struct StreamHeader {
  uint8_t version = kStreamVersion;
  uint16_t width = 0;
  uint16_t height = 0;
  uint32_t frame_count = 0;
  Colorspace colorspace = Colorspace::kMono;
  uint8_t qp = 24;
  bool adaptive = false;
  bool scaling = false;
  bool bias = false;
  uint16_t fps_num = 30;
  uint16_t fps_den = 1;

  uint8_t flags() const;
  StreamParams params() const;
  bool operator==(const StreamHeader&) const = default;
};

struct FrameRecord {
  uint8_t frame_type = 0;
  uint8_t side_info = 0;
  std::vector<uint8_t> motion;
  std::vector<uint8_t> residual;
  bool operator==(const FrameRecord&) const = default;
};

struct ParsedStream {
  StreamHeader header;
  std::vector<FrameRecord> records;
};

// Throws kInvalidArgument for headers or records that violate the format
// (dimensions < 16, reserved bits, frame_count != records.size()).
std::vector<uint8_t> WriteStream(const StreamHeader& header,
                                 std::span<const FrameRecord> records);

// Errors: kBadMagic, kUnsupportedVersion, kTruncatedStream (message names
// the byte offset), kNonzeroReservedBits, kCorruptPayload for malformed
// fields or trailing bytes.
ParsedStream ReadStream(std::span<const uint8_t> bytes);

FrameRecord ToRecord(const EncodedFrame& frame);
EncodedFrame FromRecord(const FrameRecord& record);

}  // namespace mscl

#endif  // MSCL_BITSTREAM_H_
