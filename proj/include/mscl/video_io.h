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
#ifndef MSCL_VIDEO_IO_H_
#define MSCL_VIDEO_IO_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mscl/frame.h"

namespace mscl {

struct VideoSequence {
  std::vector<Frame> frames;
  int fps_num = 30;
  int fps_den = 1;

  int width() const { return frames.empty() ? 0 : frames.front().width(); }
  int height() const { return frames.empty() ? 0 : frames.front().height(); }
  bool has_chroma() const {
    return !frames.empty() && frames.front().has_chroma();
  }
  // Throws kDimensionMismatch if frames disagree in size or colorspace.
  void Validate() const;
};

// YUV4MPEG2 with C420, C420jpeg, C420mpeg2, C420paldv or Cmono (default
// 4:2:0 when no C tag is present). Errors: kBadHeader,
// kUnsupportedColorspace, kTruncatedFrame (message names the frame index).
VideoSequence ReadY4m(std::span<const uint8_t> bytes);
// Writes C420jpeg for 4:2:0 sequences and Cmono otherwise.
std::vector<uint8_t> WriteY4m(const VideoSequence& seq);

// Headerless planar 8-bit video; |chroma| selects 4:2:0 over mono.
VideoSequence ReadRawVideo(std::span<const uint8_t> bytes, int width,
                           int height, bool chroma);
std::vector<uint8_t> WriteRawVideo(const VideoSequence& seq);

std::vector<uint8_t> ReadFileBytes(const std::string& path);
void WriteFileBytes(const std::string& path, std::span<const uint8_t> bytes);

}  // namespace mscl

#endif  // MSCL_VIDEO_IO_H_
