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

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "mscl/error.h"
#include "tests/test_util.h"

namespace mscl {
namespace {

std::vector<uint8_t> Bytes(const std::string& s) {
  return std::vector<uint8_t>(s.begin(), s.end());
}

VideoSequence RandomSequence(int w, int h, int n, bool chroma) {
  VideoSequence seq;
  for (int i = 0; i < n; ++i) {
    seq.frames.push_back(testing::RandomFrame(w, h, 10 + i, 0, 255, chroma));
  }
  return seq;
}

ErrorCode CodeOf(const std::vector<uint8_t>& bytes) {
  try {
    ReadY4m(bytes);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "input unexpectedly parsed";
  return ErrorCode::kInvalidArgument;
}

TEST(Y4mTest, ParsesHeader) {
  std::string s = "YUV4MPEG2 W352 H288 F30:1 C420jpeg\n";
  const int frame = 352 * 288 + 2 * 176 * 144;
  s += "FRAME\n" + std::string(frame, '\x10');
  const VideoSequence seq = ReadY4m(Bytes(s));
  EXPECT_EQ(seq.width(), 352);
  EXPECT_EQ(seq.height(), 288);
  EXPECT_EQ(seq.fps_num, 30);
  EXPECT_EQ(seq.fps_den, 1);
  ASSERT_EQ(seq.frames.size(), 1u);
  EXPECT_TRUE(seq.has_chroma());
  EXPECT_EQ(seq.frames[0].v().at(175, 143), 0x10);
}

TEST(Y4mTest, PlaneOrderIsYThenUThenV) {
  std::string s = "YUV4MPEG2 W4 H2 F25:1 C420\nFRAME\n";
  s += std::string(8, 'y') + "uU" + "vV";
  const VideoSequence seq = ReadY4m(Bytes(s));
  EXPECT_EQ(seq.frames[0].luma().at(3, 1), 'y');
  EXPECT_EQ(seq.frames[0].u().at(1, 0), 'U');
  EXPECT_EQ(seq.frames[0].v().at(0, 0), 'v');
  EXPECT_EQ(seq.frames[0].u().width(), 2);
}

TEST(Y4mTest, AcceptsFrameParametersAndUnknownTags) {
  std::string s = "YUV4MPEG2 W2 H2 F24000:1001 It A1:1 XYSCSS=420 C420mpeg2\n";
  s += "FRAME Ixyz\n" + std::string(6, 'a');
  s += "FRAME\n" + std::string(6, 'b');
  const VideoSequence seq = ReadY4m(Bytes(s));
  EXPECT_EQ(seq.frames.size(), 2u);
  EXPECT_EQ(seq.fps_num, 24000);
  EXPECT_EQ(seq.fps_den, 1001);
  EXPECT_EQ(seq.frames[1].luma().at(0, 0), 'b');
}

TEST(Y4mTest, MonoRoundTrip) {
  VideoSequence seq = RandomSequence(17, 9, 3, false);
  seq.fps_num = 50;
  const VideoSequence back = ReadY4m(WriteY4m(seq));
  EXPECT_EQ(back.frames, seq.frames);
  EXPECT_EQ(back.fps_num, 50);
  EXPECT_EQ(back.fps_den, 1);
  EXPECT_FALSE(back.has_chroma());
}

TEST(Y4mTest, ChromaRoundTripWithOddSize) {
  const VideoSequence seq = RandomSequence(15, 7, 2, true);
  const VideoSequence back = ReadY4m(WriteY4m(seq));
  EXPECT_EQ(back.frames, seq.frames);
  EXPECT_EQ(back.frames[0].u().width(), 8);
  EXPECT_EQ(back.frames[0].u().height(), 4);
}

TEST(Y4mTest, TruncatedFrameNamesIndex) {
  auto bytes = WriteY4m(RandomSequence(16, 16, 3, true));
  bytes.resize(bytes.size() - 10);
  try {
    ReadY4m(bytes);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncatedFrame);
    EXPECT_NE(std::string(e.what()).find("frame 2"), std::string::npos);
  }
}

TEST(Y4mTest, HeaderErrors) {
  EXPECT_EQ(CodeOf(Bytes("YUV4MPEG W2 H2\n")), ErrorCode::kBadHeader);
  EXPECT_EQ(CodeOf(Bytes("YUV4MPEG2 W2 H2 C420")), ErrorCode::kBadHeader);
  EXPECT_EQ(CodeOf(Bytes("YUV4MPEG2 H2 C420\n")), ErrorCode::kBadHeader);
  EXPECT_EQ(CodeOf(Bytes("YUV4MPEG2 W2x H2\n")), ErrorCode::kBadHeader);
  EXPECT_EQ(CodeOf(Bytes("YUV4MPEG2 W2 H2 F30\n")), ErrorCode::kBadHeader);
  EXPECT_EQ(CodeOf(Bytes("YUV4MPEG2 W2 H2 F0:1\n")), ErrorCode::kBadHeader);
  EXPECT_EQ(CodeOf(Bytes("YUV4MPEG2 W2 H2 C444\n")),
            ErrorCode::kUnsupportedColorspace);
  EXPECT_EQ(CodeOf(Bytes("YUV4MPEG2 W2 H2 C420\nFRAMX\n123456")),
            ErrorCode::kBadHeader);
  EXPECT_EQ(CodeOf(Bytes("YUV4MPEG2 W2 H2 C420\nFRAME")),
            ErrorCode::kTruncatedFrame);
}

TEST(Y4mTest, HeaderOnlyIsEmptySequence) {
  EXPECT_TRUE(ReadY4m(Bytes("YUV4MPEG2 W8 H8 F30:1 Cmono\n")).frames.empty());
  EXPECT_THROW(WriteY4m(VideoSequence{}), Error);
}

TEST(Y4mTest, WriterRejectsMixedGeometry) {
  VideoSequence seq = RandomSequence(8, 8, 2, false);
  seq.frames.push_back(testing::RandomFrame(8, 9, 1));
  EXPECT_THROW(WriteY4m(seq), Error);
}

TEST(RawVideoTest, RoundTrip) {
  const VideoSequence seq = RandomSequence(11, 6, 4, true);
  const auto raw = WriteRawVideo(seq);
  EXPECT_EQ(raw.size(), 4u * (66 + 2 * 18));
  EXPECT_EQ(ReadRawVideo(raw, 11, 6, true).frames, seq.frames);
}

TEST(RawVideoTest, PartialFrameRejected) {
  std::vector<uint8_t> raw(64 * 3 + 5);
  try {
    ReadRawVideo(raw, 8, 8, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncatedFrame);
  }
  EXPECT_THROW(ReadRawVideo(raw, 0, 8, false), Error);
}

TEST(FileIoTest, WriteThenRead) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "mscl_video_io_test.bin")
          .string();
  const std::vector<uint8_t> data = {0, 1, 2, 250, 13, 10};
  WriteFileBytes(path, data);
  EXPECT_EQ(ReadFileBytes(path), data);
  std::remove(path.c_str());
  try {
    ReadFileBytes(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace mscl
