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
#include "mscl/downsample_factor.h"

#include <set>

#include "gtest/gtest.h"
#include "mscl/error.h"

namespace mscl {
namespace {

TEST(DownsampleFactorTest, Endpoints) {
  EXPECT_EQ(EncodeSideInfo(DownsampleFactor::FromValue(1.0)), 0);
  EXPECT_EQ(DecodeSideInfo(0).value(), 1.0);
  EXPECT_EQ(EncodeSideInfo(DownsampleFactor::FromValue(8.75)), 31);
  EXPECT_EQ(DecodeSideInfo(31).value(), 8.75);
}

TEST(DownsampleFactorTest, ExhaustiveBijection) {
  std::set<unsigned> codes;
  std::set<double> values;
  for (unsigned code = 0; code < 32; ++code) {
    const DownsampleFactor d = DecodeSideInfo(code);
    EXPECT_EQ(d.value(), 1.0 + 0.25 * code);
    EXPECT_EQ(EncodeSideInfo(d), code);
    EXPECT_EQ(DownsampleFactor::FromValue(d.value()), d);
    EXPECT_EQ(DownsampleFactor::FromIndex(d.index()), d);
    EXPECT_LT(EncodeSideInfo(d), 1u << 5);
    codes.insert(EncodeSideInfo(d));
    values.insert(d.value());
  }
  EXPECT_EQ(codes.size(), 32u);
  EXPECT_EQ(values.size(), 32u);
  EXPECT_EQ(DownsampleFactor::All().size(), 32u);
}

TEST(DownsampleFactorTest, OutOfRangeCodes) {
  for (unsigned code : {32u, 33u, 255u, 1000u}) {
    try {
      DecodeSideInfo(code);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kCodeOutOfRange);
    }
  }
  EXPECT_THROW(DownsampleFactor::FromIndex(-1), Error);
}

TEST(DownsampleFactorTest, OffLatticeValuesRejected) {
  EXPECT_THROW(DownsampleFactor::FromValue(1.1), Error);
  EXPECT_THROW(DownsampleFactor::FromValue(9.0), Error);
  EXPECT_THROW(DownsampleFactor::FromValue(0.75), Error);
}

}  // namespace
}  // namespace mscl
