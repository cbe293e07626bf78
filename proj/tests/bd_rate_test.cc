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
#include "mscl/bd_rate.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "mscl/error.h"
#include "tests/bd_rate_oracle.h"

namespace mscl {
namespace {

using testing::TrapezoidBd;

const std::vector<RdPoint> kAnchor = {
    {0.05, 30.1}, {0.09, 32.4}, {0.17, 34.2}, {0.31, 36.0}};
const std::vector<RdPoint> kTest = {
    {0.045, 30.6}, {0.08, 32.7}, {0.15, 34.9}, {0.29, 36.5}};

TEST(BdRateTest, IdenticalCurvesGiveZero) {
  const RdCurve c(kAnchor);
  EXPECT_NEAR(BdRate(c, c).percent, 0.0, 1e-9);
  EXPECT_NEAR(BdRate(c, c, BdInterpolation::kPolynomial).percent, 0.0, 1e-9);
}

TEST(BdRateTest, ConstantRateOffset) {
  std::vector<RdPoint> scaled = kAnchor;
  for (RdPoint& p : scaled) p.bpp *= 1.10;
  const BdRateResult r = BdRate(RdCurve(kAnchor), RdCurve(scaled));
  EXPECT_NEAR(r.percent, 10.0, 1e-9);
  EXPECT_EQ(r.overlap_low, 30.1);
  EXPECT_EQ(r.overlap_high, 36.0);
}

TEST(BdRateTest, MatchesDenseTrapezoidOracle) {
  const double oracle = TrapezoidBd(kAnchor, kTest);
  const double got = BdRate(RdCurve(kAnchor), RdCurve(kTest)).percent;
  EXPECT_NEAR(got, oracle, 0.002 * std::abs(oracle));
}

TEST(BdRateTest, MatchesReferenceValues) {
  // Reference numbers from a SciPy PCHIP / numpy polyfit computation.
  EXPECT_NEAR(BdRate(RdCurve(kAnchor), RdCurve(kTest)).percent,
              -23.65132644318525, 1e-6);
  EXPECT_NEAR(BdRate(RdCurve(kTest), RdCurve(kAnchor)).percent,
              30.978044989328012, 1e-6);
  EXPECT_NEAR(
      BdRate(RdCurve(kAnchor), RdCurve(kTest), BdInterpolation::kPolynomial)
          .percent,
      -23.300027745697317, 1e-6);
}

TEST(BdRateTest, RandomCurvesMatchOracleAndAntisymmetry) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> step(0.3, 2.5), rate(1.3, 2.2),
      shift(-0.8, 0.8);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<RdPoint> a, t;
    double bpp = 0.02, psnr = 28;
    double tb = 0.02 * rate(rng) / 1.7, tp = 28 + shift(rng);
    for (int i = 0; i < 5; ++i) {
      a.push_back({bpp, psnr});
      t.push_back({tb, tp});
      bpp *= rate(rng);
      psnr += step(rng);
      tb *= rate(rng);
      tp += step(rng);
    }
    const RdCurve ca(a), ct(t);
    BdRateResult fwd, back;
    try {
      fwd = BdRate(ca, ct);
      back = BdRate(ct, ca);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kNoOverlap);
      continue;
    }
    const double oracle = TrapezoidBd(a, t);
    EXPECT_NEAR(fwd.percent, oracle, 0.002 * std::max(1.0, std::abs(oracle)));
    EXPECT_NEAR((1 + fwd.percent / 100) * (1 + back.percent / 100), 1.0, 0.005);
  }
}

TEST(BdRateTest, UnsortedInputIsSorted) {
  std::vector<RdPoint> shuffled = {kAnchor[2], kAnchor[0], kAnchor[3],
                                   kAnchor[1]};
  const RdCurve c(shuffled);
  EXPECT_EQ(c.points().front().bpp, 0.05);
  EXPECT_EQ(c.min_psnr(), 30.1);
  EXPECT_EQ(c.max_psnr(), 36.0);
}

TEST(BdRateTest, CurveValidation) {
  try {
    RdCurve({{0.1, 30}, {0.2, 31}, {0.3, 32}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewPoints);
  }
  try {
    RdCurve({{0.1, 30}, {0.2, 33}, {0.3, 32}, {0.4, 34}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMonotoneCurve);
  }
  EXPECT_THROW(RdCurve({{0.1, 30}, {0.1, 31}, {0.3, 32}, {0.4, 34}}), Error);
}

TEST(BdRateTest, DisjointCurvesHaveNoOverlap) {
  std::vector<RdPoint> high = kAnchor;
  for (RdPoint& p : high) p.psnr += 10;
  try {
    BdRate(RdCurve(kAnchor), RdCurve(high));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoOverlap);
  }
}

TEST(IntegratePchipTest, ExactForLinearData) {
  const std::vector<double> x = {0, 1, 3, 4}, y = {1, 3, 7, 9};
  // y = 2x + 1 integrates to x^2 + x.
  EXPECT_NEAR(IntegratePchip(x, y, 0.5, 3.5), (12.25 + 3.5) - (0.25 + 0.5),
              1e-12);
}

TEST(FormatPercentTest, SignedTwoDecimals) {
  EXPECT_EQ(FormatPercent(-12.346), "-12.35");
  EXPECT_EQ(FormatPercent(3.0), "+3.00");
  EXPECT_EQ(FormatPercent(0.001), "0.00");
  EXPECT_EQ(FormatPercent(-0.004), "0.00");
}

}  // namespace
}  // namespace mscl
