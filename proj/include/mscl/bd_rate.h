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
#ifndef MSCL_BD_RATE_H_
#define MSCL_BD_RATE_H_

#include <string>
#include <vector>

namespace mscl {

struct RdPoint {
  double bpp = 0.0;
  double psnr = 0.0;
};

// A rate-distortion curve sorted by rate. Construction enforces at least four
// points, strictly increasing in both rate and PSNR.
class RdCurve {
 public:
  // Throws kTooFewPoints or kNonMonotoneCurve.
  explicit RdCurve(std::vector<RdPoint> points);

  const std::vector<RdPoint>& points() const { return points_; }
  double min_psnr() const { return points_.front().psnr; }
  double max_psnr() const { return points_.back().psnr; }

 private:
  std::vector<RdPoint> points_;
};

enum class BdInterpolation {
  kPchip,       // monotone piecewise cubic (default)
  kPolynomial,  // least-squares cubic, classic Bjontegaard
};

struct BdRateResult {
  double percent = 0.0;  // negative means test needs fewer bits
  double overlap_low = 0.0;
  double overlap_high = 0.0;
};

// Average rate difference of |test| against |anchor| over their common PSNR
// range. Throws kNoOverlap when the ranges do not intersect.
BdRateResult BdRate(const RdCurve& anchor, const RdCurve& test,
                    BdInterpolation mode = BdInterpolation::kPchip);

// "%+.2f", except that values rounding to zero print as "0.00".
std::string FormatPercent(double percent);

// Integral of the monotone cubic through (x[i], y[i]) over [lo, hi], which
// must lie within [x.front(), x.back()]. Exposed for testing.
double IntegratePchip(const std::vector<double>& x,
                      const std::vector<double>& y, double lo, double hi);

}  // namespace mscl

#endif  // MSCL_BD_RATE_H_
