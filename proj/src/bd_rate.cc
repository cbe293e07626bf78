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
#include <array>
#include <cmath>
#include <cstdio>

#include "mscl/error.h"

namespace mscl {
namespace {

double Sign(double v) { return (v > 0) - (v < 0); }

// Fritsch-Carlson derivatives with the non-centered three-point end rule.
std::vector<double> PchipSlopes(const std::vector<double>& x,
                                const std::vector<double>& y) {
  const size_t n = x.size();
  std::vector<double> h(n - 1), delta(n - 1), m(n, 0.0);
  for (size_t k = 0; k + 1 < n; ++k) {
    h[k] = x[k + 1] - x[k];
    delta[k] = (y[k + 1] - y[k]) / h[k];
  }
  if (n == 2) {
    m[0] = m[1] = delta[0];
    return m;
  }
  for (size_t k = 1; k + 1 < n; ++k) {
    if (delta[k - 1] * delta[k] <= 0.0) continue;
    const double w1 = 2.0 * h[k] + h[k - 1];
    const double w2 = h[k] + 2.0 * h[k - 1];
    m[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
  }
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (Sign(s) != Sign(d0)) {
      s = 0.0;
    } else if (Sign(d0) != Sign(d1) && std::abs(s) > 3.0 * std::abs(d0)) {
      s = 3.0 * d0;
    }
    return s;
  };
  m[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  m[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return m;
}

// Antiderivative of a + b s + c s^2 + d s^3 at s.
double CubicPrimitive(const std::array<double, 4>& c, double s) {
  return s * (c[0] + s * (c[1] / 2.0 + s * (c[2] / 3.0 + s * c[3] / 4.0)));
}

// Least-squares cubic in the centered variable t = x - mean(x).
double IntegratePolynomial(const std::vector<double>& x,
                           const std::vector<double>& y, double lo, double hi) {
  const size_t n = x.size();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double a[4][5] = {};
  for (size_t i = 0; i < n; ++i) {
    const double t = x[i] - mean;
    double pw[7] = {1.0};
    for (int k = 1; k < 7; ++k) pw[k] = pw[k - 1] * t;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) a[r][c] += pw[r + c];
      a[r][4] += pw[r] * y[i];
    }
  }
  // Gaussian elimination with partial pivoting.
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 5; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::array<double, 4> coef;
  for (int k = 0; k < 4; ++k) coef[k] = a[k][4] / a[k][k];
  return CubicPrimitive(coef, hi - mean) - CubicPrimitive(coef, lo - mean);
}

}  // namespace

RdCurve::RdCurve(std::vector<RdPoint> points) : points_(std::move(points)) {
  if (points_.size() < 4) {
    throw Error(ErrorCode::kTooFewPoints,
                "an RD curve needs at least 4 points");
  }
  std::sort(points_.begin(), points_.end(),
            [](const RdPoint& a, const RdPoint& b) { return a.bpp < b.bpp; });
  for (size_t i = 0; i < points_.size(); ++i) {
    const RdPoint& p = points_[i];
    if (!std::isfinite(p.bpp) || !std::isfinite(p.psnr) || p.bpp <= 0.0) {
      throw Error(ErrorCode::kNonMonotoneCurve,
                  "RD points need finite positive rate and finite PSNR");
    }
    if (i > 0 &&
        (p.bpp <= points_[i - 1].bpp || p.psnr <= points_[i - 1].psnr)) {
      throw Error(ErrorCode::kNonMonotoneCurve,
                  "RD curve must increase strictly in rate and PSNR");
    }
  }
}

double IntegratePchip(const std::vector<double>& x,
                      const std::vector<double>& y, double lo, double hi) {
  const std::vector<double> m = PchipSlopes(x, y);
  double total = 0.0;
  for (size_t k = 0; k + 1 < x.size(); ++k) {
    const double a = std::max(lo, x[k]);
    const double b = std::min(hi, x[k + 1]);
    if (b <= a) continue;
    const double h = x[k + 1] - x[k];
    const double delta = (y[k + 1] - y[k]) / h;
    const std::array<double, 4> c = {y[k], m[k],
                                     (3.0 * delta - 2.0 * m[k] - m[k + 1]) / h,
                                     (m[k] + m[k + 1] - 2.0 * delta) / (h * h)};
    total += CubicPrimitive(c, b - x[k]) - CubicPrimitive(c, a - x[k]);
  }
  return total;
}

BdRateResult BdRate(const RdCurve& anchor, const RdCurve& test,
                    BdInterpolation mode) {
  BdRateResult r;
  r.overlap_low = std::max(anchor.min_psnr(), test.min_psnr());
  r.overlap_high = std::min(anchor.max_psnr(), test.max_psnr());
  if (!(r.overlap_high > r.overlap_low)) {
    throw Error(ErrorCode::kNoOverlap, "RD curves share no PSNR range");
  }
  auto integral = [&](const RdCurve& c) {
    std::vector<double> x, y;
    for (const RdPoint& p : c.points()) {
      x.push_back(p.psnr);
      y.push_back(std::log10(p.bpp));
    }
    return mode == BdInterpolation::kPchip
               ? IntegratePchip(x, y, r.overlap_low, r.overlap_high)
               : IntegratePolynomial(x, y, r.overlap_low, r.overlap_high);
  };
  const double avg =
      (integral(test) - integral(anchor)) / (r.overlap_high - r.overlap_low);
  r.percent = (std::pow(10.0, avg) - 1.0) * 100.0;
  return r;
}

std::string FormatPercent(double percent) {
  if (std::abs(percent) < 0.005) return "0.00";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%+.2f", percent);
  return buf;
}

}  // namespace mscl
