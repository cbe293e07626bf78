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
#include "mscl/residual_coding.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "mscl/error.h"
#include "mscl/range_coder.h"

namespace mscl {
namespace {

constexpr int kMagContexts = 8;
// Sanity bound on decoded levels; far above anything an 8-bit residual at
// the finest step can produce.
constexpr uint32_t kMaxLevel = 1u << 20;

struct DctMatrix {
  double c[8][8];
  DctMatrix() {
    for (int k = 0; k < 8; ++k) {
      const double alpha = k == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
      for (int n = 0; n < 8; ++n) {
        c[k][n] = alpha * std::cos(M_PI * (2 * n + 1) * k / 16.0);
      }
    }
  }
};

const DctMatrix& Dct() {
  static const DctMatrix m;
  return m;
}

struct KindContexts {
  BitModel coded_block[2];  // by whether the left block was coded
  std::array<BitModel, 64> significant;
  std::array<BitModel, 16> greater_one;
  std::array<BitModel, kMagContexts> mag_prefix;
  std::array<BitModel, kMagContexts> mag_suffix;
  BitModel sign;
};

struct ResidualContexts {
  KindContexts kind[2];
};

int32_t Quantize(double c, double step) {
  const double a = std::floor(std::abs(c) / step + 0.5);
  return static_cast<int32_t>(c < 0 ? -a : a);
}

void LoadBlock(const ResidualPlane& p, int bx, int by, Block8x8& b) {
  for (int y = 0; y < 8; ++y) {
    const int sy = std::min(by * 8 + y, p.height - 1);
    for (int x = 0; x < 8; ++x) {
      const int sx = std::min(bx * 8 + x, p.width - 1);
      b[y * 8 + x] = p.at(sx, sy);
    }
  }
}

void StoreBlock(const Block8x8& b, int bx, int by, ResidualPlane& p) {
  for (int y = 0; y < 8 && by * 8 + y < p.height; ++y) {
    for (int x = 0; x < 8 && bx * 8 + x < p.width; ++x) {
      p.at(bx * 8 + x, by * 8 + y) = b[y * 8 + x];
    }
  }
}

void Dequantize(const std::array<int32_t, 64>& levels, double step,
                ResidualPlane& out, int bx, int by) {
  Block8x8 coeffs, pixels;
  for (int i = 0; i < 64; ++i) coeffs[i] = levels[i] * step;
  InverseDct8x8(coeffs, pixels);
  StoreBlock(pixels, bx, by, out);
}

}  // namespace

const std::array<int, 64> kZigzag = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63};

Quantizer::Quantizer(int qp) : qp_(qp) {
  if (qp < kMinQp || qp > kMaxQp) {
    throw Error(ErrorCode::kInvalidArgument,
                "qp must be in [1,255], got " + std::to_string(qp));
  }
}

void ForwardDct8x8(const Block8x8& in, Block8x8& out) {
  const auto& c = Dct().c;
  double tmp[64];
  // Rows.
  for (int y = 0; y < 8; ++y) {
    for (int k = 0; k < 8; ++k) {
      double s = 0.0;
      for (int n = 0; n < 8; ++n) s += c[k][n] * in[y * 8 + n];
      tmp[y * 8 + k] = s;
    }
  }
  // Columns.
  for (int x = 0; x < 8; ++x) {
    for (int k = 0; k < 8; ++k) {
      double s = 0.0;
      for (int n = 0; n < 8; ++n) s += c[k][n] * tmp[n * 8 + x];
      out[k * 8 + x] = s;
    }
  }
}

void InverseDct8x8(const Block8x8& in, Block8x8& out) {
  const auto& c = Dct().c;
  double tmp[64];
  for (int x = 0; x < 8; ++x) {
    for (int n = 0; n < 8; ++n) {
      double s = 0.0;
      for (int k = 0; k < 8; ++k) s += c[k][n] * in[k * 8 + x];
      tmp[n * 8 + x] = s;
    }
  }
  for (int y = 0; y < 8; ++y) {
    for (int n = 0; n < 8; ++n) {
      double s = 0.0;
      for (int k = 0; k < 8; ++k) s += c[k][n] * tmp[y * 8 + k];
      out[y * 8 + n] = s;
    }
  }
}

EncodedResidual EncodeResidual(std::span<const ResidualPlane> planes,
                               std::span<const PlaneKind> kinds,
                               const Quantizer& q) {
  if (planes.size() != kinds.size()) {
    throw Error(ErrorCode::kInvalidArgument, "plane/kind count mismatch");
  }
  const double step = q.step();
  RangeEncoder enc;
  ResidualContexts ctx;
  EncodedResidual result;
  for (size_t p = 0; p < planes.size(); ++p) {
    const ResidualPlane& plane = planes[p];
    KindContexts& kc = ctx.kind[static_cast<int>(kinds[p])];
    ResidualPlane rec(plane.width, plane.height);
    const int bw = (plane.width + 7) / 8;
    const int bh = (plane.height + 7) / 8;
    for (int by = 0; by < bh; ++by) {
      int left_coded = 0;
      for (int bx = 0; bx < bw; ++bx) {
        Block8x8 pixels, coeffs;
        LoadBlock(plane, bx, by, pixels);
        ForwardDct8x8(pixels, coeffs);
        std::array<int32_t, 64> levels;
        bool any = false;
        for (int i = 0; i < 64; ++i) {
          levels[i] = Quantize(coeffs[i], step);
          any |= levels[i] != 0;
        }
        enc.Encode(kc.coded_block[left_coded], any ? 1 : 0);
        left_coded = any ? 1 : 0;
        if (!any) continue;
        for (int i = 0; i < 64; ++i) {
          const int32_t l = levels[kZigzag[i]];
          enc.Encode(kc.significant[i], l != 0 ? 1 : 0);
          if (l == 0) continue;
          const uint32_t mag = static_cast<uint32_t>(std::abs(l));
          enc.Encode(kc.greater_one[std::min(i, 15)], mag > 1 ? 1 : 0);
          if (mag > 1)
            EncodeExpGolomb(enc, mag - 2, kc.mag_prefix, kc.mag_suffix);
          enc.Encode(kc.sign, l < 0 ? 1 : 0);
        }
        Dequantize(levels, step, rec, bx, by);
      }
    }
    result.reconstruction.push_back(std::move(rec));
  }
  result.payload = enc.Finish();
  return result;
}

std::vector<ResidualPlane> DecodeResidual(std::span<const uint8_t> payload,
                                          std::span<const PlaneGeometry> planes,
                                          const Quantizer& q) {
  const double step = q.step();
  RangeDecoder dec(payload);
  ResidualContexts ctx;
  std::vector<ResidualPlane> out;
  for (const PlaneGeometry& g : planes) {
    KindContexts& kc = ctx.kind[static_cast<int>(g.kind)];
    ResidualPlane rec(g.width, g.height);
    const int bw = (g.width + 7) / 8;
    const int bh = (g.height + 7) / 8;
    for (int by = 0; by < bh; ++by) {
      int left_coded = 0;
      for (int bx = 0; bx < bw; ++bx) {
        const int coded = dec.Decode(kc.coded_block[left_coded]);
        left_coded = coded;
        if (!coded) continue;
        std::array<int32_t, 64> levels{};
        for (int i = 0; i < 64; ++i) {
          if (!dec.Decode(kc.significant[i])) continue;
          uint64_t mag = 1;
          if (dec.Decode(kc.greater_one[std::min(i, 15)])) {
            mag = 2ull + DecodeExpGolomb(dec, kc.mag_prefix, kc.mag_suffix);
            if (mag > kMaxLevel) {
              throw Error(ErrorCode::kCorruptPayload,
                          "coefficient level out of range");
            }
          }
          const int32_t l = static_cast<int32_t>(mag);
          levels[kZigzag[i]] = dec.Decode(kc.sign) ? -l : l;
        }
        Dequantize(levels, step, rec, bx, by);
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

Plane AddResidual(const Plane& pred, const ResidualPlane& residual) {
  if (pred.width() != residual.width || pred.height() != residual.height) {
    throw Error(ErrorCode::kDimensionMismatch, "residual size mismatch");
  }
  Plane out(pred.width(), pred.height());
  const auto p = pred.samples();
  auto o = out.samples();
  for (size_t i = 0; i < o.size(); ++i) {
    const double v = std::floor(p[i] + residual.values[i] + 0.5);
    o[i] = static_cast<uint8_t>(std::clamp(v, 0.0, 255.0));
  }
  return out;
}

ResidualPlane SubtractPlanes(const Plane& cur, const Plane& pred) {
  if (cur.width() != pred.width() || cur.height() != pred.height()) {
    throw Error(ErrorCode::kDimensionMismatch, "plane size mismatch");
  }
  ResidualPlane r(cur.width(), cur.height());
  const auto c = cur.samples();
  const auto p = pred.samples();
  for (size_t i = 0; i < c.size(); ++i) {
    r.values[i] = static_cast<double>(c[i]) - static_cast<double>(p[i]);
  }
  return r;
}

}  // namespace mscl
