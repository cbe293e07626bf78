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
#ifndef MSCL_RESIDUAL_CODING_H_
#define MSCL_RESIDUAL_CODING_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "mscl/frame.h"

namespace mscl {

// Uniform scalar quantizer for DCT coefficients, step = qp / 4.
class Quantizer {
 public:
  static constexpr int kMinQp = 1;
  static constexpr int kMaxQp = 255;

  // Throws kInvalidArgument outside [1, 255].
  explicit Quantizer(int qp);

  int qp() const { return qp_; }
  double step() const { return qp_ / 4.0; }

 private:
  int qp_;
};

// Real-valued 2D signal (prediction residual or level-shifted pixels).
struct ResidualPlane {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  ResidualPlane() = default;
  ResidualPlane(int w, int h) : width(w), height(h), values(size_t(w) * h) {}

  double at(int x, int y) const { return values[size_t(y) * width + x]; }
  double& at(int x, int y) { return values[size_t(y) * width + x]; }
};

using Block8x8 = std::array<double, 64>;

// Orthonormal 8x8 DCT-II and its inverse.
void ForwardDct8x8(const Block8x8& in, Block8x8& out);
void InverseDct8x8(const Block8x8& in, Block8x8& out);
// Zigzag scan order: kZigzag[i] is the raster index of the i-th coefficient.
extern const std::array<int, 64> kZigzag;

enum class PlaneKind { kLuma = 0, kChroma = 1 };

struct EncodedResidual {
  std::vector<uint8_t> payload;
  std::vector<ResidualPlane> reconstruction;  // one per input plane
};

// Codes each plane in sequence into one range-coded payload: edge-replicated
// to a multiple of 8, 8x8 DCT, round(c / step), zigzag, then a coded-block
// flag and per-coefficient significance, magnitude and sign bins. The
// returned reconstruction is exactly what DecodeResidual produces.
EncodedResidual EncodeResidual(std::span<const ResidualPlane> planes,
                               std::span<const PlaneKind> kinds,
                               const Quantizer& q);

struct PlaneGeometry {
  int width;
  int height;
  PlaneKind kind;
};

std::vector<ResidualPlane> DecodeResidual(std::span<const uint8_t> payload,
                                          std::span<const PlaneGeometry> planes,
                                          const Quantizer& q);

// pred + residual, rounded and clamped to [0, 255].
Plane AddResidual(const Plane& pred, const ResidualPlane& residual);
// cur - pred as reals.
ResidualPlane SubtractPlanes(const Plane& cur, const Plane& pred);

}  // namespace mscl

#endif  // MSCL_RESIDUAL_CODING_H_
