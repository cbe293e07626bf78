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
#ifndef MSCL_FRAME_H_
#define MSCL_FRAME_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mscl {

// A single 8-bit sample plane, row-major without padding.
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, uint8_t fill = 0);

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return data_.empty(); }

  uint8_t at(int x, int y) const { return data_[Index(x, y)]; }
  uint8_t& at(int x, int y) { return data_[Index(x, y)]; }
  // Clamp-to-edge read.
  uint8_t clamped(int x, int y) const;

  std::span<const uint8_t> row(int y) const {
    return {data_.data() + static_cast<size_t>(y) * width_,
            static_cast<size_t>(width_)};
  }
  std::span<uint8_t> row(int y) {
    return {data_.data() + static_cast<size_t>(y) * width_,
            static_cast<size_t>(width_)};
  }
  std::span<const uint8_t> samples() const { return data_; }
  std::span<uint8_t> samples() { return data_; }

  bool operator==(const Plane&) const = default;

 private:
  size_t Index(int x, int y) const {
    return static_cast<size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> data_;
};

// Planar picture: luma plus optional 4:2:0 chroma.
class Frame {
 public:
  Frame() = default;
  static Frame Mono(int width, int height, uint8_t fill = 0);
  static Frame Yuv420(int width, int height, uint8_t luma_fill = 0,
                      uint8_t chroma_fill = 128);
  // Takes ownership of existing planes; validates the 4:2:0 geometry.
  static Frame FromPlanes(Plane luma, std::optional<Plane> u = std::nullopt,
                          std::optional<Plane> v = std::nullopt);

  int width() const { return luma_.width(); }
  int height() const { return luma_.height(); }
  bool has_chroma() const { return u_.has_value(); }

  const Plane& luma() const { return luma_; }
  Plane& luma() { return luma_; }
  const Plane& u() const { return *u_; }
  Plane& u() { return *u_; }
  const Plane& v() const { return *v_; }
  Plane& v() { return *v_; }

  static int ChromaWidth(int width) { return (width + 1) / 2; }
  static int ChromaHeight(int height) { return (height + 1) / 2; }

  bool operator==(const Frame&) const = default;

 private:
  Plane luma_;
  std::optional<Plane> u_;
  std::optional<Plane> v_;
};

inline constexpr double kPsnrCapDb = 99.0;

struct PsnrDb {
  double value = kPsnrCapDb;
  auto operator<=>(const PsnrDb&) const = default;
};

double PlaneMse(const Plane& a, const Plane& b);
// Luma PSNR, capped at kPsnrCapDb.
PsnrDb Psnr(const Frame& a, const Frame& b);
PsnrDb PsnrFromMse(double mse);

double MeanLuma(const Frame& frame);

}  // namespace mscl

#endif  // MSCL_FRAME_H_
