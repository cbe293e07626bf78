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
#ifndef MSCL_FLOW_FIELD_H_
#define MSCL_FLOW_FIELD_H_

#include <span>
#include <vector>

namespace mscl {

// Which pixel units a flow field is expressed in. Scene scale is the only tag
// that may be used for warping at full resolution.
class FlowScale {
 public:
  static FlowScale Scene() { return FlowScale(false, 1.0); }
  static FlowScale DownScaled(double factor);

  bool is_scene() const { return !downscaled_; }
  bool is_downscaled() const { return downscaled_; }
  // Only meaningful for downscaled fields.
  double factor() const { return factor_; }

  bool operator==(const FlowScale&) const = default;

 private:
  FlowScale(bool downscaled, double factor)
      : downscaled_(downscaled), factor_(factor) {}

  bool downscaled_;
  double factor_;
};

// Dense per-pixel displacement field. For a backward warp, pixel (x, y) of the
// current frame is predicted from (x + u, y + v) in the reference.
class FlowField {
 public:
  // Empty placeholder (0x0); only valid as a moved-into target.
  FlowField() = default;
  FlowField(int width, int height, FlowScale scale, double fill_u = 0.0,
            double fill_v = 0.0);

  int width() const { return width_; }
  int height() const { return height_; }
  const FlowScale& scale() const { return scale_; }
  void set_scale(FlowScale scale) { scale_ = scale; }

  double u(int x, int y) const { return u_[Index(x, y)]; }
  double v(int x, int y) const { return v_[Index(x, y)]; }
  void Set(int x, int y, double u, double v) {
    u_[Index(x, y)] = u;
    v_[Index(x, y)] = v;
  }

  std::span<const double> u_samples() const { return u_; }
  std::span<const double> v_samples() const { return v_; }
  std::span<double> u_samples() { return u_; }
  std::span<double> v_samples() { return v_; }

  bool empty() const { return u_.empty(); }
  bool AllFinite() const;

  bool operator==(const FlowField&) const = default;

 private:
  size_t Index(int x, int y) const {
    return static_cast<size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  FlowScale scale_ = FlowScale::Scene();
  std::vector<double> u_;
  std::vector<double> v_;
};

// Mean of per-pixel vector length. Requires a scene-scale field.
double MeanFlowMagnitude(const FlowField& flow);

}  // namespace mscl

#endif  // MSCL_FLOW_FIELD_H_
