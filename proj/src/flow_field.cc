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
#include "mscl/flow_field.h"

#include <cmath>
#include <string>

#include "mscl/error.h"

namespace mscl {

FlowScale FlowScale::DownScaled(double factor) {
  if (!(factor >= 1.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::kInvalidArgument,
                "downscale factor must be >= 1, got " + std::to_string(factor));
  }
  return FlowScale(true, factor);
}

FlowField::FlowField(int width, int height, FlowScale scale, double fill_u,
                     double fill_v)
    : width_(width), height_(height), scale_(scale) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "flow dimensions must be positive");
  }
  const size_t n = static_cast<size_t>(width) * height;
  u_.assign(n, fill_u);
  v_.assign(n, fill_v);
}

bool FlowField::AllFinite() const {
  for (size_t i = 0; i < u_.size(); ++i) {
    if (!std::isfinite(u_[i]) || !std::isfinite(v_[i])) return false;
  }
  return true;
}

double MeanFlowMagnitude(const FlowField& flow) {
  if (!flow.scale().is_scene()) {
    throw Error(ErrorCode::kScaleTagViolation,
                "mean magnitude needs a scene-scale field");
  }
  const auto u = flow.u_samples();
  const auto v = flow.v_samples();
  double sum = 0.0;
  for (size_t i = 0; i < u.size(); ++i)
    sum += std::sqrt(u[i] * u[i] + v[i] * v[i]);
  return sum / static_cast<double>(u.size());
}

}  // namespace mscl
