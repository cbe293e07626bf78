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
#ifndef MSCL_DOWNSAMPLE_FACTOR_H_
#define MSCL_DOWNSAMPLE_FACTOR_H_

#include <cstdint>
#include <vector>

namespace mscl {

// One of the 32 candidate factors 1.00, 1.25, ..., 8.75, identified by a
// 5-bit index: value = 1 + 0.25 * index.
class DownsampleFactor {
 public:
  static constexpr int kCount = 32;
  static constexpr double kStep = 0.25;

  constexpr DownsampleFactor() = default;
  // Throws kCodeOutOfRange unless 0 <= index < 32.
  static DownsampleFactor FromIndex(int index);
  // Throws kInvalidArgument unless value lies exactly on the factor lattice.
  static DownsampleFactor FromValue(double value);
  static constexpr DownsampleFactor Identity() { return DownsampleFactor(); }
  static std::vector<DownsampleFactor> All();

  constexpr int index() const { return index_; }
  constexpr double value() const { return 1.0 + kStep * index_; }
  constexpr bool is_identity() const { return index_ == 0; }

  constexpr auto operator<=>(const DownsampleFactor&) const = default;

 private:
  constexpr explicit DownsampleFactor(int index) : index_(index) {}

  int index_ = 0;
};

// 5-bit side information carried per predicted frame.
uint8_t EncodeSideInfo(DownsampleFactor d);
// Throws kCodeOutOfRange for code >= 32.
DownsampleFactor DecodeSideInfo(unsigned code);

}  // namespace mscl

#endif  // MSCL_DOWNSAMPLE_FACTOR_H_
