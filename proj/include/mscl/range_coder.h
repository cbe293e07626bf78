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
#ifndef MSCL_RANGE_CODER_H_
#define MSCL_RANGE_CODER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mscl {

// Adaptive probability of a zero bin, 11-bit fixed point.
class BitModel {
 public:
  static constexpr int kBits = 11;
  static constexpr uint32_t kOne = 1u << kBits;
  static constexpr int kAdaptShift = 5;

  uint32_t p0() const { return p0_; }
  void Update(int bit) {
    if (bit) {
      p0_ -= p0_ >> kAdaptShift;
    } else {
      p0_ += (kOne - p0_) >> kAdaptShift;
    }
  }

 private:
  uint32_t p0_ = kOne / 2;
};

// Binary range encoder with carry propagation through a cached byte
// (64-bit low, 32-bit range).
class RangeEncoder {
 public:
  void Encode(BitModel& model, int bit);
  // Flushes and returns the payload. The encoder is left empty.
  std::vector<uint8_t> Finish();
  size_t bins() const { return bins_; }

 private:
  void ShiftLow();

  uint64_t low_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  uint8_t cache_ = 0;
  uint64_t cache_size_ = 1;
  size_t bins_ = 0;
  std::vector<uint8_t> out_;
};

// Mirror of RangeEncoder. Throws kCorruptPayload when the payload is too
// short for the bins requested or malformed at the start.
class RangeDecoder {
 public:
  explicit RangeDecoder(std::span<const uint8_t> payload);
  int Decode(BitModel& model);
  size_t consumed() const { return pos_; }

 private:
  uint8_t NextByte();

  std::span<const uint8_t> in_;
  size_t pos_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  uint32_t code_ = 0;
};

// Signed to unsigned folding used by the Exp-Golomb binarization:
// 0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ...
inline uint32_t FoldSigned(int32_t v) {
  return v > 0 ? 2u * static_cast<uint32_t>(v) - 1u
               : 2u * static_cast<uint32_t>(-static_cast<int64_t>(v));
}
inline int32_t UnfoldSigned(uint32_t u) {
  return (u & 1u) ? static_cast<int32_t>((u + 1) / 2)
                  : -static_cast<int32_t>(u / 2);
}

// Exp-Golomb (k = 0) with every bin coded through an adaptive model chosen
// by bin position: prefix bins from |prefix|, suffix bins from |suffix|
// (positions past the end share the last model).
inline constexpr int kMaxExpGolombPrefix = 32;
void EncodeExpGolomb(RangeEncoder& enc, uint32_t value,
                     std::span<BitModel> prefix, std::span<BitModel> suffix);
uint32_t DecodeExpGolomb(RangeDecoder& dec, std::span<BitModel> prefix,
                         std::span<BitModel> suffix);

}  // namespace mscl

#endif  // MSCL_RANGE_CODER_H_
