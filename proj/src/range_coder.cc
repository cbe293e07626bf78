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
#include "mscl/range_coder.h"

#include <algorithm>
#include <string>

#include "mscl/error.h"

namespace mscl {
namespace {

constexpr uint32_t kTop = 1u << 24;

BitModel& ModelAt(std::span<BitModel> models, int pos) {
  return models[std::min<size_t>(pos, models.size() - 1)];
}

}  // namespace

void RangeEncoder::ShiftLow() {
  if (static_cast<uint32_t>(low_) < 0xFF000000u || (low_ >> 32) != 0) {
    const uint8_t carry = static_cast<uint8_t>(low_ >> 32);
    uint8_t temp = cache_;
    do {
      out_.push_back(static_cast<uint8_t>(temp + carry));
      temp = 0xFF;
    } while (--cache_size_ != 0);
    cache_ = static_cast<uint8_t>(low_ >> 24);
  }
  ++cache_size_;
  low_ = (low_ & 0x00FFFFFFu) << 8;
}

void RangeEncoder::Encode(BitModel& model, int bit) {
  ++bins_;
  const uint32_t bound = (range_ >> BitModel::kBits) * model.p0();
  if (bit == 0) {
    range_ = bound;
  } else {
    low_ += bound;
    range_ -= bound;
  }
  model.Update(bit);
  while (range_ < kTop) {
    range_ <<= 8;
    ShiftLow();
  }
}

std::vector<uint8_t> RangeEncoder::Finish() {
  for (int i = 0; i < 5; ++i) ShiftLow();
  std::vector<uint8_t> out = std::move(out_);
  *this = RangeEncoder();
  return out;
}

RangeDecoder::RangeDecoder(std::span<const uint8_t> payload) : in_(payload) {
  if (in_.size() < 5) {
    throw Error(ErrorCode::kCorruptPayload,
                "range-coded payload shorter than 5 bytes");
  }
  if (in_[0] != 0) {
    throw Error(ErrorCode::kCorruptPayload, "range coder lead byte not zero");
  }
  pos_ = 1;
  for (int i = 0; i < 4; ++i) code_ = (code_ << 8) | in_[pos_++];
}

uint8_t RangeDecoder::NextByte() {
  if (pos_ >= in_.size()) {
    throw Error(
        ErrorCode::kCorruptPayload,
        "range decoder ran past payload end at byte " + std::to_string(pos_));
  }
  return in_[pos_++];
}

int RangeDecoder::Decode(BitModel& model) {
  const uint32_t bound = (range_ >> BitModel::kBits) * model.p0();
  int bit;
  if (code_ < bound) {
    range_ = bound;
    bit = 0;
  } else {
    code_ -= bound;
    range_ -= bound;
    bit = 1;
  }
  model.Update(bit);
  while (range_ < kTop) {
    range_ <<= 8;
    code_ = (code_ << 8) | NextByte();
  }
  return bit;
}

void EncodeExpGolomb(RangeEncoder& enc, uint32_t value,
                     std::span<BitModel> prefix, std::span<BitModel> suffix) {
  const uint64_t v1 = static_cast<uint64_t>(value) + 1;
  int n = 0;
  while ((v1 >> (n + 1)) != 0) ++n;
  for (int i = 0; i < n; ++i) enc.Encode(ModelAt(prefix, i), 1);
  enc.Encode(ModelAt(prefix, n), 0);
  for (int i = n - 1; i >= 0; --i) {
    enc.Encode(ModelAt(suffix, n - 1 - i), static_cast<int>((v1 >> i) & 1));
  }
}

uint32_t DecodeExpGolomb(RangeDecoder& dec, std::span<BitModel> prefix,
                         std::span<BitModel> suffix) {
  int n = 0;
  while (dec.Decode(ModelAt(prefix, n)) == 1) {
    if (++n > kMaxExpGolombPrefix) {
      throw Error(ErrorCode::kCorruptPayload, "Exp-Golomb prefix too long");
    }
  }
  uint64_t v1 = 1;
  for (int i = 0; i < n; ++i) {
    v1 = (v1 << 1) | static_cast<uint64_t>(dec.Decode(ModelAt(suffix, i)));
  }
  const uint64_t value = v1 - 1;
  if (value > 0xFFFFFFFFull) {
    throw Error(ErrorCode::kCorruptPayload, "Exp-Golomb value overflow");
  }
  return static_cast<uint32_t>(value);
}

}  // namespace mscl
