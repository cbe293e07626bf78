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
#ifndef MSCL_SYNTH_H_
#define MSCL_SYNTH_H_

#include <cstdint>
#include <string>

#include "mscl/video_io.h"

namespace mscl {

enum class Texture {
  kChecker,   // two-level checkerboard with |checker_period| px squares
  kNoise,     // spatially white Gaussian texture, std |texture_sigma|
  kGradient,  // slow diagonal ramp (low texture complexity)
  kMixed,     // multi-scale value noise with flat and detailed regions
};

const char* TextureName(Texture t);
// Throws kInvalidArgument for unknown names.
Texture ParseTexture(const std::string& name);

struct SynthParams {
  int width = 320;
  int height = 192;
  int frames = 2;
  double vx = 0.0;  // px/frame
  double vy = 0.0;
  Texture texture = Texture::kMixed;
  int checker_period = 16;
  double texture_sigma = 40.0;
  double noise_sigma = 0.0;  // additive per-frame noise
  uint64_t seed = 1;
  bool chroma = false;

  void Validate() const;
};

// Frame t samples the texture at (x - t * vx, y - t * vy) bilinearly, then
// adds clipped Gaussian noise keyed on (seed, t, x, y). Identical parameters
// give bit-identical output.
VideoSequence SynthGenerate(const SynthParams& p);

// 64-bit finalizer from SplitMix64.
uint64_t SplitMix64(uint64_t x);

}  // namespace mscl

#endif  // MSCL_SYNTH_H_
