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
#include "mscl/synth.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mscl/error.h"

namespace mscl {
namespace {

uint64_t Hash(uint64_t seed, int64_t a, int64_t b, uint64_t salt) {
  uint64_t h = SplitMix64(seed ^ (salt * 0x9E3779B97F4A7C15ull));
  h = SplitMix64(h ^ static_cast<uint64_t>(a));
  return SplitMix64(h ^ (static_cast<uint64_t>(b) * 0xD1B54A32D192ED03ull));
}

double Uniform01(uint64_t h) {
  return (static_cast<double>(h >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

// Standard normal from one hash via Box-Muller.
double Gaussian(uint64_t h) {
  const double u1 = Uniform01(h);
  const double u2 = Uniform01(SplitMix64(h));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

int64_t FloorDiv(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

double Smooth(double t) { return t * t * (3.0 - 2.0 * t); }

// Lattice value noise in [-1, 1] with cell size |cell| texels.
double ValueNoise(uint64_t seed, int64_t i, int64_t j, int cell,
                  uint64_t salt) {
  const int64_t ci = FloorDiv(i, cell);
  const int64_t cj = FloorDiv(j, cell);
  const double fx = Smooth(static_cast<double>(i - ci * cell) / cell);
  const double fy = Smooth(static_cast<double>(j - cj * cell) / cell);
  auto lattice = [&](int64_t a, int64_t b) {
    return 2.0 * Uniform01(Hash(seed, a, b, salt)) - 1.0;
  };
  const double a = lattice(ci, cj), b = lattice(ci + 1, cj);
  const double c = lattice(ci, cj + 1), d = lattice(ci + 1, cj + 1);
  const double top = a + fx * (b - a);
  const double bot = c + fx * (d - c);
  return top + fy * (bot - top);
}

double Triangle(double t) {
  const double f = t - std::floor(t);
  return f < 0.5 ? 2.0 * f : 2.0 - 2.0 * f;
}

class TextureField {
 public:
  explicit TextureField(const SynthParams& p) : p_(p) {}

  // Texture value at integer texel (i, j), unclamped.
  double Texel(int64_t i, int64_t j) const {
    switch (p_.texture) {
      case Texture::kChecker: {
        const int64_t s =
            FloorDiv(i, p_.checker_period) + FloorDiv(j, p_.checker_period);
        return (s & 1) ? 192.0 : 64.0;
      }
      case Texture::kNoise:
        return 128.0 + p_.texture_sigma * Gaussian(Hash(p_.seed, i, j, 1));
      case Texture::kGradient:
        return 32.0 + 191.0 * Triangle((0.6 * i + 0.4 * j) / 600.0);
      case Texture::kMixed: {
        const double base = 128.0 + 70.0 * ValueNoise(p_.seed, i, j, 64, 2);
        const double mask =
            std::clamp(0.5 + 1.6 * ValueNoise(p_.seed, i, j, 48, 3), 0.0, 1.0);
        const double detail = 45.0 * ValueNoise(p_.seed, i, j, 8, 4) +
                              25.0 * ValueNoise(p_.seed, i, j, 3, 5) +
                              8.0 * Gaussian(Hash(p_.seed, i, j, 6));
        return base + mask * detail;
      }
    }
    return 128.0;
  }

  // Bilinear sample at real texture coordinates.
  double Sample(double x, double y) const {
    const double fx0 = std::floor(x), fy0 = std::floor(y);
    const int64_t i = static_cast<int64_t>(fx0);
    const int64_t j = static_cast<int64_t>(fy0);
    const double fx = x - fx0, fy = y - fy0;
    const double a = Texel(i, j);
    if (fx == 0.0 && fy == 0.0) return a;
    const double b = fx == 0.0 ? a : Texel(i + 1, j);
    const double c = fy == 0.0 ? a : Texel(i, j + 1);
    const double d = (fx == 0.0) ? c : (fy == 0.0 ? b : Texel(i + 1, j + 1));
    const double top = a + fx * (b - a);
    const double bot = c + fx * (d - c);
    return top + fy * (bot - top);
  }

 private:
  const SynthParams& p_;
};

uint8_t ToSample(double v) {
  return static_cast<uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

}  // namespace

uint64_t SplitMix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

const char* TextureName(Texture t) {
  switch (t) {
    case Texture::kChecker:
      return "checker";
    case Texture::kNoise:
      return "noise";
    case Texture::kGradient:
      return "gradient";
    case Texture::kMixed:
      return "mixed";
  }
  return "unknown";
}

Texture ParseTexture(const std::string& name) {
  for (Texture t : {Texture::kChecker, Texture::kNoise, Texture::kGradient,
                    Texture::kMixed}) {
    if (name == TextureName(t)) return t;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown texture '" + name + "'");
}

void SynthParams::Validate() const {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "synth size must be positive");
  }
  if (frames < 2) {
    throw Error(ErrorCode::kInvalidArgument, "synth needs at least 2 frames");
  }
  if (!std::isfinite(vx) || !std::isfinite(vy)) {
    throw Error(ErrorCode::kInvalidArgument, "velocity must be finite");
  }
  if (checker_period < 1) {
    throw Error(ErrorCode::kInvalidArgument, "checker period must be >= 1");
  }
  if (!(noise_sigma >= 0.0) || !(texture_sigma >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "sigmas must be >= 0");
  }
}

VideoSequence SynthGenerate(const SynthParams& p) {
  p.Validate();
  const TextureField tex(p);
  VideoSequence seq;
  seq.frames.reserve(p.frames);
  for (int t = 0; t < p.frames; ++t) {
    const double ox = -t * p.vx;
    const double oy = -t * p.vy;
    Frame f = p.chroma ? Frame::Yuv420(p.width, p.height)
                       : Frame::Mono(p.width, p.height);
    std::vector<double> luma(static_cast<size_t>(p.width) * p.height);
    for (int y = 0; y < p.height; ++y) {
      auto row = f.luma().row(y);
      for (int x = 0; x < p.width; ++x) {
        double v = tex.Sample(x + ox, y + oy);
        luma[static_cast<size_t>(y) * p.width + x] = v;
        if (p.noise_sigma > 0.0) {
          v +=
              p.noise_sigma *
              Gaussian(Hash(p.seed, (static_cast<int64_t>(t) << 32) | y, x, 7));
        }
        row[x] = ToSample(v);
      }
    }
    if (p.chroma) {
      for (int y = 0; y < f.u().height(); ++y) {
        for (int x = 0; x < f.u().width(); ++x) {
          const int lx = std::min(2 * x, p.width - 1);
          const int ly = std::min(2 * y, p.height - 1);
          const double s = luma[static_cast<size_t>(ly) * p.width + lx] - 128.0;
          f.u().at(x, y) = ToSample(128.0 + 0.25 * s);
          f.v().at(x, y) = ToSample(128.0 - 0.25 * s);
        }
      }
    }
    seq.frames.push_back(std::move(f));
  }
  return seq;
}

}  // namespace mscl
