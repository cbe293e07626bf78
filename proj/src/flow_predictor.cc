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
#include "mscl/flow_predictor.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <span>

#if defined(__SSE2__)
#include <emmintrin.h>
#endif
#include <string>

#include "mscl/error.h"
#include "mscl/resample.h"

namespace mscl {
namespace {

constexpr int kNoLimit = std::numeric_limits<int>::max();

struct Rect {
  int x0, y0, w, h;
};

// Edge-replicated copy of a plane with |margin| extra samples on every side,
// so displaced block reads never need clamping.
class PaddedPlane {
 public:
  PaddedPlane(const Plane& src, int margin)
      : margin_(margin),
        width_(src.width()),
        height_(src.height()),
        stride_(src.width() + 2 * margin) {
    data_.resize(static_cast<size_t>(stride_) * (height_ + 2 * margin));
    for (int y = -margin; y < height_ + margin; ++y) {
      const auto row = src.row(std::clamp(y, 0, height_ - 1));
      uint8_t* out = data_.data() + static_cast<size_t>(y + margin) * stride_;
      std::fill(out, out + margin, row[0]);
      std::copy(row.begin(), row.end(), out + margin);
      std::fill(out + margin + width_, out + stride_, row[width_ - 1]);
    }
  }

  // True when a w x h block at (x, y) lies inside the padded area.
  bool Covers(int x, int y, int w, int h) const {
    return x >= -margin_ && y >= -margin_ && x + w <= width_ + margin_ &&
           y + h <= height_ + margin_;
  }
  const uint8_t* Row(int x, int y) const {
    return data_.data() + static_cast<size_t>(y + margin_) * stride_ +
           (x + margin_);
  }

 private:
  int margin_;
  int width_;
  int height_;
  int stride_;
  std::vector<uint8_t> data_;
};

// SAD of a block against the reference displaced by (u, v), reading the
// reference clamp-to-edge. Returns early with a value > limit once the
// partial sum exceeds it.
int BlockSad(const Plane& cur, const Plane& ref, const PaddedPlane& padded,
             const Rect& r, int u, int v, int limit) {
  const int rx = r.x0 + u;
  const int ry = r.y0 + v;
  int sad = 0;
  if (padded.Covers(rx, ry, r.w, r.h)) {
#if defined(__SSE2__)
    if (r.w == 8 || r.w == 16) {
      for (int j = 0; j < r.h; ++j) {
        const uint8_t* c = cur.row(r.y0 + j).data() + r.x0;
        const uint8_t* p = padded.Row(rx, ry + j);
        __m128i d;
        if (r.w == 16) {
          d = _mm_sad_epu8(
              _mm_loadu_si128(reinterpret_cast<const __m128i*>(c)),
              _mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
        } else {
          d = _mm_sad_epu8(
              _mm_loadl_epi64(reinterpret_cast<const __m128i*>(c)),
              _mm_loadl_epi64(reinterpret_cast<const __m128i*>(p)));
        }
        sad += _mm_cvtsi128_si32(d) + _mm_extract_epi16(d, 4);
        if (sad > limit) return sad;
      }
      return sad;
    }
#endif
    for (int j = 0; j < r.h; ++j) {
      const uint8_t* c = cur.row(r.y0 + j).data() + r.x0;
      const uint8_t* p = padded.Row(rx, ry + j);
      int row_sad = 0;
      for (int i = 0; i < r.w; ++i) row_sad += std::abs(c[i] - p[i]);
      sad += row_sad;
      if (sad > limit) return sad;
    }
    return sad;
  }
  for (int j = 0; j < r.h; ++j) {
    for (int i = 0; i < r.w; ++i) {
      sad += std::abs(cur.at(r.x0 + i, r.y0 + j) - ref.clamped(rx + i, ry + j));
    }
    if (sad > limit) return sad;
  }
  return sad;
}

// SAD against the reference sampled at half-pel position (hu/2, hv/2).
int BlockSadHalfPel(const Plane& cur, const Plane& ref, const Rect& r, int hu,
                    int hv) {
  auto sample2 = [&](int x2, int y2) {
    // x2, y2 are absolute half-pel coordinates.
    const int xa = x2 >> 1, ya = y2 >> 1;
    const int xb = xa + (x2 & 1), yb = ya + (y2 & 1);
    const int s = ref.clamped(xa, ya) + ref.clamped(xb, ya) +
                  ref.clamped(xa, yb) + ref.clamped(xb, yb);
    return (s + 2) >> 2;
  };
  int sad = 0;
  for (int j = 0; j < r.h; ++j) {
    for (int i = 0; i < r.w; ++i) {
      const int x = r.x0 + i, y = r.y0 + j;
      sad += std::abs(cur.at(x, y) - sample2(2 * x + hu, 2 * y + hv));
    }
  }
  return sad;
}

struct SearchKey {
  int sad;
  int64_t mag2;
  int order;

  bool operator<(const SearchKey& o) const {
    if (sad != o.sad) return sad < o.sad;
    if (mag2 != o.mag2) return mag2 < o.mag2;
    return order < o.order;
  }
};

struct Seed {
  int u, v;
};

// Exhaustive search of the (2R+1)^2 window around (cu, cv). The center and
// any in-window seeds are scored first to tighten the early-termination
// bound; the result is the lexicographic minimum of SearchKey over the whole
// window, so visiting order does not change it.
void SearchBlock(const Plane& cur, const Plane& ref, const PaddedPlane& padded,
                 const Rect& r, int cu, int cv, int radius,
                 std::span<const Seed> seeds, int* best_u, int* best_v) {
  const int side = 2 * radius + 1;
  auto key_for = [&](int dx, int dy, int sad) {
    const int64_t u = cu + dx, v = cv + dy;
    return SearchKey{sad, u * u + v * v, (dy + radius) * side + (dx + radius)};
  };
  SearchKey best =
      key_for(0, 0, BlockSad(cur, ref, padded, r, cu, cv, kNoLimit));
  int bu = cu, bv = cv;
  auto consider = [&](int dx, int dy) {
    const int sad = BlockSad(cur, ref, padded, r, cu + dx, cv + dy, best.sad);
    if (sad > best.sad) return;
    const SearchKey k = key_for(dx, dy, sad);
    if (k < best) {
      best = k;
      bu = cu + dx;
      bv = cv + dy;
    }
  };
  for (const Seed& s : seeds) {
    const int dx = s.u - cu, dy = s.v - cv;
    if (std::abs(dx) <= radius && std::abs(dy) <= radius) consider(dx, dy);
  }
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (dx != 0 || dy != 0) consider(dx, dy);
    }
  }
  *best_u = bu;
  *best_v = bv;
}

std::vector<Plane> BuildPyramid(const Plane& base, int levels, int min_dim) {
  std::vector<Plane> pyr{base};
  for (int l = 1; l < levels; ++l) {
    const Plane& prev = pyr.back();
    const int w = (prev.width() + 1) / 2;
    const int h = (prev.height() + 1) / 2;
    if (w < min_dim || h < min_dim) break;
    pyr.push_back(ResamplePlane(prev, w, h));
  }
  return pyr;
}

int CeilDiv(int a, int b) { return (a + b - 1) / b; }

}  // namespace

void BlockMatchParams::Validate() const {
  if (block_size != 4 && block_size != 8 && block_size != 16) {
    throw Error(
        ErrorCode::kInvalidArgument,
        "block_size must be 4, 8 or 16, got " + std::to_string(block_size));
  }
  if (search_radius < 1) {
    throw Error(ErrorCode::kInvalidArgument, "search_radius must be >= 1");
  }
  if (pyramid_levels < 1) {
    throw Error(ErrorCode::kInvalidArgument, "pyramid_levels must be >= 1");
  }
}

int BlockMatchParams::MaxDisplacement() const {
  int bound = 0;
  for (int l = 0; l < pyramid_levels; ++l) bound += search_radius << l;
  return bound + (use_half_pel ? 1 : 0);
}

BlockVectorGrid MatchBlocks(const Frame& cur, const Frame& ref,
                            const BlockMatchParams& params) {
  params.Validate();
  if (cur.width() != ref.width() || cur.height() != ref.height()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "block matching needs equal frame sizes");
  }
  const int bs = params.block_size;
  if (cur.width() < bs || cur.height() < bs) {
    throw Error(ErrorCode::kFrameTooSmall,
                "frame " + std::to_string(cur.width()) + "x" +
                    std::to_string(cur.height()) + " is smaller than block " +
                    std::to_string(bs));
  }

  const std::vector<Plane> cur_pyr =
      BuildPyramid(cur.luma(), params.pyramid_levels, bs);
  const std::vector<Plane> ref_pyr =
      BuildPyramid(ref.luma(), static_cast<int>(cur_pyr.size()), bs);

  BlockVectorGrid coarse;
  for (int level = static_cast<int>(cur_pyr.size()) - 1; level >= 0; --level) {
    const Plane& c = cur_pyr[level];
    const Plane& p = ref_pyr[level];
    BlockVectorGrid grid;
    grid.block_size = bs;
    grid.blocks_x = CeilDiv(c.width(), bs);
    grid.blocks_y = CeilDiv(c.height(), bs);
    grid.vectors.resize(static_cast<size_t>(grid.blocks_x) * grid.blocks_y);
    int max_center = 0;
    for (const BlockVector& b : coarse.vectors) {
      max_center = std::max({max_center, 2 * static_cast<int>(std::abs(b.u)),
                             2 * static_cast<int>(std::abs(b.v))});
    }
    const PaddedPlane padded(p, max_center + params.search_radius + bs);
    for (int by = 0; by < grid.blocks_y; ++by) {
      for (int bx = 0; bx < grid.blocks_x; ++bx) {
        const Rect r{bx * bs, by * bs, std::min(bs, c.width() - bx * bs),
                     std::min(bs, c.height() - by * bs)};
        int cu = 0, cv = 0;
        if (!coarse.vectors.empty()) {
          const int cbx =
              std::min((r.x0 + r.w / 2) / 2 / bs, coarse.blocks_x - 1);
          const int cby =
              std::min((r.y0 + r.h / 2) / 2 / bs, coarse.blocks_y - 1);
          const BlockVector& cvv = coarse.at(cbx, cby);
          cu = 2 * static_cast<int>(cvv.u);
          cv = 2 * static_cast<int>(cvv.v);
        }
        Seed seeds[2];
        int n = 0;
        if (bx > 0) {
          const BlockVector& l =
              grid.vectors[static_cast<size_t>(by) * grid.blocks_x + bx - 1];
          seeds[n++] = {static_cast<int>(l.u), static_cast<int>(l.v)};
        }
        if (by > 0) {
          const BlockVector& a =
              grid.vectors[static_cast<size_t>(by - 1) * grid.blocks_x + bx];
          seeds[n++] = {static_cast<int>(a.u), static_cast<int>(a.v)};
        }
        int bu = 0, bv = 0;
        SearchBlock(c, p, padded, r, cu, cv, params.search_radius,
                    std::span<const Seed>(seeds, n), &bu, &bv);
        grid.vectors[static_cast<size_t>(by) * grid.blocks_x + bx] = {
            static_cast<double>(bu), static_cast<double>(bv)};
      }
    }
    coarse = std::move(grid);
  }

  if (params.use_half_pel) {
    const Plane& c = cur.luma();
    const Plane& p = ref.luma();
    for (int by = 0; by < coarse.blocks_y; ++by) {
      for (int bx = 0; bx < coarse.blocks_x; ++bx) {
        BlockVector& bvv =
            coarse.vectors[static_cast<size_t>(by) * coarse.blocks_x + bx];
        const Rect r{bx * bs, by * bs, std::min(bs, c.width() - bx * bs),
                     std::min(bs, c.height() - by * bs)};
        const int hu0 = 2 * static_cast<int>(bvv.u);
        const int hv0 = 2 * static_cast<int>(bvv.v);
        auto key_for = [&](int hx, int hy, int sad) {
          const int64_t u = hu0 + hx, v = hv0 + hy;
          return SearchKey{sad, u * u + v * v, (hy + 1) * 3 + (hx + 1)};
        };
        SearchKey best = key_for(0, 0, BlockSadHalfPel(c, p, r, hu0, hv0));
        int best_hu = hu0, best_hv = hv0;
        for (int hy = -1; hy <= 1; ++hy) {
          for (int hx = -1; hx <= 1; ++hx) {
            if (hx == 0 && hy == 0) continue;
            const SearchKey k =
                key_for(hx, hy, BlockSadHalfPel(c, p, r, hu0 + hx, hv0 + hy));
            if (k < best) {
              best = k;
              best_hu = hu0 + hx;
              best_hv = hv0 + hy;
            }
          }
        }
        bvv = {best_hu / 2.0, best_hv / 2.0};
      }
    }
  }
  return coarse;
}

FlowField ExpandBlockVectors(const BlockVectorGrid& grid, int width,
                             int height) {
  FlowField flow(width, height, FlowScale::Scene());
  auto u = flow.u_samples();
  auto v = flow.v_samples();
  for (int y = 0; y < height; ++y) {
    const int by = std::min(y / grid.block_size, grid.blocks_y - 1);
    for (int x = 0; x < width; ++x) {
      const int bx = std::min(x / grid.block_size, grid.blocks_x - 1);
      const BlockVector& b = grid.at(bx, by);
      const size_t i = static_cast<size_t>(y) * width + x;
      u[i] = b.u;
      v[i] = b.v;
    }
  }
  return flow;
}

FlowField EstimateFlowBlock(const Frame& cur, const Frame& ref,
                            const BlockMatchParams& params) {
  return ExpandBlockVectors(MatchBlocks(cur, ref, params), cur.width(),
                            cur.height());
}

BlockMatchPredictor::BlockMatchPredictor(BlockMatchParams params)
    : params_(params) {
  params_.Validate();
}

FlowField BlockMatchPredictor::Estimate(const Frame& cur,
                                        const Frame& ref) const {
  return EstimateFlowBlock(cur, ref, params_);
}

}  // namespace mscl
