// Copyright 2026 The cellmorph Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cellmorph/preprocess/clahe.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cellmorph/error.h"

namespace cellmorph {
namespace {

constexpr int kBins = 256;

// reflect-101 for indices past the far edge; callers never go below 0.
int Mirror(int i, int n) { return i < n ? i : 2 * (n - 1) - i; }

void ClipAndRedistribute(std::array<std::int64_t, kBins>& hist,
                         std::int64_t limit) {
  std::int64_t excess = 0;
  for (auto& h : hist) {
    if (h > limit) {
      excess += h - limit;
      h = limit;
    }
  }
  const std::int64_t batch = excess / kBins;
  std::int64_t residual = excess - batch * kBins;
  for (auto& h : hist) h += batch;
  if (residual > 0) {
    const std::int64_t step = std::max<std::int64_t>(kBins / residual, 1);
    for (std::int64_t i = 0; i < kBins && residual > 0; i += step, --residual) {
      ++hist[i];
    }
  }
}

// Neighbouring tile pair and blend weight for each output coordinate.
struct Interp {
  int lo = 0;
  int hi = 0;
  double weight = 0.0;  // contribution of `hi`
};

std::vector<Interp> InterpAxis(int length, int tiles, int tile_size) {
  std::vector<Interp> out(length);
  const double half = (tile_size - 1) / 2.0;
  for (int p = 0; p < length; ++p) {
    const double first = half;
    const double last = (tiles - 1) * static_cast<double>(tile_size) + half;
    if (p <= first) {
      out[p] = {0, 0, 0.0};
    } else if (p >= last) {
      out[p] = {tiles - 1, tiles - 1, 0.0};
    } else {
      const int lo = static_cast<int>((p - half) / tile_size);
      const double center = lo * static_cast<double>(tile_size) + half;
      out[p] = {lo, lo + 1, (p - center) / tile_size};
    }
  }
  return out;
}

}  // namespace

ToneMap EqualizationMap(std::span<const std::int64_t, 256> hist,
                        std::int64_t total) {
  ToneMap map{};
  std::int64_t cdf = 0;
  for (int v = 0; v < kBins; ++v) {
    cdf += hist[v];
    map[v] = static_cast<std::uint8_t>(
        std::min<std::int64_t>(255, (cdf * 255 + total / 2) / total));
  }
  return map;
}

GrayImage Clahe(const GrayImage& img, const ClaheParams& params) {
  if (params.tiles_x < 1 || params.tiles_y < 1) {
    throw Error(ErrorCode::kInvalidArgument, "tile counts must be >= 1");
  }
  if (!(params.clip_limit > 0.0 && params.clip_limit <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "clip_limit must be in (0, 1]");
  }
  const int w = img.width();
  const int h = img.height();
  if (w < params.tiles_x || h < params.tiles_y) {
    throw Error(ErrorCode::kImageTooSmall,
                std::to_string(w) + "x" + std::to_string(h) +
                    " image cannot hold " + std::to_string(params.tiles_x) +
                    "x" + std::to_string(params.tiles_y) + " tiles");
  }
  const int tw = (w + params.tiles_x - 1) / params.tiles_x;
  const int th = (h + params.tiles_y - 1) / params.tiles_y;
  const std::int64_t tile_pixels = static_cast<std::int64_t>(tw) * th;
  const std::int64_t limit = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(params.clip_limit * tile_pixels));

  std::vector<ToneMap> maps(static_cast<std::size_t>(params.tiles_x) *
                            params.tiles_y);
  for (int ty = 0; ty < params.tiles_y; ++ty) {
    for (int tx = 0; tx < params.tiles_x; ++tx) {
      std::array<std::int64_t, kBins> hist{};
      for (int y = ty * th; y < (ty + 1) * th; ++y) {
        const int sy = Mirror(y, h);
        for (int x = tx * tw; x < (tx + 1) * tw; ++x) {
          ++hist[img.at(Mirror(x, w), sy)];
        }
      }
      ClipAndRedistribute(hist, limit);
      maps[static_cast<std::size_t>(ty) * params.tiles_x + tx] =
          EqualizationMap(hist, tile_pixels);
    }
  }

  const auto cols = InterpAxis(w, params.tiles_x, tw);
  const auto rows = InterpAxis(h, params.tiles_y, th);
  auto map_at = [&](int tx, int ty) -> const ToneMap& {
    return maps[static_cast<std::size_t>(ty) * params.tiles_x + tx];
  };

  GrayImage out(w, h);
  for (int y = 0; y < h; ++y) {
    const Interp& r = rows[y];
    for (int x = 0; x < w; ++x) {
      const Interp& c = cols[x];
      const std::uint8_t v = img.at(x, y);
      const double top = (1.0 - c.weight) * map_at(c.lo, r.lo)[v] +
                         c.weight * map_at(c.hi, r.lo)[v];
      const double bottom = (1.0 - c.weight) * map_at(c.lo, r.hi)[v] +
                            c.weight * map_at(c.hi, r.hi)[v];
      const double value = (1.0 - r.weight) * top + r.weight * bottom;
      out.set(x, y, static_cast<std::uint8_t>(
                        std::clamp(std::floor(value + 0.5), 0.0, 255.0)));
    }
  }
  return out;
}

}  // namespace cellmorph
