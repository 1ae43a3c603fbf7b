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

#include "cellmorph/synth/scene.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include <fmt/format.h>

#include "cellmorph/error.h"

namespace cellmorph {
namespace {

struct HalfExtent {
  double x;
  double y;
};

HalfExtent Extent(const EllipseParams& e) {
  const double c = std::cos(e.theta);
  const double s = std::sin(e.theta);
  return {std::sqrt(e.a * e.a * c * c + e.b * e.b * s * s),
          std::sqrt(e.a * e.a * s * s + e.b * e.b * c * c)};
}

void CheckAxes(double a, double b) {
  if (!(b > 0.0) || !(a >= b) || !std::isfinite(a)) {
    throw Error(ErrorCode::kInvalidArgument,
                "ellipse axes must satisfy a >= b > 0");
  }
}

}  // namespace

BinaryMask RasterizeEllipse(const EllipseParams& e, int width, int height) {
  CheckAxes(e.a, e.b);
  BinaryMask mask(width, height);
  const HalfExtent ext = Extent(e);
  const double c = std::cos(e.theta);
  const double s = std::sin(e.theta);
  const double inv_a2 = 1.0 / (e.a * e.a);
  const double inv_b2 = 1.0 / (e.b * e.b);

  const int x0 = static_cast<int>(std::clamp(std::floor(e.cx - ext.x), 0.0, double(width)));
  const int x1 = static_cast<int>(std::clamp(std::ceil(e.cx + ext.x), -1.0, double(width - 1)));
  const int y0 = static_cast<int>(std::clamp(std::floor(e.cy - ext.y), 0.0, double(height)));
  const int y1 = static_cast<int>(std::clamp(std::ceil(e.cy + ext.y), -1.0, double(height - 1)));
  bool any = false;
  for (int y = y0; y <= y1; ++y) {
    const double dy = y - e.cy;
    for (int x = x0; x <= x1; ++x) {
      const double dx = x - e.cx;
      const double u = dx * c + dy * s;
      const double v = -dx * s + dy * c;
      if (u * u * inv_a2 + v * v * inv_b2 <= 1.0) {
        mask.set(x, y);
        any = true;
      }
    }
  }
  if (!any) {
    throw Error(ErrorCode::kOutOfFrame,
                fmt::format("ellipse at ({}, {}) covers no pixel of the {}x{} frame",
                            e.cx, e.cy, width, height));
  }
  return mask;
}

SyntheticScene GenerateScene(const SceneConfig& cfg, std::uint64_t seed) {
  if (cfg.n_cells < 0) {
    throw Error(ErrorCode::kInvalidArgument, "n_cells must be >= 0");
  }
  if (!(cfg.a_min > 0 && cfg.a_max >= cfg.a_min && cfg.b_min > 0 &&
        cfg.b_max >= cfg.b_min)) {
    throw Error(ErrorCode::kInvalidArgument,
                "axis ranges must be positive with min <= max");
  }
  if (!(cfg.noise_sigma >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "noise_sigma must be >= 0");
  }
  const int w = cfg.width;
  const int h = cfg.height;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  SyntheticScene scene{GrayImage(w, h, cfg.background), InstanceSet(w, h), {}};
  // 1 = taken by a cell (or its one-pixel margin when non_overlapping).
  std::vector<std::uint8_t> blocked(static_cast<std::size_t>(w) * h, 0);

  for (int k = 0; k < cfg.n_cells; ++k) {
    bool placed = false;
    for (int attempt = 0; attempt < cfg.max_attempts_per_cell && !placed; ++attempt) {
      EllipseParams e;
      e.a = uniform(cfg.a_min, cfg.a_max);
      e.b = uniform(cfg.b_min, cfg.b_max);
      if (e.b > e.a) std::swap(e.a, e.b);
      e.theta = std::numbers::pi * (0.5 - unit(rng));
      const HalfExtent ext = Extent(e);
      const double lo_x = std::ceil(ext.x), hi_x = w - 1 - std::ceil(ext.x);
      const double lo_y = std::ceil(ext.y), hi_y = h - 1 - std::ceil(ext.y);
      if (lo_x > hi_x || lo_y > hi_y) continue;
      e.cx = uniform(lo_x, hi_x);
      e.cy = uniform(lo_y, hi_y);

      BinaryMask mask = RasterizeEllipse(e, w, h);
      const auto px = mask.pixels();
      bool clear = true;
      for (std::size_t i = 0; i < px.size() && clear; ++i) {
        if (px[i] && blocked[i]) clear = false;
      }
      if (!clear) continue;

      const int margin = cfg.non_overlapping ? 1 : 0;
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          if (!mask.at(x, y)) continue;
          for (int dy = -margin; dy <= margin; ++dy) {
            for (int dx = -margin; dx <= margin; ++dx) {
              if (mask.contains(x + dx, y + dy)) {
                blocked[static_cast<std::size_t>(y + dy) * w + x + dx] = 1;
              }
            }
          }
          scene.image.set(x, y, cfg.foreground);
        }
      }
      scene.truth.Add(k + 1, std::move(mask));
      scene.params.push_back(e);
      placed = true;
    }
    if (!placed) {
      throw Error(ErrorCode::kPlacementFailure,
                  fmt::format("could not place cell {} of {} after {} attempts",
                              k + 1, cfg.n_cells, cfg.max_attempts_per_cell));
    }
  }

  if (cfg.noise_sigma > 0.0) {
    std::normal_distribution<double> noise(0.0, cfg.noise_sigma);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double v = scene.image.at(x, y) + noise(rng);
        scene.image.set(x, y, static_cast<std::uint8_t>(
                                  std::clamp(std::floor(v + 0.5), 0.0, 255.0)));
      }
    }
  }
  return scene;
}

void WriteTruthCsv(const std::filesystem::path& path,
                   const std::vector<EllipseParams>& params) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << "id,cx,cy,a,b,theta\n";
  for (std::size_t k = 0; k < params.size(); ++k) {
    const auto& e = params[k];
    out << fmt::format("{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", k + 1, e.cx,
                       e.cy, e.a, e.b, e.theta);
  }
}

}  // namespace cellmorph
