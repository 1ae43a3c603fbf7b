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

#include "cellmorph/preprocess/augment.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "cellmorph/error.h"
#include "cellmorph/util/parse.h"

namespace cellmorph {
namespace {

struct SourcePixel {
  int x;
  int y;
};

template <typename Raster, typename Fn>
Raster Remap(const Raster& src, int out_w, int out_h, Fn source_of) {
  Raster out(out_w, out_h);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      const SourcePixel s = source_of(x, y);
      out.set(x, y, src.at(s.x, s.y));
    }
  }
  return out;
}

template <typename Fn>
InstanceSet RemapMasks(const InstanceSet& masks, int out_w, int out_h,
                       Fn source_of) {
  InstanceSet out(out_w, out_h);
  for (const auto& inst : masks.instances()) {
    BinaryMask m = Remap(inst.mask, out_w, out_h, source_of);
    if (m.empty()) continue;
    out.Add(inst.id, std::move(m), inst.score);
  }
  return out;
}

PixelRect CheckedRect(const PixelRect& r, int w, int h) {
  if (r.width <= 0 || r.height <= 0 || r.x < 0 || r.y < 0 ||
      r.x + r.width > w || r.y + r.height > h) {
    throw Error(ErrorCode::kInvalidRect,
                "crop " + std::to_string(r.x) + "," + std::to_string(r.y) +
                    "," + std::to_string(r.width) + "," +
                    std::to_string(r.height) + " is not inside the " +
                    std::to_string(w) + "x" + std::to_string(h) + " frame");
  }
  return r;
}

Augmented ApplyMapping(const GrayImage& image, const InstanceSet& masks,
                       int out_w, int out_h,
                       const std::function<SourcePixel(int, int)>& source_of) {
  return Augmented{Remap(image, out_w, out_h, source_of),
                   RemapMasks(masks, out_w, out_h, source_of)};
}

GrayImage ResizeBilinear(const GrayImage& src, int out_w, int out_h) {
  const int w = src.width();
  const int h = src.height();
  GrayImage out(out_w, out_h);
  auto coord = [](int p, int in, int outn) {
    const double f = (p + 0.5) * in / outn - 0.5;
    return std::clamp(f, 0.0, static_cast<double>(in - 1));
  };
  for (int y = 0; y < out_h; ++y) {
    const double fy = coord(y, h, out_h);
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, h - 1);
    const double ty = fy - y0;
    for (int x = 0; x < out_w; ++x) {
      const double fx = coord(x, w, out_w);
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, w - 1);
      const double tx = fx - x0;
      const double top = (1 - tx) * src.at(x0, y0) + tx * src.at(x1, y0);
      const double bottom = (1 - tx) * src.at(x0, y1) + tx * src.at(x1, y1);
      const double v = (1 - ty) * top + ty * bottom;
      out.set(x, y, static_cast<std::uint8_t>(
                        std::clamp(std::floor(v + 0.5), 0.0, 255.0)));
    }
  }
  return out;
}

}  // namespace

Augmented Augment(const GrayImage& image, const InstanceSet& masks,
                  const AugmentOp& op, std::uint64_t seed) {
  const int w = image.width();
  const int h = image.height();
  if (masks.frame_width() != w || masks.frame_height() != h) {
    throw Error(ErrorCode::kFrameMismatch,
                "masks and image must share one frame");
  }
  std::mt19937_64 rng(seed);

  auto crop = [&](const PixelRect& r) {
    return ApplyMapping(image, masks, r.width, r.height, [r](int x, int y) {
      return SourcePixel{x + r.x, y + r.y};
    });
  };
  auto hflip = [&] {
    return ApplyMapping(image, masks, w, h, [w](int x, int y) {
      return SourcePixel{w - 1 - x, y};
    });
  };
  auto vflip = [&] {
    return ApplyMapping(image, masks, w, h, [h](int x, int y) {
      return SourcePixel{x, h - 1 - y};
    });
  };

  auto scale = [&](double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
      throw Error(ErrorCode::kInvalidArgument, "scale factor must be > 0");
    }
    const int out_w = std::max(1, static_cast<int>(std::lround(w * factor)));
    const int out_h = std::max(1, static_cast<int>(std::lround(h * factor)));
    auto nearest = [w, h, out_w, out_h](int x, int y) {
      const int sx = std::min(w - 1, static_cast<int>((x + 0.5) * w / out_w));
      const int sy = std::min(h - 1, static_cast<int>((y + 0.5) * h / out_h));
      return SourcePixel{sx, sy};
    };
    return Augmented{ResizeBilinear(image, out_w, out_h),
                     RemapMasks(masks, out_w, out_h, nearest)};
  };

  return std::visit(
      [&](const auto& o) -> Augmented {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, aug::Rot90>) {
          return ApplyMapping(image, masks, h, w, [h](int x, int y) {
            return SourcePixel{y, h - 1 - x};
          });
        } else if constexpr (std::is_same_v<T, aug::Rot180>) {
          return ApplyMapping(image, masks, w, h, [w, h](int x, int y) {
            return SourcePixel{w - 1 - x, h - 1 - y};
          });
        } else if constexpr (std::is_same_v<T, aug::HFlip>) {
          return hflip();
        } else if constexpr (std::is_same_v<T, aug::VFlip>) {
          return vflip();
        } else if constexpr (std::is_same_v<T, aug::Crop>) {
          return crop(CheckedRect(o.rect, w, h));
        } else if constexpr (std::is_same_v<T, aug::RandomCrop>) {
          CheckedRect(PixelRect{0, 0, o.width, o.height}, w, h);
          std::uniform_int_distribution<int> px(0, w - o.width);
          std::uniform_int_distribution<int> py(0, h - o.height);
          const int x = px(rng);
          const int y = py(rng);
          return crop(PixelRect{x, y, o.width, o.height});
        } else if constexpr (std::is_same_v<T, aug::RandomFlip>) {
          if (!(o.probability >= 0.0 && o.probability <= 1.0)) {
            throw Error(ErrorCode::kInvalidArgument,
                        "flip probability must be in [0, 1]");
          }
          std::bernoulli_distribution coin(o.probability);
          if (!coin(rng)) return Augmented{image, masks};
          return o.horizontal ? hflip() : vflip();
        } else if constexpr (std::is_same_v<T, aug::RandomScale>) {
          if (!(o.min_factor > 0.0 && o.min_factor <= o.max_factor) ||
              !std::isfinite(o.max_factor)) {
            throw Error(ErrorCode::kInvalidArgument,
                        "scale range must satisfy 0 < MIN <= MAX");
          }
          std::uniform_real_distribution<double> f(o.min_factor, o.max_factor);
          return scale(o.min_factor == o.max_factor ? o.min_factor : f(rng));
        } else {
          static_assert(std::is_same_v<T, aug::Scale>);
          return scale(o.factor);
        }
      },
      op);
}

AugmentOp ParseAugmentOp(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view args =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto bad = [&] {
    return Error(ErrorCode::kInvalidArgument,
                 "unrecognized augmentation '" + std::string(text) + "'");
  };
  auto no_args = [&](AugmentOp op) {
    if (colon != std::string_view::npos) throw bad();
    return op;
  };

  if (name == "rot90") return no_args(aug::Rot90{});
  if (name == "rot180") return no_args(aug::Rot180{});
  if (name == "hflip") return no_args(aug::HFlip{});
  if (name == "vflip") return no_args(aug::VFlip{});
  if (name == "crop") {
    const auto v = ParseIntList(args);
    if (v.size() != 4) throw bad();
    return aug::Crop{PixelRect{v[0], v[1], v[2], v[3]}};
  }
  if (name == "random-crop") {
    const auto v = ParseIntList(args);
    if (v.size() != 2) throw bad();
    return aug::RandomCrop{v[0], v[1]};
  }
  if (name == "random-hflip" || name == "random-vflip") {
    aug::RandomFlip f{name == "random-hflip", 0.5};
    if (colon != std::string_view::npos) f.probability = ParseDouble(args);
    return f;
  }
  if (name == "random-scale") {
    const auto v = ParseDoubleList(args);
    if (v.size() != 2) throw bad();
    return aug::RandomScale{v[0], v[1]};
  }
  if (name == "scale") {
    if (colon == std::string_view::npos) throw bad();
    return aug::Scale{ParseDouble(args)};
  }
  throw bad();
}

std::string AugmentOpName(const AugmentOp& op) {
  return std::visit(
      [](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, aug::Rot90>) return "rot90";
        else if constexpr (std::is_same_v<T, aug::Rot180>) return "rot180";
        else if constexpr (std::is_same_v<T, aug::HFlip>) return "hflip";
        else if constexpr (std::is_same_v<T, aug::VFlip>) return "vflip";
        else if constexpr (std::is_same_v<T, aug::Crop>) return "crop";
        else if constexpr (std::is_same_v<T, aug::RandomCrop>) return "random-crop";
        else if constexpr (std::is_same_v<T, aug::RandomFlip>)
          return o.horizontal ? "random-hflip" : "random-vflip";
        else if constexpr (std::is_same_v<T, aug::RandomScale>) return "random-scale";
        else return "scale";
      },
      op);
}

}  // namespace cellmorph
