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

#include "cellmorph/geometry/binary_mask.h"

#include <algorithm>
#include <string>

#include "cellmorph/error.h"

namespace cellmorph {
namespace {

void CheckDims(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "mask dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

BinaryMask::BinaryMask(int width, int height)
    : width_(width), height_(height) {
  CheckDims(width, height);
  pixels_.assign(static_cast<std::size_t>(width) * height, 0);
}

BinaryMask::BinaryMask(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  CheckDims(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw Error(ErrorCode::kInvalidArgument,
                "pixel buffer length does not match width x height");
  }
  if (std::any_of(pixels_.begin(), pixels_.end(),
                  [](std::uint8_t v) { return v > 1; })) {
    throw Error(ErrorCode::kInvalidArgument, "mask values must be 0 or 1");
  }
}

std::int64_t BinaryMask::count() const {
  return std::count(pixels_.begin(), pixels_.end(), std::uint8_t{1});
}

std::optional<PixelRect> BinaryMask::bounds() const {
  int x0 = width_, y0 = height_, x1 = -1, y1 = -1;
  for (int y = 0; y < height_; ++y) {
    const auto r = row(y);
    for (int x = 0; x < width_; ++x) {
      if (r[x]) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = y;
      }
    }
  }
  if (x1 < 0) return std::nullopt;
  return PixelRect{x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

}  // namespace cellmorph
