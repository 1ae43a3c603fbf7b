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

#ifndef CELLMORPH_GEOMETRY_BINARY_MASK_H_
#define CELLMORPH_GEOMETRY_BINARY_MASK_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cellmorph/types.h"

namespace cellmorph {

// Row-major 0/1 raster. Coordinates are 0-based pixel indices; pixel (x, y)
// lives at pixels()[y * width() + x].
class BinaryMask {
 public:
  // All-background mask. Throws InvalidArgument unless width, height > 0.
  BinaryMask(int width, int height);
  // Throws InvalidArgument on a size mismatch or any value other than 0/1.
  BinaryMask(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }

  bool at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int x, int y, bool value = true) {
    pixels_[static_cast<std::size_t>(y) * width_ + x] = value ? 1 : 0;
  }
  bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<const std::uint8_t> row(int y) const {
    return std::span<const std::uint8_t>(pixels_).subspan(
        static_cast<std::size_t>(y) * width_, width_);
  }

  std::int64_t count() const;
  bool empty() const { return count() == 0; }

  // Tight bounding box of the foreground, nullopt for an empty mask.
  std::optional<PixelRect> bounds() const;

  bool same_frame(const BinaryMask& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool operator==(const BinaryMask&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace cellmorph

#endif  // CELLMORPH_GEOMETRY_BINARY_MASK_H_
