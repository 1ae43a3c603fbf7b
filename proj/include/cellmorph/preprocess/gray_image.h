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

#ifndef CELLMORPH_PREPROCESS_GRAY_IMAGE_H_
#define CELLMORPH_PREPROCESS_GRAY_IMAGE_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace cellmorph {

// 8-bit single-channel raster, row-major.
class GrayImage {
 public:
  // Throws InvalidArgument unless width, height > 0.
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }

  std::uint8_t at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  void set(int x, int y, std::uint8_t v) {
    pixels_[static_cast<std::size_t>(y) * width_ + x] = v;
  }

  std::span<const std::uint8_t> pixels() const { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

// Any format OpenCV decodes; color input is converted to gray.
GrayImage ReadGrayImage(const std::filesystem::path& path);
// Format follows the extension (use .png for lossless output).
void WriteGrayImage(const std::filesystem::path& path, const GrayImage& img);

}  // namespace cellmorph

#endif  // CELLMORPH_PREPROCESS_GRAY_IMAGE_H_
