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

#include "cellmorph/preprocess/gray_image.h"

#include <algorithm>
#include <string>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "cellmorph/error.h"

namespace cellmorph {

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be > 0");
  }
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be > 0");
  }
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw Error(ErrorCode::kInvalidArgument,
                "pixel buffer length does not match width x height");
  }
}

GrayImage ReadGrayImage(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::kIoError, "no such file: " + path.string());
  }
  const cv::Mat img = cv::imread(path.string(), cv::IMREAD_GRAYSCALE);
  if (img.empty()) {
    throw Error(ErrorCode::kFormatError, "cannot decode image: " + path.string());
  }
  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(img.cols) * img.rows);
  for (int y = 0; y < img.rows; ++y) {
    const auto* row = img.ptr<std::uint8_t>(y);
    std::copy(row, row + img.cols,
              pixels.begin() + static_cast<std::ptrdiff_t>(y) * img.cols);
  }
  return GrayImage(img.cols, img.rows, std::move(pixels));
}

void WriteGrayImage(const std::filesystem::path& path, const GrayImage& img) {
  cv::Mat out(img.height(), img.width(), CV_8UC1);
  const auto px = img.pixels();
  for (int y = 0; y < img.height(); ++y) {
    std::copy_n(px.begin() + static_cast<std::ptrdiff_t>(y) * img.width(),
                img.width(), out.ptr<std::uint8_t>(y));
  }
  if (!cv::imwrite(path.string(), out)) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
}

}  // namespace cellmorph
