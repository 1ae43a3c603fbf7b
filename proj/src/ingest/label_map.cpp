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

#include "cellmorph/ingest/label_map.h"

#include <array>
#include <map>
#include <string>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "cellmorph/error.h"

namespace cellmorph {

InstanceSet InstancesFromLabelMap(const LabelMap& map) {
  InstanceSet set(map.width, map.height);
  std::map<std::uint16_t, BinaryMask> masks;
  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < map.width; ++x) {
      const std::uint16_t label = map.at(x, y);
      if (label == 0) continue;
      auto it = masks.find(label);
      if (it == masks.end()) {
        it = masks.emplace(label, BinaryMask(map.width, map.height)).first;
      }
      it->second.set(x, y);
    }
  }
  for (auto& [label, mask] : masks) set.Add(label, std::move(mask));
  return set;
}

LabelMap LabelMapFromInstances(const InstanceSet& set) {
  LabelMap map;
  map.width = set.frame_width();
  map.height = set.frame_height();
  map.labels.assign(static_cast<std::size_t>(map.width) * map.height, 0);
  for (const auto& inst : set.instances()) {
    if (inst.id < 1 || inst.id > 65535) {
      throw Error(ErrorCode::kInvalidArgument,
                  "instance id " + std::to_string(inst.id) +
                      " does not fit a 16-bit label map");
    }
    const auto pixels = inst.mask.pixels();
    for (std::size_t i = 0; i < pixels.size(); ++i) {
      if (!pixels[i]) continue;
      if (map.labels[i] != 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "instances " + std::to_string(map.labels[i]) + " and " +
                        std::to_string(inst.id) +
                        " overlap; a label map cannot hold both");
      }
      map.labels[i] = static_cast<std::uint16_t>(inst.id);
    }
  }
  return map;
}

LabelMap ReadLabelMapFile(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::kIoError, "no such file: " + path.string());
  }
  const cv::Mat img = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
  if (img.empty()) {
    throw Error(ErrorCode::kIoError, "cannot decode image: " + path.string());
  }
  if (img.channels() != 1 || img.depth() != CV_16U) {
    throw Error(ErrorCode::kFormatError,
                path.string() + " is not a single-channel 16-bit image");
  }
  LabelMap map;
  map.width = img.cols;
  map.height = img.rows;
  map.labels.resize(static_cast<std::size_t>(img.cols) * img.rows);
  for (int y = 0; y < img.rows; ++y) {
    const auto* row = img.ptr<std::uint16_t>(y);
    std::copy(row, row + img.cols,
              map.labels.begin() + static_cast<std::ptrdiff_t>(y) * img.cols);
  }
  return map;
}

void WriteLabelMapFile(const std::filesystem::path& path, const LabelMap& map) {
  cv::Mat img(map.height, map.width, CV_16UC1);
  for (int y = 0; y < map.height; ++y) {
    std::copy_n(map.labels.begin() + static_cast<std::ptrdiff_t>(y) * map.width,
                map.width, img.ptr<std::uint16_t>(y));
  }
  if (!cv::imwrite(path.string(), img)) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
}

}  // namespace cellmorph
