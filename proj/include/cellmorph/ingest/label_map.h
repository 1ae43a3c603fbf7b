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

#ifndef CELLMORPH_INGEST_LABEL_MAP_H_
#define CELLMORPH_INGEST_LABEL_MAP_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "cellmorph/ingest/instance_set.h"

namespace cellmorph {

// Integer raster; 0 is background, k > 0 marks instance k.
struct LabelMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint16_t> labels;  // row-major, width * height

  std::uint16_t at(int x, int y) const {
    return labels[static_cast<std::size_t>(y) * width + x];
  }
  bool operator==(const LabelMap&) const = default;
};

// One instance per distinct nonzero label, ascending by label.
InstanceSet InstancesFromLabelMap(const LabelMap& map);

// Throws InvalidArgument when two instances share a pixel or an id does not
// fit in [1, 65535].
LabelMap LabelMapFromInstances(const InstanceSet& set);

// Single-channel 16-bit PNG. Throws IoError if unreadable, FormatError on
// any other depth or channel count.
LabelMap ReadLabelMapFile(const std::filesystem::path& path);
void WriteLabelMapFile(const std::filesystem::path& path, const LabelMap& map);

inline InstanceSet LoadLabelMap(const std::filesystem::path& path) {
  return InstancesFromLabelMap(ReadLabelMapFile(path));
}
inline void WriteLabelMap(const std::filesystem::path& path,
                          const InstanceSet& set) {
  WriteLabelMapFile(path, LabelMapFromInstances(set));
}

}  // namespace cellmorph

#endif  // CELLMORPH_INGEST_LABEL_MAP_H_
