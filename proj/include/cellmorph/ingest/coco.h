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

#ifndef CELLMORPH_INGEST_COCO_H_
#define CELLMORPH_INGEST_COCO_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cellmorph/ingest/instance_set.h"

namespace cellmorph {

struct CocoImage {
  std::int64_t id = 0;
  int width = 0;
  int height = 0;
  std::string file_name;
};

// Subset of the COCO instance format:
//
//   {
//     "images": [{"id": int, "width": int, "height": int, "file_name": str}],
//     "annotations": [{"id": int, "image_id": int,
//                      "segmentation": [[x1, y1, x2, y2, ...], ...],
//                      "score": float (optional)}]
//   }
//
// Polygons are filled with RasterizePolygons. Categories and other keys are
// ignored.
struct CocoDataset {
  std::vector<CocoImage> images;             // file order
  std::map<std::int64_t, InstanceSet> sets;  // keyed by image id
  // Annotations whose polygons cover no pixel center; InstanceSet cannot hold
  // empty instances.
  std::vector<std::int64_t> dropped_annotations;
};

// Throws ParseError for malformed JSON or missing/mistyped fields,
// UnsupportedSegmentation for RLE segmentations, DanglingImageRef when an
// annotation names an unknown image id.
CocoDataset ParseCoco(std::string_view json_text);
CocoDataset LoadCoco(const std::filesystem::path& path);

}  // namespace cellmorph

#endif  // CELLMORPH_INGEST_COCO_H_
