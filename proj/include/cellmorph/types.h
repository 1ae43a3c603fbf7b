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

#ifndef CELLMORPH_TYPES_H_
#define CELLMORPH_TYPES_H_

#include <cstdint>

namespace cellmorph {

// Opaque per-instance identifier. Label maps use the label value, COCO
// files the annotation id, connected components the discovery index.
using InstanceId = std::int64_t;

// Half-open pixel rectangle [x, x + width) x [y, y + height).
struct PixelRect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  bool operator==(const PixelRect&) const = default;
};

}  // namespace cellmorph

#endif  // CELLMORPH_TYPES_H_
