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

#ifndef CELLMORPH_INGEST_POLYGON_H_
#define CELLMORPH_INGEST_POLYGON_H_

#include <span>
#include <vector>

#include "cellmorph/geometry/binary_mask.h"

namespace cellmorph {

// Vertex in continuous image coordinates: pixel (i, j) covers
// [i, i + 1) x [j, j + 1), so its center is (i + 0.5, j + 0.5).
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

using Polygon = std::vector<Point2>;

// Even-odd scanline fill. A pixel is set iff its center is inside the
// polygon; a center exactly on a left or top edge counts as inside, on a
// right or bottom edge as outside. Output is clipped to the frame.
// Throws InvalidArgument for fewer than 3 vertices.
BinaryMask RasterizePolygon(const Polygon& polygon, int width, int height);

// Union of the per-part fills, as for a multi-part COCO segmentation.
BinaryMask RasterizePolygons(std::span<const Polygon> parts, int width,
                             int height);

}  // namespace cellmorph

#endif  // CELLMORPH_INGEST_POLYGON_H_
