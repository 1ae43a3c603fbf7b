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

#include "cellmorph/ingest/polygon.h"

#include <algorithm>
#include <cmath>

#include "cellmorph/error.h"

namespace cellmorph {
namespace {

void FillInto(const Polygon& poly, BinaryMask& mask) {
  if (poly.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "polygon needs at least 3 vertices");
  }
  const int w = mask.width();
  const int h = mask.height();
  double ymin = poly[0].y, ymax = poly[0].y;
  for (const auto& p : poly) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const int row_begin =
      static_cast<int>(std::clamp(std::ceil(ymin - 0.5), 0.0, double(h)));
  const int row_end =
      static_cast<int>(std::clamp(std::ceil(ymax - 0.5), 0.0, double(h)));

  std::vector<double> crossings;
  for (int y = row_begin; y < row_end; ++y) {
    const double yc = y + 0.5;
    crossings.clear();
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
      const Point2& a = poly[i];
      const Point2& b = poly[j];
      // Half-open in y: the lower endpoint is on the edge, the upper is not.
      if ((a.y > yc) != (b.y > yc)) {
        crossings.push_back((b.x - a.x) * (yc - a.y) / (b.y - a.y) + a.x);
      }
    }
    std::sort(crossings.begin(), crossings.end());
    for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
      // Centers x + 0.5 in [left, right).
      const double left = std::ceil(crossings[k] - 0.5);
      const double right = std::ceil(crossings[k + 1] - 0.5);
      const int x0 = static_cast<int>(std::clamp(left, 0.0, double(w)));
      const int x1 = static_cast<int>(std::clamp(right, 0.0, double(w)));
      for (int x = x0; x < x1; ++x) mask.set(x, y);
    }
  }
}

}  // namespace

BinaryMask RasterizePolygon(const Polygon& polygon, int width, int height) {
  BinaryMask mask(width, height);
  FillInto(polygon, mask);
  return mask;
}

BinaryMask RasterizePolygons(std::span<const Polygon> parts, int width,
                             int height) {
  BinaryMask mask(width, height);
  for (const auto& part : parts) FillInto(part, mask);
  return mask;
}

}  // namespace cellmorph
