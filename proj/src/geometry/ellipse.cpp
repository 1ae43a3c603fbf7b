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

#include "cellmorph/geometry/ellipse.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cellmorph/error.h"

namespace cellmorph {

EquivalentEllipse FitEquivalentEllipse(const CentralMoments& c) {
  if (c.m00 == 0) {
    throw Error(ErrorCode::kEmptyRegion, "ellipse fit needs m00 > 0");
  }
  const double half_area = static_cast<double>(c.m00) / 2.0;
  const double sum = c.mu20 + c.mu02;
  const double diff = c.mu20 - c.mu02;
  const double root = std::sqrt(diff * diff + 4.0 * c.mu11 * c.mu11);

  EquivalentEllipse e;
  e.semi_major_a = std::sqrt((sum + root) / half_area);
  // Rounding can push sum - root a few ulps below zero for thin regions.
  e.semi_minor_b = std::sqrt(std::max(0.0, sum - root) / half_area);
  e.degenerate = c.collinear;
  if (e.degenerate) e.semi_minor_b = 0.0;
  e.semi_minor_b = std::min(e.semi_minor_b, e.semi_major_a);

  e.orientation = 0.5 * std::atan2(2.0 * c.mu11, diff);
  if (e.orientation <= -std::numbers::pi / 2) e.orientation += std::numbers::pi;
  return e;
}

double EllipsePerimeter(const EquivalentEllipse& e) {
  const double a = e.semi_major_a;
  const double b = e.semi_minor_b;
  if (!(b >= 0.0) || !(a >= b)) {
    throw Error(ErrorCode::kInvalidArgument,
                "perimeter requires semi_major_a >= semi_minor_b >= 0");
  }
  return 2.0 * std::numbers::pi * std::sqrt((a * a + b * b) / 2.0);
}

}  // namespace cellmorph
