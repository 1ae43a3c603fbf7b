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

#ifndef CELLMORPH_GEOMETRY_ELLIPSE_H_
#define CELLMORPH_GEOMETRY_ELLIPSE_H_

#include "cellmorph/geometry/moments.h"

namespace cellmorph {

// Ellipse with the same area-normalized second moments as a region.
struct EquivalentEllipse {
  double semi_major_a = 0.0;  // pixels
  double semi_minor_b = 0.0;  // pixels
  double orientation = 0.0;   // radians in (-pi/2, pi/2], major axis vs +x
  // Collinear pixel set; semi_minor_b is exactly 0.
  bool degenerate = false;
};

// Semi-axes from the centered second moments:
//   a, b = sqrt((mu20 + mu02 +/- sqrt((mu20 - mu02)^2 + 4 mu11^2)) / (m00 / 2))
// Throws EmptyRegion when c.m00 == 0.
EquivalentEllipse FitEquivalentEllipse(const CentralMoments& c);

// 2 pi sqrt((a^2 + b^2) / 2), in the units of a and b.
// Throws InvalidArgument unless a >= b >= 0.
double EllipsePerimeter(const EquivalentEllipse& e);

}  // namespace cellmorph

#endif  // CELLMORPH_GEOMETRY_ELLIPSE_H_
