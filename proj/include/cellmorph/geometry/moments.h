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

#ifndef CELLMORPH_GEOMETRY_MOMENTS_H_
#define CELLMORPH_GEOMETRY_MOMENTS_H_

#include <cstdint>

#include "cellmorph/geometry/binary_mask.h"

namespace cellmorph {

// Raw moments m_pq = sum x^p y^q f(x, y) over 0-based pixel coordinates.
// Unsigned 64-bit sums are exact for rasters up to 2^16 x 2^16.
struct RawMoments {
  std::uint64_t m00 = 0;
  std::uint64_t m10 = 0;
  std::uint64_t m01 = 0;
  std::uint64_t m11 = 0;
  std::uint64_t m20 = 0;
  std::uint64_t m02 = 0;

  bool operator==(const RawMoments&) const = default;
};

// Second-order moments about the centroid.
//
// The mu values are computed from the exact integer quantities
// m00 * mu_pq (for example m00 * m20 - m10^2) and divided by m00 once, so
// they are bit-identical for any translation of the same pixel set.
struct CentralMoments {
  double centroid_x = 0.0;
  double centroid_y = 0.0;
  double mu11 = 0.0;
  double mu20 = 0.0;
  double mu02 = 0.0;
  std::uint64_t m00 = 0;
  // True iff every foreground pixel lies on one straight line
  // (mu11^2 == mu20 * mu02, evaluated in exact integer arithmetic).
  bool collinear = false;
};

RawMoments ComputeRawMoments(const BinaryMask& mask);

inline std::uint64_t AreaPx(const RawMoments& m) { return m.m00; }

// Throws EmptyRegion when m.m00 == 0.
CentralMoments ComputeCentralMoments(const RawMoments& m);

}  // namespace cellmorph

#endif  // CELLMORPH_GEOMETRY_MOMENTS_H_
