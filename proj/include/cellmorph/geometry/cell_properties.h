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

#ifndef CELLMORPH_GEOMETRY_CELL_PROPERTIES_H_
#define CELLMORPH_GEOMETRY_CELL_PROPERTIES_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "cellmorph/geometry/binary_mask.h"
#include "cellmorph/types.h"

namespace cellmorph {

// Physical pixel size. Construct through Make() to validate.
class ScaleConfig {
 public:
  // Throws InvalidArgument unless microns_per_pixel is finite and > 0.
  static ScaleConfig Make(double microns_per_pixel);

  double microns_per_pixel() const { return microns_per_pixel_; }

 private:
  explicit ScaleConfig(double s) : microns_per_pixel_(s) {}
  double microns_per_pixel_;
};

struct CellProperties {
  InstanceId instance_id = 0;
  std::uint64_t area_px = 0;
  double area_um2 = 0.0;
  double length_um = 0.0;     // 2a
  double width_um = 0.0;      // 2b
  double perimeter_um = 0.0;
  bool degenerate = false;    // collinear region, width is 0

  bool operator==(const CellProperties&) const = default;
};

// moments -> equivalent ellipse -> perimeter, scaled to microns.
// Throws EmptyRegion for an all-background mask.
CellProperties AnalyzeInstance(const BinaryMask& mask, const ScaleConfig& scale,
                               InstanceId id);

struct AttributeStats {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
};

struct SizeSummary {
  std::size_t count = 0;
  AttributeStats area_um2;
  AttributeStats length_um;
  AttributeStats width_um;
  AttributeStats perimeter_um;
};

// Throws EmptyCollection for an empty list.
SizeSummary Summarize(std::span<const CellProperties> props);

AttributeStats MeanStd(std::span<const double> values);

}  // namespace cellmorph

#endif  // CELLMORPH_GEOMETRY_CELL_PROPERTIES_H_
