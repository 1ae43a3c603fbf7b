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

#include "cellmorph/geometry/cell_properties.h"

#include <cmath>
#include <string>
#include <vector>

#include "cellmorph/error.h"
#include "cellmorph/geometry/ellipse.h"
#include "cellmorph/geometry/moments.h"

namespace cellmorph {

ScaleConfig ScaleConfig::Make(double microns_per_pixel) {
  if (!std::isfinite(microns_per_pixel) || microns_per_pixel <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "microns_per_pixel must be > 0, got " +
                    std::to_string(microns_per_pixel));
  }
  return ScaleConfig(microns_per_pixel);
}

CellProperties AnalyzeInstance(const BinaryMask& mask, const ScaleConfig& scale,
                               InstanceId id) {
  const RawMoments raw = ComputeRawMoments(mask);
  if (raw.m00 == 0) {
    throw Error(ErrorCode::kEmptyRegion,
                "instance " + std::to_string(id) + " has no foreground pixels");
  }
  const EquivalentEllipse ellipse =
      FitEquivalentEllipse(ComputeCentralMoments(raw));
  const double s = scale.microns_per_pixel();

  CellProperties p;
  p.instance_id = id;
  p.area_px = AreaPx(raw);
  p.area_um2 = static_cast<double>(p.area_px) * s * s;
  p.length_um = 2.0 * ellipse.semi_major_a * s;
  p.width_um = 2.0 * ellipse.semi_minor_b * s;
  p.perimeter_um = EllipsePerimeter(ellipse) * s;
  p.degenerate = ellipse.degenerate;
  return p;
}

AttributeStats MeanStd(std::span<const double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyCollection, "no values to summarize");
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size()))};
}

SizeSummary Summarize(std::span<const CellProperties> props) {
  if (props.empty()) {
    throw Error(ErrorCode::kEmptyCollection, "no cells to summarize");
  }
  std::vector<double> area, length, width, perimeter;
  for (const auto& p : props) {
    area.push_back(p.area_um2);
    length.push_back(p.length_um);
    width.push_back(p.width_um);
    perimeter.push_back(p.perimeter_um);
  }
  SizeSummary s;
  s.count = props.size();
  s.area_um2 = MeanStd(area);
  s.length_um = MeanStd(length);
  s.width_um = MeanStd(width);
  s.perimeter_um = MeanStd(perimeter);
  return s;
}

}  // namespace cellmorph
