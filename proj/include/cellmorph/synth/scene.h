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

#ifndef CELLMORPH_SYNTH_SCENE_H_
#define CELLMORPH_SYNTH_SCENE_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "cellmorph/geometry/binary_mask.h"
#include "cellmorph/ingest/instance_set.h"
#include "cellmorph/preprocess/gray_image.h"
#include "cellmorph/types.h"

namespace cellmorph {

// Ellipse in pixel-index coordinates (the center of pixel (i, j) is (i, j)).
struct EllipseParams {
  double cx = 0.0;
  double cy = 0.0;
  double a = 0.0;      // semi-major, pixels
  double b = 0.0;      // semi-minor, pixels
  double theta = 0.0;  // major axis angle from +x, radians
};

// A pixel is foreground iff its center satisfies
// (u / a)^2 + (v / b)^2 <= 1 in the ellipse's rotated frame.
// Throws InvalidArgument unless a >= b > 0, OutOfFrame if no pixel qualifies.
BinaryMask RasterizeEllipse(const EllipseParams& e, int width, int height);

struct SceneConfig {
  int width = 256;
  int height = 229;
  int n_cells = 0;
  double a_min = 8.0;
  double a_max = 20.0;
  double b_min = 4.0;
  double b_max = 8.0;
  double noise_sigma = 8.0;     // Gaussian noise std, intensity units
  std::uint8_t background = 40;
  std::uint8_t foreground = 170;
  // Keep at least one background pixel between cells (no 8-adjacency).
  bool non_overlapping = true;
  int max_attempts_per_cell = 1000;
};

struct SyntheticScene {
  GrayImage image;
  InstanceSet truth;                 // ids 1..n in placement order
  std::vector<EllipseParams> params; // params[k] belongs to id k + 1
};

// Rejection-samples ellipses that lie fully inside the frame: a and b are
// uniform in their ranges (swapped if b > a), theta uniform in (-pi/2, pi/2],
// the center uniform over positions that keep the bounding box in frame.
// Output depends on `seed` only.
//
// Throws InvalidArgument for bad ranges or counts, PlacementFailure when a
// cell cannot be placed within max_attempts_per_cell draws.
SyntheticScene GenerateScene(const SceneConfig& config, std::uint64_t seed);

// CSV with header "id,cx,cy,a,b,theta".
void WriteTruthCsv(const std::filesystem::path& path,
                   const std::vector<EllipseParams>& params);

}  // namespace cellmorph

#endif  // CELLMORPH_SYNTH_SCENE_H_
