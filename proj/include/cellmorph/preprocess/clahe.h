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

#ifndef CELLMORPH_PREPROCESS_CLAHE_H_
#define CELLMORPH_PREPROCESS_CLAHE_H_

#include <array>
#include <cstdint>
#include <span>

#include "cellmorph/preprocess/gray_image.h"

namespace cellmorph {

// Tune per dataset.
struct ClaheParams {
  int tiles_x = 8;
  int tiles_y = 8;
  // Per-bin cap as a fraction of the tile's pixel count, in (0, 1].
  double clip_limit = 0.01;
};

using ToneMap = std::array<std::uint8_t, 256>;

// Equalization mapping of a 256-bin histogram holding `total` samples:
// round(cdf(v) * 255 / total).
ToneMap EqualizationMap(std::span<const std::int64_t, 256> hist,
                        std::int64_t total);

// Contrast-limited adaptive histogram equalization.
//
// The image is split into tiles_x x tiles_y equal tiles of
// ceil(W / tiles_x) x ceil(H / tiles_y) pixels; when the dimensions do not
// divide evenly the right and bottom borders are extended by mirroring
// (reflect-101). Each tile histogram is clipped at
// max(1, floor(clip_limit * tile_pixels)) per bin and the clipped excess is
// spread uniformly over all 256 bins in one pass. Output pixels bilinearly
// interpolate the mapped values of the four nearest tile centers.
//
// Throws InvalidArgument for bad params, ImageTooSmall when the image has
// fewer columns than tiles_x or rows than tiles_y.
GrayImage Clahe(const GrayImage& img, const ClaheParams& params);

}  // namespace cellmorph

#endif  // CELLMORPH_PREPROCESS_CLAHE_H_
