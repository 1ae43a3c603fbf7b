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

#ifndef CELLMORPH_PREPROCESS_AUGMENT_H_
#define CELLMORPH_PREPROCESS_AUGMENT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "cellmorph/ingest/instance_set.h"
#include "cellmorph/preprocess/gray_image.h"
#include "cellmorph/types.h"

namespace cellmorph {

namespace aug {

struct Rot90 {};   // clockwise
struct Rot180 {};
struct HFlip {};   // mirror left-right
struct VFlip {};   // mirror top-bottom
struct Crop {
  PixelRect rect;
};
// Crop of a fixed size at a seed-chosen position.
struct RandomCrop {
  int width = 0;
  int height = 0;
};
// Mirror with the given probability; the decision comes from the seed.
struct RandomFlip {
  bool horizontal = true;
  double probability = 0.5;
};
// Resize to round(factor * W) x round(factor * H), at least 1 x 1.
// Intensities are bilinear, masks nearest-neighbour.
struct Scale {
  double factor = 1.0;
};
// Scale by a factor drawn uniformly from [min_factor, max_factor].
struct RandomScale {
  double min_factor = 1.0;
  double max_factor = 1.0;
};

}  // namespace aug

using AugmentOp = std::variant<aug::Rot90, aug::Rot180, aug::HFlip, aug::VFlip,
                               aug::Crop, aug::RandomCrop, aug::RandomFlip,
                               aug::Scale, aug::RandomScale>;

struct Augmented {
  GrayImage image;
  InstanceSet masks;
};

// Applies the same geometric transform to the image and every mask. Instances
// left with no pixels are dropped; ids and scores carry over. Every random
// decision is drawn from a generator seeded with `seed` only.
//
// Throws FrameMismatch when masks and image differ in size, InvalidRect for
// a crop outside the frame or with no area, InvalidArgument for a
// non-positive scale factor or a probability outside [0, 1].
Augmented Augment(const GrayImage& image, const InstanceSet& masks,
                  const AugmentOp& op, std::uint64_t seed);

// Parses the CLI spelling: rot90, rot180, hflip, vflip, crop:X,Y,W,H,
// random-crop:W,H, random-hflip[:P], random-vflip[:P], scale:F,
// random-scale:MIN,MAX.
// Throws InvalidArgument on anything else.
AugmentOp ParseAugmentOp(std::string_view text);
std::string AugmentOpName(const AugmentOp& op);

}  // namespace cellmorph

#endif  // CELLMORPH_PREPROCESS_AUGMENT_H_
