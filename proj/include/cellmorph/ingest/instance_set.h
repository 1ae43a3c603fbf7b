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

#ifndef CELLMORPH_INGEST_INSTANCE_SET_H_
#define CELLMORPH_INGEST_INSTANCE_SET_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "cellmorph/geometry/binary_mask.h"
#include "cellmorph/types.h"

namespace cellmorph {

// Instances smaller than this are kept but reported as small.
inline constexpr std::int64_t kSmallInstancePixels = 4;

struct Instance {
  InstanceId id = 0;
  BinaryMask mask;
  std::optional<double> score;  // confidence in [0, 1], predictions only

  bool small() const { return mask.count() < kSmallInstancePixels; }
};

// Per-cell masks sharing one frame. Overlap between members is allowed
// (predicted instances may overlap); ids are unique and every member has at
// least one foreground pixel.
class InstanceSet {
 public:
  // Throws InvalidArgument unless width, height > 0.
  InstanceSet(int frame_width, int frame_height);

  int frame_width() const { return frame_width_; }
  int frame_height() const { return frame_height_; }

  // Throws FrameMismatch for a mask of another size, InvalidArgument for a
  // duplicate id, an empty mask, or a score outside [0, 1].
  void Add(InstanceId id, BinaryMask mask,
           std::optional<double> score = std::nullopt);

  const std::vector<Instance>& instances() const { return instances_; }
  std::size_t size() const { return instances_.size(); }
  bool empty() const { return instances_.empty(); }
  const Instance& operator[](std::size_t i) const { return instances_[i]; }

  bool has_all_scores() const;
  std::size_t small_count() const;
  const Instance* find(InstanceId id) const;

  bool same_frame(const InstanceSet& other) const {
    return frame_width_ == other.frame_width_ &&
           frame_height_ == other.frame_height_;
  }

 private:
  int frame_width_;
  int frame_height_;
  std::vector<Instance> instances_;
};

}  // namespace cellmorph

#endif  // CELLMORPH_INGEST_INSTANCE_SET_H_
