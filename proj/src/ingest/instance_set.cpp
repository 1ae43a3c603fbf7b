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

#include "cellmorph/ingest/instance_set.h"

#include <algorithm>
#include <string>

#include "cellmorph/error.h"

namespace cellmorph {

InstanceSet::InstanceSet(int frame_width, int frame_height)
    : frame_width_(frame_width), frame_height_(frame_height) {
  if (frame_width <= 0 || frame_height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "frame dimensions must be > 0");
  }
}

void InstanceSet::Add(InstanceId id, BinaryMask mask,
                      std::optional<double> score) {
  if (mask.width() != frame_width_ || mask.height() != frame_height_) {
    throw Error(ErrorCode::kFrameMismatch,
                "instance " + std::to_string(id) + " is " +
                    std::to_string(mask.width()) + "x" +
                    std::to_string(mask.height()) + ", frame is " +
                    std::to_string(frame_width_) + "x" +
                    std::to_string(frame_height_));
  }
  if (find(id) != nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate instance id " + std::to_string(id));
  }
  if (mask.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "instance " + std::to_string(id) + " has no foreground");
  }
  if (score && !(*score >= 0.0 && *score <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "score of instance " + std::to_string(id) +
                    " is outside [0, 1]");
  }
  instances_.push_back(Instance{id, std::move(mask), score});
}

bool InstanceSet::has_all_scores() const {
  return std::all_of(instances_.begin(), instances_.end(),
                     [](const Instance& i) { return i.score.has_value(); });
}

std::size_t InstanceSet::small_count() const {
  return static_cast<std::size_t>(
      std::count_if(instances_.begin(), instances_.end(),
                    [](const Instance& i) { return i.small(); }));
}

const Instance* InstanceSet::find(InstanceId id) const {
  for (const auto& inst : instances_) {
    if (inst.id == id) return &inst;
  }
  return nullptr;
}

}  // namespace cellmorph
