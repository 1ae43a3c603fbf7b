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

#include "cellmorph/ingest/components.h"

#include <cstdint>
#include <utility>
#include <vector>

namespace cellmorph {

InstanceSet ConnectedComponents(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  InstanceSet out(w, h);
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::pair<int, int>> stack;
  InstanceId next_id = 1;

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t seed = static_cast<std::size_t>(y) * w + x;
      if (!mask.at(x, y) || visited[seed]) continue;

      BinaryMask component(w, h);
      visited[seed] = 1;
      stack.assign(1, {x, y});
      while (!stack.empty()) {
        const auto [cx, cy] = stack.back();
        stack.pop_back();
        component.set(cx, cy);
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = cx + dx;
            const int ny = cy + dy;
            if (!mask.contains(nx, ny) || !mask.at(nx, ny)) continue;
            const std::size_t idx = static_cast<std::size_t>(ny) * w + nx;
            if (visited[idx]) continue;
            visited[idx] = 1;
            stack.emplace_back(nx, ny);
          }
        }
      }
      out.Add(next_id++, std::move(component));
    }
  }
  return out;
}

}  // namespace cellmorph
