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

#ifndef CELLMORPH_PIPELINE_H_
#define CELLMORPH_PIPELINE_H_

#include <cstddef>
#include <functional>
#include <vector>

#include "cellmorph/geometry/cell_properties.h"
#include "cellmorph/ingest/instance_set.h"

namespace cellmorph {

struct AnalyzeOptions {
  int threads = 1;             // > 1 splits instances across worker threads
  bool exclude_small = false;  // drop instances under kSmallInstancePixels
};

// AnalyzeInstance over a whole set. Output order follows set order whatever
// the thread count.
std::vector<CellProperties> AnalyzeInstances(const InstanceSet& set,
                                             const ScaleConfig& scale,
                                             const AnalyzeOptions& options = {});

// Calls fn(0) .. fn(n - 1) on up to `threads` workers. The first exception
// (lowest index) is rethrown after all workers finish.
void ParallelFor(std::size_t n, int threads,
                 const std::function<void(std::size_t)>& fn);

// Number of worker threads: `requested` if > 0, else CELLMORPH_THREADS from
// the environment if set to a positive integer, else 1.
int ResolveThreadCount(int requested);

}  // namespace cellmorph

#endif  // CELLMORPH_PIPELINE_H_
