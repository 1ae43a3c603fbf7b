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

#ifndef CELLMORPH_BENCH_TIMING_H_
#define CELLMORPH_BENCH_TIMING_H_

#include <functional>
#include <string>
#include <vector>

#include "cellmorph/geometry/cell_properties.h"
#include "cellmorph/ingest/instance_set.h"

namespace cellmorph {

inline constexpr int kMinBenchRepetitions = 3;

// What the benchmark measures. Segmentation (network inference) happens
// upstream of this library and is never part of the timed path.
inline constexpr const char* kBenchScope =
    "post-segmentation geometry path only (mask ingest, moment/ellipse "
    "geometry, summary); excludes segmentation inference";

struct StageTiming {
  double mean_seconds = 0.0;
  double std_seconds = 0.0;  // population std over runs
};

struct TimingReport {
  std::string label;
  int runs = 0;
  int threads = 1;
  double mean_seconds = 0.0;  // whole pipeline
  double std_seconds = 0.0;
  StageTiming ingest;
  StageTiming geometry;
  StageTiming summarize;
  // Output of the final timed run; identical across runs.
  std::vector<CellProperties> cells;
};

struct PipelineInput {
  std::string label;
  // Produces the instance set, e.g. by decoding a label map from disk.
  std::function<InstanceSet()> ingest;
  ScaleConfig scale = ScaleConfig::Make(1.0);
};

// Runs ingest -> AnalyzeInstances -> Summarize once as a discarded warm-up,
// then `repetitions` timed times on a steady clock. Throws InvalidArgument if
// repetitions < kMinBenchRepetitions, and InvalidArgument if two runs
// disagree on the computed cells. Pipeline errors propagate.
TimingReport TimePipeline(const PipelineInput& input, int repetitions,
                          int threads = 1);

}  // namespace cellmorph

#endif  // CELLMORPH_BENCH_TIMING_H_
