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

#include "cellmorph/bench/timing.h"

#include <chrono>
#include <string>

#include "cellmorph/error.h"
#include "cellmorph/pipeline.h"

namespace cellmorph {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

StageTiming ToStage(const std::vector<double>& samples) {
  const AttributeStats s = MeanStd(samples);
  return {s.mean, s.std};
}

}  // namespace

TimingReport TimePipeline(const PipelineInput& input, int repetitions,
                          int threads) {
  if (repetitions < kMinBenchRepetitions) {
    throw Error(ErrorCode::kInvalidArgument,
                "benchmark needs at least " +
                    std::to_string(kMinBenchRepetitions) + " repetitions, got " +
                    std::to_string(repetitions));
  }
  const AnalyzeOptions options{threads, false};
  std::vector<double> total, ingest, geometry, summarize;
  std::vector<CellProperties> reference;

  for (int run = -1; run < repetitions; ++run) {
    const auto t0 = Clock::now();
    const InstanceSet set = input.ingest();
    const auto t1 = Clock::now();
    std::vector<CellProperties> cells = AnalyzeInstances(set, input.scale, options);
    const auto t2 = Clock::now();
    if (!cells.empty()) {
      [[maybe_unused]] const SizeSummary summary = Summarize(cells);
    }
    const auto t3 = Clock::now();

    if (run < 0) {
      reference = std::move(cells);
      continue;  // warm-up
    }
    if (cells != reference) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pipeline output changed between benchmark runs");
    }
    ingest.push_back(Seconds(t0, t1));
    geometry.push_back(Seconds(t1, t2));
    summarize.push_back(Seconds(t2, t3));
    total.push_back(Seconds(t0, t3));
  }

  TimingReport r;
  r.label = input.label;
  r.runs = repetitions;
  r.threads = threads;
  const StageTiming whole = ToStage(total);
  r.mean_seconds = whole.mean_seconds;
  r.std_seconds = whole.std_seconds;
  r.ingest = ToStage(ingest);
  r.geometry = ToStage(geometry);
  r.summarize = ToStage(summarize);
  r.cells = std::move(reference);
  return r;
}

}  // namespace cellmorph
