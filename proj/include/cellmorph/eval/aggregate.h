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

#ifndef CELLMORPH_EVAL_AGGREGATE_H_
#define CELLMORPH_EVAL_AGGREGATE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "cellmorph/eval/metrics.h"
#include "cellmorph/geometry/cell_properties.h"

namespace cellmorph {

// Multi-image roll-up of per-image EvalReports.
struct AggregateEval {
  std::size_t images = 0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  PrecisionRecallF1 pooled;      // from summed TP / FP / FN
  AttributeStats f1_per_image;   // mean and population std of per-image F1
  double dice_mean = 0.0;
  std::optional<ApSummary> ap_mean;  // only if every image has AP
};

// Throws EmptyCollection for no reports.
AggregateEval Aggregate(std::span<const EvalReport> reports);

struct BootstrapF1 {
  int resamples = 0;
  double mean = 0.0;
  double std = 0.0;
  double lo95 = 0.0;  // 2.5th percentile
  double hi95 = 0.0;  // 97.5th percentile
};

// Resamples images with replacement and recomputes the pooled F1.
// Throws InvalidArgument for resamples < 1, EmptyCollection for no reports.
BootstrapF1 BootstrapPooledF1(std::span<const EvalReport> reports,
                              int resamples, std::uint64_t seed);

}  // namespace cellmorph

#endif  // CELLMORPH_EVAL_AGGREGATE_H_
