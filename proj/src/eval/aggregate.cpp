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

#include "cellmorph/eval/aggregate.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cellmorph/error.h"

namespace cellmorph {

AggregateEval Aggregate(std::span<const EvalReport> reports) {
  if (reports.empty()) {
    throw Error(ErrorCode::kEmptyCollection, "no evaluation reports");
  }
  AggregateEval agg;
  agg.images = reports.size();
  std::vector<double> f1s;
  double dice = 0.0;
  bool all_ap = true;
  ApSummary ap_sum;
  for (const auto& r : reports) {
    agg.tp += r.match.tp;
    agg.fp += r.match.fp;
    agg.fn += r.match.fn;
    f1s.push_back(r.scores.f1);
    dice += r.dice;
    if (r.ap) {
      ap_sum.ap += r.ap->ap;
      ap_sum.ap50 += r.ap->ap50;
      ap_sum.ap75 += r.ap->ap75;
    } else {
      all_ap = false;
    }
  }
  const double n = static_cast<double>(reports.size());
  agg.pooled = ComputePrecisionRecallF1(agg.tp, agg.fp, agg.fn);
  agg.f1_per_image = MeanStd(f1s);
  agg.dice_mean = dice / n;
  if (all_ap) {
    agg.ap_mean = ApSummary{ap_sum.ap / n, ap_sum.ap50 / n, ap_sum.ap75 / n};
  }
  return agg;
}

BootstrapF1 BootstrapPooledF1(std::span<const EvalReport> reports,
                              int resamples, std::uint64_t seed) {
  if (reports.empty()) {
    throw Error(ErrorCode::kEmptyCollection, "no evaluation reports");
  }
  if (resamples < 1) {
    throw Error(ErrorCode::kInvalidArgument, "bootstrap needs >= 1 resample");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, reports.size() - 1);
  std::vector<double> f1s;
  f1s.reserve(resamples);
  for (int b = 0; b < resamples; ++b) {
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const auto& r = reports[pick(rng)];
      tp += r.match.tp;
      fp += r.match.fp;
      fn += r.match.fn;
    }
    f1s.push_back(ComputePrecisionRecallF1(tp, fp, fn).f1);
  }
  const AttributeStats stats = MeanStd(f1s);
  std::sort(f1s.begin(), f1s.end());
  auto quantile = [&](double q) {
    const auto idx = static_cast<std::size_t>(std::floor(q * (f1s.size() - 1)));
    return f1s[idx];
  };
  return BootstrapF1{resamples, stats.mean, stats.std, quantile(0.025),
                     quantile(0.975)};
}

}  // namespace cellmorph
