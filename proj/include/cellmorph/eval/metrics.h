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

#ifndef CELLMORPH_EVAL_METRICS_H_
#define CELLMORPH_EVAL_METRICS_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "cellmorph/geometry/binary_mask.h"
#include "cellmorph/ingest/instance_set.h"
#include "cellmorph/types.h"

namespace cellmorph {

inline constexpr double kDefaultIouThreshold = 0.5;

// |A n B| / |A u B|, 0 when both are empty. Throws FrameMismatch.
double Iou(const BinaryMask& a, const BinaryMask& b);

// Dense IoU table, rows = predictions, columns = ground truth, in set order.
// Bounding boxes prune non-overlapping pairs.
std::vector<std::vector<double>> IouMatrix(const InstanceSet& pred,
                                           const InstanceSet& gt);

struct MatchPair {
  InstanceId pred_id = 0;
  InstanceId gt_id = 0;
  double iou = 0.0;
};

struct MatchResult {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::vector<MatchPair> pairs;
  double iou_threshold = kDefaultIouThreshold;
};

// Greedy one-to-one matching: candidate pairs with IoU >= threshold are taken
// in descending IoU order, ties by (pred_id, gt_id) ascending, skipping any
// pair whose prediction or ground truth is already used.
// Throws FrameMismatch, or InvalidArgument for a threshold outside (0, 1].
MatchResult MatchInstances(const InstanceSet& pred, const InstanceSet& gt,
                           double iou_threshold = kDefaultIouThreshold);

struct PrecisionRecallF1 {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// precision = TP / (TP + FP), recall = TP / (TP + FN),
// F1 = 2 P R / (P + R). Zero denominators give 0.
PrecisionRecallF1 ComputePrecisionRecallF1(std::size_t tp, std::size_t fp,
                                           std::size_t fn);
inline PrecisionRecallF1 ComputePrecisionRecallF1(const MatchResult& m) {
  return ComputePrecisionRecallF1(m.tp, m.fp, m.fn);
}

// All-point interpolated average precision at one IoU threshold.
//
// Predictions are ranked by descending score (ties by id); each one claims
// the unmatched ground truth with the highest IoU >= threshold, if any. The
// result is the area under the monotone precision envelope over recall.
// Returns 0 when there are no predictions or no ground truth.
// Throws MissingScores if any prediction lacks a score.
double AveragePrecision(const InstanceSet& pred, const InstanceSet& gt,
                        double iou_threshold);

struct ApSummary {
  double ap = 0.0;    // mean over thresholds 0.50, 0.55, ..., 0.95
  double ap50 = 0.0;
  double ap75 = 0.0;
};

ApSummary ComputeApSummary(const InstanceSet& pred, const InstanceSet& gt);

// Pixel-level Dice of the union of predictions vs the union of ground truth:
// 2 |P n G| / (|P| + |G|), 0 when both are empty.
double PixelDice(const InstanceSet& pred, const InstanceSet& gt);

struct EvalReport {
  std::size_t num_pred = 0;
  std::size_t num_gt = 0;
  MatchResult match;
  PrecisionRecallF1 scores;
  double dice = 0.0;
  std::optional<ApSummary> ap;  // only when every prediction has a score
};

EvalReport Evaluate(const InstanceSet& pred, const InstanceSet& gt,
                    double iou_threshold = kDefaultIouThreshold);

}  // namespace cellmorph

#endif  // CELLMORPH_EVAL_METRICS_H_
