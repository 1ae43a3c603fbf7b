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

#include "cellmorph/eval/metrics.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "cellmorph/error.h"

namespace cellmorph {
namespace {

void CheckFrames(const InstanceSet& pred, const InstanceSet& gt) {
  if (!pred.same_frame(gt)) {
    throw Error(ErrorCode::kFrameMismatch,
                "prediction frame " + std::to_string(pred.frame_width()) + "x" +
                    std::to_string(pred.frame_height()) +
                    " differs from ground truth " +
                    std::to_string(gt.frame_width()) + "x" +
                    std::to_string(gt.frame_height()));
  }
}

void CheckThreshold(double thr) {
  if (!(thr > 0.0 && thr <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "IoU threshold must be in (0, 1]");
  }
}

struct MaskInfo {
  std::int64_t count = 0;
  std::optional<PixelRect> box;
};

MaskInfo Describe(const BinaryMask& m) { return {m.count(), m.bounds()}; }

std::int64_t Intersection(const BinaryMask& a, const MaskInfo& ia,
                          const BinaryMask& b, const MaskInfo& ib) {
  if (!ia.box || !ib.box) return 0;
  const int x0 = std::max(ia.box->x, ib.box->x);
  const int y0 = std::max(ia.box->y, ib.box->y);
  const int x1 = std::min(ia.box->x + ia.box->width, ib.box->x + ib.box->width);
  const int y1 = std::min(ia.box->y + ia.box->height, ib.box->y + ib.box->height);
  std::int64_t n = 0;
  for (int y = y0; y < y1; ++y) {
    const auto ra = a.row(y);
    const auto rb = b.row(y);
    for (int x = x0; x < x1; ++x) n += ra[x] & rb[x];
  }
  return n;
}

double IouFromCounts(std::int64_t inter, std::int64_t ca, std::int64_t cb) {
  const std::int64_t uni = ca + cb - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace

double Iou(const BinaryMask& a, const BinaryMask& b) {
  if (!a.same_frame(b)) {
    throw Error(ErrorCode::kFrameMismatch, "IoU of masks with different frames");
  }
  const MaskInfo ia = Describe(a);
  const MaskInfo ib = Describe(b);
  return IouFromCounts(Intersection(a, ia, b, ib), ia.count, ib.count);
}

std::vector<std::vector<double>> IouMatrix(const InstanceSet& pred,
                                           const InstanceSet& gt) {
  CheckFrames(pred, gt);
  std::vector<MaskInfo> pi, gi;
  for (const auto& p : pred.instances()) pi.push_back(Describe(p.mask));
  for (const auto& g : gt.instances()) gi.push_back(Describe(g.mask));
  std::vector<std::vector<double>> m(pred.size(), std::vector<double>(gt.size(), 0.0));
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (std::size_t j = 0; j < gt.size(); ++j) {
      const std::int64_t inter =
          Intersection(pred[i].mask, pi[i], gt[j].mask, gi[j]);
      m[i][j] = IouFromCounts(inter, pi[i].count, gi[j].count);
    }
  }
  return m;
}

MatchResult MatchInstances(const InstanceSet& pred, const InstanceSet& gt,
                           double iou_threshold) {
  CheckThreshold(iou_threshold);
  const auto ious = IouMatrix(pred, gt);

  struct Candidate {
    double iou;
    std::size_t p;
    std::size_t g;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (std::size_t j = 0; j < gt.size(); ++j) {
      if (ious[i][j] > 0.0 && ious[i][j] >= iou_threshold) {
        cands.push_back({ious[i][j], i, j});
      }
    }
  }
  std::sort(cands.begin(), cands.end(), [&](const Candidate& a, const Candidate& b) {
    if (a.iou != b.iou) return a.iou > b.iou;
    return std::tie(pred[a.p].id, gt[a.g].id) < std::tie(pred[b.p].id, gt[b.g].id);
  });

  MatchResult r;
  r.iou_threshold = iou_threshold;
  std::vector<bool> pred_used(pred.size()), gt_used(gt.size());
  for (const auto& c : cands) {
    if (pred_used[c.p] || gt_used[c.g]) continue;
    pred_used[c.p] = gt_used[c.g] = true;
    r.pairs.push_back({pred[c.p].id, gt[c.g].id, c.iou});
  }
  r.tp = r.pairs.size();
  r.fp = pred.size() - r.tp;
  r.fn = gt.size() - r.tp;
  return r;
}

PrecisionRecallF1 ComputePrecisionRecallF1(std::size_t tp, std::size_t fp,
                                           std::size_t fn) {
  PrecisionRecallF1 s;
  if (tp + fp > 0) s.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  if (tp + fn > 0) s.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  if (s.precision + s.recall > 0.0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

namespace {

double AveragePrecisionFromIous(const InstanceSet& pred, const InstanceSet& gt,
                                const std::vector<std::vector<double>>& ious,
                                double thr) {
  if (pred.empty() || gt.empty()) return 0.0;
  std::vector<std::size_t> order(pred.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (*pred[a].score != *pred[b].score) return *pred[a].score > *pred[b].score;
    return pred[a].id < pred[b].id;
  });

  std::vector<bool> gt_used(gt.size());
  std::vector<double> precision, recall;
  std::size_t tp = 0;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::size_t i = order[rank];
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < gt.size(); ++j) {
      if (gt_used[j] || ious[i][j] <= 0.0 || ious[i][j] < thr) continue;
      if (!best || ious[i][j] > ious[i][*best]) best = j;
    }
    if (best) {
      gt_used[*best] = true;
      ++tp;
    }
    precision.push_back(static_cast<double>(tp) / static_cast<double>(rank + 1));
    recall.push_back(static_cast<double>(tp) / static_cast<double>(gt.size()));
  }
  for (std::size_t k = precision.size() - 1; k-- > 0;) {
    precision[k] = std::max(precision[k], precision[k + 1]);
  }
  double ap = 0.0;
  double prev_recall = 0.0;
  for (std::size_t k = 0; k < precision.size(); ++k) {
    ap += (recall[k] - prev_recall) * precision[k];
    prev_recall = recall[k];
  }
  return ap;
}

void CheckScores(const InstanceSet& pred) {
  for (const auto& p : pred.instances()) {
    if (!p.score) {
      throw Error(ErrorCode::kMissingScores,
                  "prediction " + std::to_string(p.id) + " has no score");
    }
  }
}

}  // namespace

double AveragePrecision(const InstanceSet& pred, const InstanceSet& gt,
                        double iou_threshold) {
  CheckThreshold(iou_threshold);
  CheckScores(pred);
  return AveragePrecisionFromIous(pred, gt, IouMatrix(pred, gt), iou_threshold);
}

ApSummary ComputeApSummary(const InstanceSet& pred, const InstanceSet& gt) {
  CheckScores(pred);
  const auto ious = IouMatrix(pred, gt);
  ApSummary s;
  double sum = 0.0;
  for (int step = 0; step < 10; ++step) {
    const double thr = (50 + 5 * step) / 100.0;
    const double ap = AveragePrecisionFromIous(pred, gt, ious, thr);
    sum += ap;
    if (step == 0) s.ap50 = ap;
    if (step == 5) s.ap75 = ap;
  }
  s.ap = sum / 10.0;
  return s;
}

double PixelDice(const InstanceSet& pred, const InstanceSet& gt) {
  CheckFrames(pred, gt);
  const std::size_t n = static_cast<std::size_t>(pred.frame_width()) * pred.frame_height();
  std::vector<std::uint8_t> p(n, 0), g(n, 0);
  for (const auto& inst : pred.instances()) {
    const auto px = inst.mask.pixels();
    for (std::size_t i = 0; i < n; ++i) p[i] |= px[i];
  }
  for (const auto& inst : gt.instances()) {
    const auto px = inst.mask.pixels();
    for (std::size_t i = 0; i < n; ++i) g[i] |= px[i];
  }
  std::int64_t inter = 0, sp = 0, sg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    inter += p[i] & g[i];
    sp += p[i];
    sg += g[i];
  }
  if (sp + sg == 0) return 0.0;
  return 2.0 * static_cast<double>(inter) / static_cast<double>(sp + sg);
}

EvalReport Evaluate(const InstanceSet& pred, const InstanceSet& gt,
                    double iou_threshold) {
  EvalReport r;
  r.num_pred = pred.size();
  r.num_gt = gt.size();
  r.match = MatchInstances(pred, gt, iou_threshold);
  r.scores = ComputePrecisionRecallF1(r.match);
  r.dice = PixelDice(pred, gt);
  if (pred.has_all_scores()) r.ap = ComputeApSummary(pred, gt);
  return r;
}

}  // namespace cellmorph
