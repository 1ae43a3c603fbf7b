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

#include "cellmorph/report/report.h"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "cellmorph/error.h"

namespace cellmorph {

using nlohmann::json;

std::string FormatPercent(double fraction) {
  return fmt::format("{:.2f}", fraction * 100.0);
}

double RoundedPercent(double fraction) {
  return std::round(fraction * 10000.0) / 100.0;
}

std::string FormatMeanStd(const AttributeStats& s, int decimals) {
  return fmt::format("{:.{}f} ± {:.{}f}", s.mean, decimals, s.std, decimals);
}

std::string CellsCsv(std::span<const CellProperties> cells) {
  std::string out(kCellsCsvHeader);
  out += '\n';
  for (const auto& c : cells) {
    out += fmt::format("{},{},{:.6f},{:.6f},{:.6f},{:.6f},{}\n", c.instance_id,
                       c.area_px, c.area_um2, c.length_um, c.width_um,
                       c.perimeter_um, c.degenerate ? 1 : 0);
  }
  return out;
}

json CellsJson(std::span<const CellProperties> cells) {
  json arr = json::array();
  for (const auto& c : cells) {
    arr.push_back({{"id", c.instance_id},
                   {"area_px", c.area_px},
                   {"area_um2", c.area_um2},
                   {"length_um", c.length_um},
                   {"width_um", c.width_um},
                   {"perimeter_um", c.perimeter_um},
                   {"degenerate_flag", c.degenerate ? 1 : 0}});
  }
  return arr;
}

json SizeSummaryJson(std::span<const CellProperties> cells,
                     std::size_t small_instances) {
  json j;
  j["count"] = cells.size();
  j["small_instances"] = small_instances;
  auto stat = [](const AttributeStats& s) {
    return json{{"mean", s.mean}, {"std", s.std}, {"table", FormatMeanStd(s)}};
  };
  if (cells.empty()) {
    for (const char* key : {"area_um2", "length_um", "width_um", "perimeter_um"}) {
      j[key] = nullptr;
    }
    return j;
  }
  const SizeSummary s = Summarize(cells);
  j["area_um2"] = stat(s.area_um2);
  j["length_um"] = stat(s.length_um);
  j["width_um"] = stat(s.width_um);
  j["perimeter_um"] = stat(s.perimeter_um);
  return j;
}

namespace {

std::string OptionalPercent(const std::optional<ApSummary>& ap,
                            double ApSummary::*field) {
  return ap ? FormatPercent((*ap).*field) : std::string();
}

json OptionalApJson(const std::optional<ApSummary>& ap) {
  if (!ap) return nullptr;
  return json{{"ap_pct", RoundedPercent(ap->ap)},
              {"ap50_pct", RoundedPercent(ap->ap50)},
              {"ap75_pct", RoundedPercent(ap->ap75)}};
}

}  // namespace

std::string EvalCsvRow(std::string_view image, const EvalReport& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", image,
                     r.num_pred, r.num_gt, r.match.tp, r.match.fp, r.match.fn,
                     FormatPercent(r.scores.precision),
                     FormatPercent(r.scores.recall), FormatPercent(r.scores.f1),
                     FormatPercent(r.dice), OptionalPercent(r.ap, &ApSummary::ap),
                     OptionalPercent(r.ap, &ApSummary::ap50),
                     OptionalPercent(r.ap, &ApSummary::ap75));
}

std::string EvalOverallCsvRow(const AggregateEval& a) {
  return fmt::format("ALL,{},{},{},{},{},{},{},{},{},{},{},{}\n", a.tp + a.fp,
                     a.tp + a.fn, a.tp, a.fp, a.fn,
                     FormatPercent(a.pooled.precision),
                     FormatPercent(a.pooled.recall), FormatPercent(a.pooled.f1),
                     FormatPercent(a.dice_mean),
                     OptionalPercent(a.ap_mean, &ApSummary::ap),
                     OptionalPercent(a.ap_mean, &ApSummary::ap50),
                     OptionalPercent(a.ap_mean, &ApSummary::ap75));
}

json EvalReportJson(const EvalReport& r) {
  json pairs = json::array();
  for (const auto& p : r.match.pairs) {
    pairs.push_back({{"pred_id", p.pred_id}, {"gt_id", p.gt_id}, {"iou", p.iou}});
  }
  return json{{"num_pred", r.num_pred},
              {"num_gt", r.num_gt},
              {"iou_threshold", r.match.iou_threshold},
              {"tp", r.match.tp},
              {"fp", r.match.fp},
              {"fn", r.match.fn},
              {"precision_pct", RoundedPercent(r.scores.precision)},
              {"recall_pct", RoundedPercent(r.scores.recall)},
              {"f1_pct", RoundedPercent(r.scores.f1)},
              {"dice_pct", RoundedPercent(r.dice)},
              {"ap", OptionalApJson(r.ap)},
              {"pairs", pairs}};
}

json AggregateJson(const AggregateEval& a) {
  return json{{"images", a.images},
              {"tp", a.tp},
              {"fp", a.fp},
              {"fn", a.fn},
              {"precision_pct", RoundedPercent(a.pooled.precision)},
              {"recall_pct", RoundedPercent(a.pooled.recall)},
              {"f1_pct", RoundedPercent(a.pooled.f1)},
              {"f1_per_image_pct",
               {{"mean", RoundedPercent(a.f1_per_image.mean)},
                {"std", RoundedPercent(a.f1_per_image.std)},
                {"table", FormatMeanStd({a.f1_per_image.mean * 100.0,
                                         a.f1_per_image.std * 100.0})}}},
              {"dice_mean_pct", RoundedPercent(a.dice_mean)},
              {"ap", OptionalApJson(a.ap_mean)}};
}

json BootstrapJson(const BootstrapF1& b) {
  return json{{"resamples", b.resamples},
              {"f1_mean_pct", RoundedPercent(b.mean)},
              {"f1_std_pct", RoundedPercent(b.std)},
              {"f1_lo95_pct", RoundedPercent(b.lo95)},
              {"f1_hi95_pct", RoundedPercent(b.hi95)}};
}

json TimingJson(const TimingReport& r) {
  auto stage = [](const StageTiming& s) {
    return json{{"mean_seconds", s.mean_seconds}, {"std_seconds", s.std_seconds}};
  };
  return json{{"label", r.label},
              {"scope", kBenchScope},
              {"runs", r.runs},
              {"threads", r.threads},
              {"cells", r.cells.size()},
              {"mean_seconds", r.mean_seconds},
              {"std_seconds", r.std_seconds},
              {"table", fmt::format("({:.4f} ± {:.4f})s", r.mean_seconds,
                                    r.std_seconds)},
              {"stages",
               {{"ingest", stage(r.ingest)},
                {"geometry", stage(r.geometry)},
                {"summarize", stage(r.summarize)}}}};
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

}  // namespace cellmorph
