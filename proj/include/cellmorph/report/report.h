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

#ifndef CELLMORPH_REPORT_REPORT_H_
#define CELLMORPH_REPORT_REPORT_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cellmorph/bench/timing.h"
#include "cellmorph/eval/aggregate.h"
#include "cellmorph/eval/metrics.h"
#include "cellmorph/geometry/cell_properties.h"

namespace cellmorph {

// Column order is part of the file format; append new columns at the end.
inline constexpr std::string_view kCellsCsvHeader =
    "id,area_px,area_um2,length_um,width_um,perimeter_um,degenerate_flag";
inline constexpr std::string_view kEvalCsvHeader =
    "image,num_pred,num_gt,tp,fp,fn,precision_pct,recall_pct,f1_pct,dice_pct,"
    "ap_pct,ap50_pct,ap75_pct";

// fraction -> percentage with two decimals, e.g. 0.6667 -> "66.67".
std::string FormatPercent(double fraction);
// Percentage rounded to two decimals as a number, for JSON.
double RoundedPercent(double fraction);
// "mean ± std" with `decimals` places.
std::string FormatMeanStd(const AttributeStats& s, int decimals = 2);

std::string CellsCsv(std::span<const CellProperties> cells);
nlohmann::json CellsJson(std::span<const CellProperties> cells);
// count, small_instances and per-attribute {mean, std, table}; the stats are
// null when there are no cells.
nlohmann::json SizeSummaryJson(std::span<const CellProperties> cells,
                               std::size_t small_instances);

std::string EvalCsvRow(std::string_view image, const EvalReport& r);
std::string EvalOverallCsvRow(const AggregateEval& agg);
nlohmann::json EvalReportJson(const EvalReport& r);
nlohmann::json AggregateJson(const AggregateEval& agg);
nlohmann::json BootstrapJson(const BootstrapF1& b);

nlohmann::json TimingJson(const TimingReport& r);

// Throws IoError.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace cellmorph

#endif  // CELLMORPH_REPORT_REPORT_H_
