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

#include "cellmorph/cli/app.h"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "cellmorph/bench/timing.h"
#include "cellmorph/error.h"
#include "cellmorph/eval/aggregate.h"
#include "cellmorph/eval/metrics.h"
#include "cellmorph/ingest/coco.h"
#include "cellmorph/ingest/label_map.h"
#include "cellmorph/pipeline.h"
#include "cellmorph/preprocess/augment.h"
#include "cellmorph/preprocess/clahe.h"
#include "cellmorph/report/report.h"
#include "cellmorph/synth/scene.h"
#include "cellmorph/util/parse.h"

namespace cellmorph::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Scene used by `bench` when no input is given.
SceneConfig BundledSceneConfig() {
  SceneConfig cfg;
  cfg.width = 256;
  cfg.height = 229;
  cfg.n_cells = 60;
  cfg.a_min = 8.0;
  cfg.a_max = 16.0;
  cfg.b_min = 5.0;
  cfg.b_max = 8.0;
  return cfg;
}

[[noreturn]] void Usage(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

void RequireFile(const fs::path& p, const char* flag) {
  if (!fs::is_regular_file(p)) Usage(std::string(flag) + ": no such file: " + p.string());
}

bool IsCocoPath(const fs::path& p) { return p.extension() == ".json"; }

struct NamedSet {
  std::string name;
  InstanceSet set;
};

std::vector<NamedSet> LoadInstanceSource(const fs::path& path) {
  std::vector<NamedSet> out;
  if (IsCocoPath(path)) {
    CocoDataset coco = LoadCoco(path);
    for (const auto& img : coco.images) {
      out.push_back({fmt::format("image_{}", img.id), coco.sets.at(img.id)});
    }
  } else {
    out.push_back({path.stem().string(), LoadLabelMap(path)});
  }
  return out;
}

std::string WriteOut(std::ostream& out, const fs::path& path, std::string_view text) {
  WriteTextFile(path, text);
  out << path.string() << "\n";
  return path.string();
}

// ---------------------------------------------------------------- analyze

struct AnalyzeConfig {
  fs::path input;
  fs::path out_dir;
  double scale = 0.0;
  std::string format = "both";
  int threads = 0;
  bool exclude_small = false;
};

int RunAnalyze(const AnalyzeConfig& cfg, std::ostream& out) {
  const ScaleConfig scale = ScaleConfig::Make(cfg.scale);
  RequireFile(cfg.input, "--input");
  const int threads = ResolveThreadCount(cfg.threads);
  std::vector<NamedSet> images = LoadInstanceSource(cfg.input);

  std::vector<std::vector<CellProperties>> cells(images.size());
  if (images.size() == 1) {
    cells[0] = AnalyzeInstances(images[0].set, scale, {threads, cfg.exclude_small});
  } else {
    ParallelFor(images.size(), threads, [&](std::size_t i) {
      cells[i] = AnalyzeInstances(images[i].set, scale, {1, cfg.exclude_small});
    });
  }

  fs::create_directories(cfg.out_dir);
  const bool csv = cfg.format != "json";
  const bool js = cfg.format != "csv";
  json summary;
  summary["scale_um_per_px"] = scale.microns_per_pixel();
  summary["exclude_small"] = cfg.exclude_small;
  summary["images"] = json::array();
  std::vector<CellProperties> all;
  std::size_t small_total = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::string& name = images[i].name;
    if (csv) WriteOut(out, cfg.out_dir / (name + "_cells.csv"), CellsCsv(cells[i]));
    if (js) {
      WriteOut(out, cfg.out_dir / (name + "_cells.json"),
               CellsJson(cells[i]).dump(2) + "\n");
    }
    const std::size_t small = images[i].set.small_count();
    json entry = SizeSummaryJson(cells[i], small);
    entry["image"] = name;
    summary["images"].push_back(entry);
    all.insert(all.end(), cells[i].begin(), cells[i].end());
    small_total += small;
  }
  summary["overall"] = SizeSummaryJson(all, small_total);
  WriteOut(out, cfg.out_dir / "summary.json", summary.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateConfig {
  fs::path pred;
  fs::path gt;
  fs::path out_dir;
  double iou_thr = kDefaultIouThreshold;
  std::string format = "both";
  int bootstrap = 0;
  std::uint64_t seed = 0;
  int threads = 0;
};

int RunEvaluate(const EvaluateConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.iou_thr > 0.0 && cfg.iou_thr <= 1.0)) Usage("--iou-thr must be in (0, 1]");
  if (cfg.bootstrap < 0) Usage("--bootstrap must be >= 0");
  RequireFile(cfg.pred, "--pred");
  RequireFile(cfg.gt, "--gt");
  if (IsCocoPath(cfg.pred) != IsCocoPath(cfg.gt)) {
    Usage("--pred and --gt must both be label maps or both be COCO files");
  }
  const int threads = ResolveThreadCount(cfg.threads);

  // (name, pred, gt) triples in ground-truth order.
  struct Job {
    std::string name;
    std::optional<InstanceSet> pred;
    InstanceSet gt;
  };
  std::vector<Job> jobs;
  if (IsCocoPath(cfg.gt)) {
    CocoDataset gt = LoadCoco(cfg.gt);
    CocoDataset pred = LoadCoco(cfg.pred);
    for (const auto& img : gt.images) {
      auto it = pred.sets.find(img.id);
      std::optional<InstanceSet> p;
      if (it != pred.sets.end()) {
        p = it->second;
      } else {
        p.emplace(img.width, img.height);  // no detections for this image
      }
      jobs.push_back({fmt::format("image_{}", img.id), std::move(p), gt.sets.at(img.id)});
    }
  } else {
    jobs.push_back({cfg.pred.stem().string(), LoadLabelMap(cfg.pred), LoadLabelMap(cfg.gt)});
  }

  std::vector<std::optional<EvalReport>> reports(jobs.size());
  std::vector<std::string> failures(jobs.size());
  ParallelFor(jobs.size(), threads, [&](std::size_t i) {
    try {
      reports[i] = Evaluate(*jobs[i].pred, jobs[i].gt, cfg.iou_thr);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kFrameMismatch) throw;
      failures[i] = e.what();
    }
  });

  std::vector<EvalReport> ok;
  std::string csv(kEvalCsvHeader);
  csv += '\n';
  json doc;
  doc["iou_threshold"] = cfg.iou_thr;
  doc["images"] = json::array();
  doc["failed"] = json::array();
  std::size_t failed = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!reports[i]) {
      ++failed;
      err << "error: " << jobs[i].name << ": " << failures[i] << "\n";
      doc["failed"].push_back({{"image", jobs[i].name}, {"error", failures[i]}});
      continue;
    }
    csv += EvalCsvRow(jobs[i].name, *reports[i]);
    json entry = EvalReportJson(*reports[i]);
    entry["image"] = jobs[i].name;
    doc["images"].push_back(entry);
    ok.push_back(*reports[i]);
  }
  if (!ok.empty()) {
    const AggregateEval agg = Aggregate(ok);
    csv += EvalOverallCsvRow(agg);
    doc["overall"] = AggregateJson(agg);
    if (cfg.bootstrap > 0) {
      doc["bootstrap"] = BootstrapJson(BootstrapPooledF1(ok, cfg.bootstrap, cfg.seed));
    }
  } else {
    doc["overall"] = nullptr;
  }

  fs::create_directories(cfg.out_dir);
  if (cfg.format != "json") WriteOut(out, cfg.out_dir / "eval.csv", csv);
  if (cfg.format != "csv") WriteOut(out, cfg.out_dir / "eval.json", doc.dump(2) + "\n");

  if (failed == 0) return kExitOk;
  return failed == jobs.size() ? kExitUsage : kExitPartial;
}

// ---------------------------------------------------------------- preprocess

struct PreprocessConfig {
  fs::path input;
  fs::path output;
  std::string tiles = "8x8";
  double clip_limit = 0.01;
};

int RunPreprocess(const PreprocessConfig& cfg, std::ostream& out) {
  ClaheParams params;
  std::tie(params.tiles_x, params.tiles_y) = ParseGrid(cfg.tiles);
  params.clip_limit = cfg.clip_limit;
  if (params.tiles_x < 1 || params.tiles_y < 1) Usage("--tiles must be at least 1x1");
  if (!(params.clip_limit > 0.0 && params.clip_limit <= 1.0)) {
    Usage("--clip-limit must be in (0, 1]");
  }
  RequireFile(cfg.input, "--input");
  const GrayImage result = Clahe(ReadGrayImage(cfg.input), params);
  if (cfg.output.has_parent_path()) fs::create_directories(cfg.output.parent_path());
  WriteGrayImage(cfg.output, result);
  out << cfg.output.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- augment

struct AugmentConfig {
  fs::path image;
  fs::path labels;
  std::vector<std::string> ops;
  std::uint64_t seed = 0;
  fs::path out_image;
  fs::path out_labels;
};

int RunAugment(const AugmentConfig& cfg, std::ostream& out) {
  std::vector<AugmentOp> ops;
  for (const auto& text : cfg.ops) ops.push_back(ParseAugmentOp(text));
  RequireFile(cfg.image, "--image");
  if (!cfg.labels.empty()) RequireFile(cfg.labels, "--labels");
  if (cfg.labels.empty() != cfg.out_labels.empty()) {
    Usage("--labels and --out-labels must be given together");
  }

  GrayImage image = ReadGrayImage(cfg.image);
  InstanceSet masks = cfg.labels.empty() ? InstanceSet(image.width(), image.height())
                                         : LoadLabelMap(cfg.labels);
  // Op k draws from seed + k so a chain is reproducible op by op.
  for (std::size_t k = 0; k < ops.size(); ++k) {
    Augmented a = Augment(image, masks, ops[k], cfg.seed + k);
    image = std::move(a.image);
    masks = std::move(a.masks);
  }
  for (const fs::path& p : {cfg.out_image, cfg.out_labels}) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
  }
  WriteGrayImage(cfg.out_image, image);
  out << cfg.out_image.string() << "\n";
  if (!cfg.out_labels.empty()) {
    WriteLabelMap(cfg.out_labels, masks);
    out << cfg.out_labels.string() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- synth

struct SynthConfig {
  fs::path out_dir;
  int n_cells = 60;
  int width = 256;
  int height = 229;
  std::string a_range = "8,16";
  std::string b_range = "5,8";
  double noise = 8.0;
  std::uint64_t seed = 0;
};

std::pair<double, double> ParseRange(const std::string& text, const char* flag) {
  const auto v = ParseDoubleList(text);
  if (v.size() != 2) Usage(std::string(flag) + " expects MIN,MAX");
  return {v[0], v[1]};
}

int RunSynth(const SynthConfig& cfg, std::ostream& out) {
  SceneConfig sc;
  sc.width = cfg.width;
  sc.height = cfg.height;
  sc.n_cells = cfg.n_cells;
  std::tie(sc.a_min, sc.a_max) = ParseRange(cfg.a_range, "--a-range");
  std::tie(sc.b_min, sc.b_max) = ParseRange(cfg.b_range, "--b-range");
  sc.noise_sigma = cfg.noise;
  if (sc.width <= 0 || sc.height <= 0) Usage("--width and --height must be > 0");
  if (sc.n_cells > 65535) Usage("--n-cells must fit a 16-bit label map");

  const SyntheticScene scene = GenerateScene(sc, cfg.seed);
  fs::create_directories(cfg.out_dir);
  WriteGrayImage(cfg.out_dir / "image.png", scene.image);
  out << (cfg.out_dir / "image.png").string() << "\n";
  WriteLabelMap(cfg.out_dir / "labels.png", scene.truth);
  out << (cfg.out_dir / "labels.png").string() << "\n";
  WriteTruthCsv(cfg.out_dir / "truth.csv", scene.params);
  out << (cfg.out_dir / "truth.csv").string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchConfig {
  fs::path input;
  fs::path out;
  double scale = 1.0;
  int reps = 5;
  bool parallel = false;
  int threads = 0;
  std::uint64_t seed = 0;
};

int RunBench(const BenchConfig& cfg, std::ostream& out) {
  if (cfg.reps < kMinBenchRepetitions) {
    Usage(fmt::format("--reps must be >= {}", kMinBenchRepetitions));
  }
  PipelineInput input;
  input.scale = ScaleConfig::Make(cfg.scale);
  if (!cfg.input.empty()) {
    RequireFile(cfg.input, "--input");
    if (IsCocoPath(cfg.input)) Usage("bench takes a label map input");
    input.label = cfg.input.filename().string();
    input.ingest = [path = cfg.input] { return LoadLabelMap(path); };
  } else {
    const SyntheticScene scene = GenerateScene(BundledSceneConfig(), cfg.seed);
    input.label = fmt::format("synthetic-256x229-60cells-seed{}", cfg.seed);
    input.ingest = [map = LabelMapFromInstances(scene.truth)] {
      return InstancesFromLabelMap(map);
    };
  }

  json doc;
  const TimingReport serial = TimePipeline(input, cfg.reps, 1);
  doc["serial"] = TimingJson(serial);
  if (cfg.parallel) {
    int threads = ResolveThreadCount(cfg.threads);
    if (threads <= 1) {
      threads = std::max(2, static_cast<int>(std::thread::hardware_concurrency()));
    }
    const TimingReport par = TimePipeline(input, cfg.reps, threads);
    if (par.cells != serial.cells) {
      throw Error(ErrorCode::kInvalidArgument,
                  "parallel and serial geometry results differ");
    }
    doc["parallel"] = TimingJson(par);
  }
  const std::string text = doc.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
  } else {
    if (cfg.out.has_parent_path()) fs::create_directories(cfg.out.parent_path());
    WriteOut(out, cfg.out, text);
  }
  return kExitOk;
}

void AddFormat(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Tabular outputs to write")
      ->check(CLI::IsMember({"csv", "json", "both"}))
      ->capture_default_str();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Per-cell morphometrics from instance segmentation masks", "cellmorph"};
  app.require_subcommand(1);

  AnalyzeConfig analyze;
  auto* a = app.add_subcommand("analyze", "Per-cell area, length, width, perimeter");
  a->add_option("--input", analyze.input, "Label map (.png) or COCO file (.json)")->required();
  a->add_option("--scale", analyze.scale, "Microns per pixel")->required();
  a->add_option("--out", analyze.out_dir, "Output directory")->required();
  AddFormat(a, analyze.format);
  a->add_option("--threads", analyze.threads, "Worker threads (0: CELLMORPH_THREADS or 1)");
  a->add_flag("--exclude-small", analyze.exclude_small,
              "Skip instances smaller than 4 pixels");

  EvaluateConfig evaluate;
  auto* e = app.add_subcommand("evaluate", "Precision, recall, F1 and AP against ground truth");
  e->add_option("--pred", evaluate.pred, "Predicted instances")->required();
  e->add_option("--gt", evaluate.gt, "Ground-truth instances")->required();
  e->add_option("--out", evaluate.out_dir, "Output directory")->required();
  e->add_option("--iou-thr", evaluate.iou_thr, "IoU needed for a true positive")
      ->capture_default_str();
  AddFormat(e, evaluate.format);
  e->add_option("--bootstrap", evaluate.bootstrap, "Bootstrap resamples of pooled F1 (0: off)");
  e->add_option("--seed", evaluate.seed, "Bootstrap seed");
  e->add_option("--threads", evaluate.threads, "Worker threads");

  PreprocessConfig preprocess;
  auto* p = app.add_subcommand("preprocess", "CLAHE contrast enhancement");
  p->add_option("--input", preprocess.input, "Input image")->required();
  p->add_option("--output", preprocess.output, "Output image (.png)")->required();
  p->add_option("--tiles", preprocess.tiles, "Tile grid NxM")->capture_default_str();
  p->add_option("--clip-limit", preprocess.clip_limit,
                "Histogram clip as a fraction of tile pixels")
      ->capture_default_str();

  AugmentConfig augment;
  auto* g = app.add_subcommand("augment", "Apply geometric augmentations to image and masks");
  g->add_option("--image", augment.image, "Input image")->required();
  g->add_option("--labels", augment.labels, "Input label map");
  g->add_option("--op", augment.ops,
                "rot90|rot180|hflip|vflip|crop:X,Y,W,H|random-crop:W,H|"
                "random-hflip[:P]|random-vflip[:P]|scale:F|random-scale:MIN,MAX (repeatable, applied in order)")
      ->required();
  g->add_option("--seed", augment.seed, "Seed for random ops");
  g->add_option("--out-image", augment.out_image, "Output image")->required();
  g->add_option("--out-labels", augment.out_labels, "Output label map");

  SynthConfig synth;
  auto* s = app.add_subcommand("synth", "Synthetic ellipse scene with ground truth");
  s->add_option("--out", synth.out_dir, "Output directory")->required();
  s->add_option("--n-cells", synth.n_cells)->capture_default_str();
  s->add_option("--width", synth.width)->capture_default_str();
  s->add_option("--height", synth.height)->capture_default_str();
  s->add_option("--a-range", synth.a_range, "Semi-major range MIN,MAX (px)")->capture_default_str();
  s->add_option("--b-range", synth.b_range, "Semi-minor range MIN,MAX (px)")->capture_default_str();
  s->add_option("--noise", synth.noise, "Gaussian noise std")->capture_default_str();
  s->add_option("--seed", synth.seed)->capture_default_str();

  BenchConfig bench;
  auto* b = app.add_subcommand("bench", "Time the geometry pipeline");
  b->add_option("--input", bench.input, "Label map (default: bundled synthetic scene)");
  b->add_option("--out", bench.out, "Timing report JSON (default: stdout)");
  b->add_option("--scale", bench.scale, "Microns per pixel")->capture_default_str();
  b->add_option("--reps", bench.reps, "Timed repetitions (>= 3)")->capture_default_str();
  b->add_flag("--parallel", bench.parallel, "Also time the multi-threaded path");
  b->add_option("--threads", bench.threads, "Threads for --parallel");
  b->add_option("--seed", bench.seed, "Seed of the bundled scene");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*a) return RunAnalyze(analyze, out);
    if (*e) return RunEvaluate(evaluate, out, err);
    if (*p) return RunPreprocess(preprocess, out);
    if (*g) return RunAugment(augment, out);
    if (*s) return RunSynth(synth, out);
    if (*b) return RunBench(bench, out);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cellmorph::cli
