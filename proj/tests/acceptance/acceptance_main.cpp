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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "cellmorph/bench/timing.h"
#include "cellmorph/cli/app.h"
#include "cellmorph/error.h"
#include "cellmorph/eval/metrics.h"
#include "cellmorph/geometry/cell_properties.h"
#include "cellmorph/geometry/ellipse.h"
#include "cellmorph/geometry/moments.h"
#include "cellmorph/ingest/label_map.h"
#include "cellmorph/preprocess/augment.h"
#include "cellmorph/preprocess/clahe.h"
#include "cellmorph/synth/scene.h"
#include "support/oracles.h"

namespace cellmorph {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;
constexpr double kDiscTolerance = 0.02;
constexpr double kAxisTolerance = 0.03;       // min(a, b) >= 5 px
constexpr double kLargeAxisTolerance = 0.01;  // min(a, b) >= 15 px
constexpr double kGeometryBudgetSeconds = 0.1;

struct Outcome {
  bool pass = true;
  std::string detail;
  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double RelErr(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

EquivalentEllipse Fit(const BinaryMask& m) {
  return FitEquivalentEllipse(ComputeCentralMoments(ComputeRawMoments(m)));
}

int RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "cellmorph");
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  if (code != cli::kExitOk) std::cerr << err.str();
  return code;
}

// ---------------------------------------------------------------- 1

Outcome MomentOracle() {
  Outcome o;
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> dim(1, 64);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  double worst = 0.0;
  const auto start = Clock::now();
  for (int i = 0; i < 500; ++i) {
    const BinaryMask m = testing::RandomMask(rng, dim(rng), dim(rng), dens(rng));
    const RawMoments r = ComputeRawMoments(m);
    if (!(r == testing::NaiveRawMoments(m))) o.Fail(fmt::format("raw mismatch on mask {}", i));
    if (r.m00 == 0) continue;
    const CentralMoments c = ComputeCentralMoments(r);
    const testing::NaiveCentral n = testing::NaiveCentralMoments(m);
    const double pairs[][2] = {{c.centroid_x, double(n.cx)}, {c.centroid_y, double(n.cy)},
                               {c.mu20, double(n.mu20)},     {c.mu02, double(n.mu02)},
                               {c.mu11, double(n.mu11)}};
    for (const auto& p : pairs) {
      // Relative to the value, floored at one pixel unit for values near 0.
      const double err = std::abs(p[0] - p[1]) / std::max(std::abs(p[1]), 1.0);
      worst = std::max(worst, err);
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (worst > 1e-9) o.Fail(fmt::format("central rel err {:.3g}", worst));
  if (secs >= 5.0) o.Fail(fmt::format("took {:.2f}s", secs));
  if (o.pass) o.detail = fmt::format("500 masks, central rel err {:.2g}, {:.3f}s", worst, secs);
  return o;
}

// ---------------------------------------------------------------- 2

Outcome DiscRecovery() {
  Outcome o;
  double worst = 0.0;
  for (double r : {5.0, 10.0, 20.0, 40.0}) {
    const int frame = static_cast<int>(2 * r) + 8;
    const double c = frame / 2 - 0.5;  // pixel corner
    const BinaryMask m = RasterizeEllipse({c, c, r, r, 0.0}, frame, frame);
    const EquivalentEllipse e = Fit(m);
    const double errs[] = {RelErr(e.semi_major_a, r), RelErr(e.semi_minor_b, r),
                           RelErr(static_cast<double>(m.count()), kPi * r * r),
                           RelErr(EllipsePerimeter(e), 2 * kPi * r)};
    for (double err : errs) {
      worst = std::max(worst, err);
      if (err > kDiscTolerance) o.Fail(fmt::format("R={} rel err {:.4f}", r, err));
    }
  }
  if (o.pass) o.detail = fmt::format("R in {{5,10,20,40}}, worst rel err {:.4f}", worst);
  return o;
}

// ---------------------------------------------------------------- 3

Outcome EllipseRecovery() {
  Outcome o;
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> ua(8, 40), ub(4, 16), ut(-kPi / 2, kPi / 2),
      frac(0, 1);
  double worst5 = 0.0, worst15 = 0.0;
  for (int i = 0; i < 200; ++i) {
    double a = ua(rng), b = ub(rng);
    if (b > a) std::swap(a, b);
    const double theta = ut(rng);
    const int frame = static_cast<int>(2 * a) + 8;
    const double c = frame / 2 + frac(rng) - 0.5;
    const double cy = frame / 2 + frac(rng) - 0.5;
    const EquivalentEllipse e = Fit(RasterizeEllipse({c, cy, a, b, theta}, frame, frame));
    const double err = std::max(RelErr(2 * e.semi_major_a, 2 * a),
                                RelErr(2 * e.semi_minor_b, 2 * b));
    if (b >= 5) worst5 = std::max(worst5, err);
    if (b >= 15) worst15 = std::max(worst15, err);
  }
  if (worst5 > kAxisTolerance) o.Fail(fmt::format("min>=5 worst {:.4f}", worst5));
  if (worst15 > kLargeAxisTolerance) o.Fail(fmt::format("min>=15 worst {:.4f}", worst15));
  if (o.pass)
    o.detail = fmt::format("200 ellipses, worst {:.4f} (min>=5), {:.4f} (min>=15)",
                           worst5, worst15);
  return o;
}

// ---------------------------------------------------------------- 4

Outcome Invariance() {
  Outcome o;
  std::mt19937_64 rng(1004);
  std::uniform_int_distribution<int> off(0, 30);
  std::uniform_real_distribution<double> ua(4, 12), ub(2, 4), ut(-1.5, 1.5);
  double worst_t = 0.0, worst_r = 0.0, worst_k = 0.0;
  for (int i = 0; i < 100; ++i) {
    const EllipseParams p{16.3, 15.8, ua(rng), ub(rng), ut(rng)};
    const BinaryMask m = RasterizeEllipse(p, 33, 31);
    const int dx = off(rng), dy = off(rng);
    BinaryMask t(70, 70);
    for (int y = 0; y < 31; ++y)
      for (int x = 0; x < 33; ++x)
        if (m.at(x, y)) t.set(x + dx, y + dy);
    BinaryMask r(31, 33);  // clockwise quarter turn
    for (int y = 0; y < 31; ++y)
      for (int x = 0; x < 33; ++x)
        if (m.at(x, y)) r.set(30 - y, x);
    const EquivalentEllipse em = Fit(m), et = Fit(t), er = Fit(r);
    worst_t = std::max({worst_t, RelErr(et.semi_major_a, em.semi_major_a),
                        RelErr(et.semi_minor_b, em.semi_minor_b),
                        RelErr(EllipsePerimeter(et), EllipsePerimeter(em))});
    worst_r = std::max({worst_r, RelErr(er.semi_major_a, em.semi_major_a),
                        RelErr(er.semi_minor_b, em.semi_minor_b)});
    if (r.count() != m.count()) o.Fail("rotation changed area");

    const double s = 0.05 + 0.01 * (i % 7);
    const CellProperties base = AnalyzeInstance(m, ScaleConfig::Make(s), 1);
    for (double k : {2.0, 0.5, 4.0}) {
      const CellProperties c = AnalyzeInstance(m, ScaleConfig::Make(k * s), 1);
      if (c.length_um != k * base.length_um || c.width_um != k * base.width_um ||
          c.perimeter_um != k * base.perimeter_um ||
          c.area_um2 != k * k * base.area_um2) {
        o.Fail(fmt::format("scale k={} not exact", k));
      }
    }
    for (double k : {3.0, 0.7, 1.37}) {
      const CellProperties c = AnalyzeInstance(m, ScaleConfig::Make(k * s), 1);
      worst_k = std::max({worst_k, RelErr(c.length_um, k * base.length_um),
                          RelErr(c.width_um, k * base.width_um),
                          RelErr(c.perimeter_um, k * base.perimeter_um),
                          RelErr(c.area_um2, k * k * base.area_um2)});
    }
  }
  if (worst_t > 1e-9) o.Fail(fmt::format("translation rel err {:.3g}", worst_t));
  if (worst_r > 1e-9) o.Fail(fmt::format("rotation rel err {:.3g}", worst_r));
  if (worst_k > 4 * std::numeric_limits<double>::epsilon())
    o.Fail(fmt::format("scale rel err {:.3g}", worst_k));
  if (o.pass)
    o.detail = fmt::format(
        "translation {:.2g}, rotation {:.2g}, scale exact for k=2^n, {:.2g} otherwise",
        worst_t, worst_r, worst_k);
  return o;
}

// ---------------------------------------------------------------- 5

BinaryMask Square(int x0, int y0, int side) {
  BinaryMask m(64, 64);
  for (int y = y0; y < y0 + side; ++y)
    for (int x = x0; x < x0 + side; ++x) m.set(x, y);
  return m;
}

Outcome MetricCases() {
  Outcome o;
  // tp=2, fp=1, fn=1
  InstanceSet gt(64, 64), pred(64, 64);
  gt.Add(1, Square(2, 2, 10));
  gt.Add(2, Square(30, 30, 10));
  gt.Add(3, Square(2, 40, 10));
  pred.Add(1, Square(2, 3, 10), 0.9);
  pred.Add(2, Square(50, 2, 8), 0.8);
  pred.Add(3, Square(31, 30, 10), 0.7);
  const EvalReport r = Evaluate(pred, gt);
  if (r.match.tp != 2 || r.match.fp != 1 || r.match.fn != 1) o.Fail("counts");
  if (r.scores.f1 != 2.0 / 3.0) o.Fail(fmt::format("F1 {}", r.scores.f1));
  if (Evaluate(gt, gt).scores.f1 != 1.0) o.Fail("perfect F1");
  if (Evaluate(InstanceSet(64, 64), gt).scores.f1 != 0.0) o.Fail("empty pred F1");
  if (Evaluate(InstanceSet(64, 64), InstanceSet(64, 64)).scores.f1 != 0.0)
    o.Fail("empty F1");

  // Ranked example: hit, miss, hit over two ground truths.
  InstanceSet gt2(64, 64);
  gt2.Add(1, Square(2, 2, 10));
  gt2.Add(2, Square(30, 30, 10));
  const double ap = AveragePrecision(pred, gt2, 0.5);
  if (std::abs(ap - 5.0 / 6.0) > 1e-12) o.Fail(fmt::format("AP {}", ap));
  if (o.pass) o.detail = fmt::format("F1 2/3, 1, 0; AP {:.15f}", ap);
  return o;
}

// ---------------------------------------------------------------- 6

Outcome MatchingOracle() {
  Outcome o;
  std::mt19937_64 rng(1006);
  std::uniform_int_distribution<int> count(1, 8), jit(-4, 4);
  std::uniform_real_distribution<double> u(0, 1);
  int ambiguous = 0, checked = 0;
  for (int s = 0; s < 100; ++s) {
    SceneConfig cfg;
    cfg.width = cfg.height = 96;
    cfg.a_min = 6;
    cfg.a_max = 12;
    cfg.b_min = 3;
    cfg.b_max = 6;
    cfg.n_cells = count(rng);
    const SyntheticScene scene = GenerateScene(cfg, rng());
    InstanceSet pred(96, 96);
    InstanceId next = 1;
    for (const Instance& g : scene.truth.instances()) {
      if (u(rng) < 0.15) continue;
      if (static_cast<int>(pred.size()) >= 8) break;
      // Occasionally a duplicate detection competes for the same cell.
      const int copies = u(rng) < 0.25 ? 2 : 1;
      for (int c = 0; c < copies && static_cast<int>(pred.size()) < 8; ++c) {
        const int dx = jit(rng), dy = jit(rng);
        BinaryMask m(96, 96);
        for (int y = 0; y < 96; ++y)
          for (int x = 0; x < 96; ++x)
            if (g.mask.at(x, y) && m.contains(x + dx, y + dy)) m.set(x + dx, y + dy);
        if (!m.empty()) pred.Add(next++, std::move(m), u(rng));
      }
    }
    const auto iou = IouMatrix(pred, scene.truth);
    const double thr = kDefaultIouThreshold;
    std::vector<double> positive;
    bool unambiguous = true;
    for (const auto& row : iou) {
      int above = 0;
      for (double v : row) {
        if (v > 0) positive.push_back(v);
        above += v >= thr;
      }
      if (above > 1) unambiguous = false;
    }
    std::sort(positive.begin(), positive.end());
    if (std::adjacent_find(positive.begin(), positive.end()) != positive.end())
      unambiguous = false;
    if (!unambiguous) {
      ++ambiguous;
      continue;
    }
    ++checked;
    const std::size_t greedy = MatchInstances(pred, scene.truth, thr).tp;
    const std::size_t best = testing::OptimalMatchCount(iou, thr);
    if (greedy != best) o.Fail(fmt::format("scene {}: greedy {} vs optimal {}", s, greedy, best));
  }
  if (checked == 0) o.Fail("no unambiguous scenes");
  if (o.pass)
    o.detail = fmt::format("{} scenes agree, {} ambiguous excluded", checked, ambiguous);
  return o;
}

// ---------------------------------------------------------------- 7

Outcome ClaheDegenerate() {
  Outcome o;
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<int> dim(8, 120);
  for (int i = 0; i < 20; ++i) {
    const GrayImage img = testing::RandomImage(rng, dim(rng), dim(rng));
    if (!(Clahe(img, {1, 1, 1.0}) == testing::GlobalHistogramEqualization(img)))
      o.Fail(fmt::format("image {} differs from global equalization", i));
  }
  for (int v : {0, 1, 100, 254, 255}) {
    const GrayImage img(57, 43, static_cast<std::uint8_t>(v));
    for (const ClaheParams& p : {ClaheParams{}, ClaheParams{1, 1, 1.0}, ClaheParams{5, 3, 0.2}}) {
      const GrayImage out = Clahe(img, p);
      if (std::any_of(out.pixels().begin(), out.pixels().end(),
                      [&](std::uint8_t q) { return q != out.pixels()[0]; }))
        o.Fail(fmt::format("constant {} not constant", v));
    }
  }
  if (o.pass) o.detail = "20 images bit-identical, constant images stay constant";
  return o;
}

// ---------------------------------------------------------------- 8

Outcome RoundTrips() {
  Outcome o;
  const fs::path dir = testing::FreshTempDir("acceptance_roundtrip");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SceneConfig cfg;
    cfg.n_cells = 25;
    const SyntheticScene s = GenerateScene(cfg, seed);
    const LabelMap map = LabelMapFromInstances(s.truth);
    WriteLabelMapFile(dir / "a.png", map);
    const LabelMap back = ReadLabelMapFile(dir / "a.png");
    if (!(back == map)) o.Fail("label map read-back differs");
    WriteLabelMapFile(dir / "b.png", back);
    if (testing::ReadFileBytes(dir / "a.png") != testing::ReadFileBytes(dir / "b.png"))
      o.Fail("label map file bytes differ");
    if (!(LabelMapFromInstances(InstancesFromLabelMap(back)) == map))
      o.Fail("instances round trip differs");

    for (const AugmentOp& op : {AugmentOp{aug::Rot180{}}, AugmentOp{aug::HFlip{}}}) {
      const Augmented once = Augment(s.image, s.truth, op, 0);
      const Augmented twice = Augment(once.image, once.masks, op, 0);
      bool same = twice.image == s.image && twice.masks.size() == s.truth.size();
      for (std::size_t i = 0; same && i < s.truth.size(); ++i)
        same = twice.masks[i].id == s.truth[i].id && twice.masks[i].mask == s.truth[i].mask;
      if (!same) o.Fail(AugmentOpName(op) + " twice is not identity");
    }
  }
  if (o.pass) o.detail = "label maps bit-exact; rot180 and hflip involutions";
  return o;
}

// ---------------------------------------------------------------- 9

std::vector<EllipseParams> ReadTruth(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  std::vector<EllipseParams> out;
  while (std::getline(in, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    int id;
    EllipseParams e;
    ss >> id >> e.cx >> e.cy >> e.a >> e.b >> e.theta;
    out.push_back(e);
  }
  return out;
}

Outcome EndToEnd() {
  Outcome o;
  const fs::path dir = testing::FreshTempDir("acceptance_e2e");
  if (RunCli({"synth", "--out", (dir / "scene").string(), "--n-cells", "60",
              "--width", "256", "--height", "229", "--a-range", "8,16",
              "--b-range", "5,8", "--seed", "2026"}) != cli::kExitOk) {
    o.Fail("synth failed");
    return o;
  }
  const double scale = 0.1;
  if (RunCli({"analyze", "--input", (dir / "scene" / "labels.png").string(),
              "--scale", "0.1", "--out", (dir / "out").string()}) != cli::kExitOk) {
    o.Fail("analyze failed");
    return o;
  }
  const nlohmann::json summary = nlohmann::json::parse(
      testing::ReadFileBytes(dir / "out" / "summary.json"));
  const nlohmann::json cells = nlohmann::json::parse(
      testing::ReadFileBytes(dir / "out" / "labels_cells.json"));
  const std::vector<EllipseParams> truth = ReadTruth(dir / "scene" / "truth.csv");
  if (summary["overall"]["count"] != 60) o.Fail("count != 60");
  if (cells.size() != truth.size()) o.Fail("cell rows != truth rows");
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(cells.size(), truth.size()); ++i) {
    const std::size_t k = cells[i]["id"].get<std::size_t>() - 1;
    const EllipseParams& t = truth.at(k);
    worst = std::max({worst,
                      RelErr(cells[i]["length_um"].get<double>(), 2 * t.a * scale),
                      RelErr(cells[i]["width_um"].get<double>(), 2 * t.b * scale)});
  }
  if (worst > kAxisTolerance) o.Fail(fmt::format("worst length/width err {:.4f}", worst));

  const fs::path labels = dir / "scene" / "labels.png";
  const TimingReport timing = TimePipeline(
      {"scene", [&] { return LoadLabelMap(labels); }, ScaleConfig::Make(scale)}, 5);
  if (timing.geometry.mean_seconds >= kGeometryBudgetSeconds)
    o.Fail(fmt::format("geometry stage {:.4f}s", timing.geometry.mean_seconds));
  if (o.pass)
    o.detail = fmt::format("60 cells, worst err {:.4f}, geometry {:.2f} ms/image", worst,
                           timing.geometry.mean_seconds * 1e3);
  return o;
}

// ---------------------------------------------------------------- 10

std::vector<std::pair<std::string, std::string>> FullRun(const fs::path& dir) {
  RunCli({"synth", "--out", (dir / "scene").string(), "--n-cells", "40", "--seed", "7"});
  RunCli({"preprocess", "--input", (dir / "scene" / "image.png").string(), "--output",
          (dir / "clahe.png").string()});
  RunCli({"augment", "--image", (dir / "scene" / "image.png").string(), "--labels",
          (dir / "scene" / "labels.png").string(), "--op", "random-crop:200,180",
          "--op", "random-hflip", "--seed", "5", "--out-image",
          (dir / "aug.png").string(), "--out-labels", (dir / "aug_labels.png").string()});
  RunCli({"analyze", "--input", (dir / "scene" / "labels.png").string(), "--scale",
          "0.065", "--out", (dir / "analyze").string()});
  RunCli({"evaluate", "--pred", (dir / "aug_labels.png").string(), "--gt",
          (dir / "aug_labels.png").string(), "--out", (dir / "eval").string(),
          "--bootstrap", "100", "--seed", "3"});
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    files.emplace_back(fs::relative(e.path(), dir).string(),
                       testing::ReadFileBytes(e.path()));
  }
  std::sort(files.begin(), files.end());
  return files;
}

Outcome Determinism() {
  Outcome o;
  const auto a = FullRun(testing::FreshTempDir("acceptance_det_a"));
  const auto b = FullRun(testing::FreshTempDir("acceptance_det_b"));
  if (a.size() < 10) o.Fail(fmt::format("only {} output files", a.size()));
  if (a != b) o.Fail("outputs differ between runs");
  if (o.pass) o.detail = fmt::format("{} output files byte-identical", a.size());
  return o;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace cellmorph

int main() {
  using cellmorph::Criterion;
  using cellmorph::Outcome;
  const std::vector<Criterion> criteria = {
      {1, "moment oracle", cellmorph::MomentOracle},
      {2, "disc recovery", cellmorph::DiscRecovery},
      {3, "ellipse recovery", cellmorph::EllipseRecovery},
      {4, "invariance suite", cellmorph::Invariance},
      {5, "metric correctness", cellmorph::MetricCases},
      {6, "matching oracle", cellmorph::MatchingOracle},
      {7, "CLAHE degenerate equivalence", cellmorph::ClaheDegenerate},
      {8, "round trips", cellmorph::RoundTrips},
      {9, "end-to-end analyze", cellmorph::EndToEnd},
      {10, "determinism", cellmorph::Determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
              << c.name << " (" << o.detail << ")\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed ? fmt::format("{} of {} criteria failed\n", failed, criteria.size())
                       : fmt::format("all {} criteria passed\n", criteria.size()));
  return failed ? 1 : 0;
}
