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

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "cellmorph/error.h"
#include "cellmorph/ingest/coco.h"
#include "cellmorph/ingest/components.h"
#include "cellmorph/ingest/instance_set.h"
#include "cellmorph/ingest/label_map.h"
#include "cellmorph/ingest/polygon.h"
#include "cellmorph/synth/scene.h"
#include "support/oracles.h"

namespace cellmorph {
namespace {

namespace fs = std::filesystem;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(InstanceSetTest, AddValidates) {
  InstanceSet set(4, 4);
  BinaryMask m(4, 4);
  EXPECT_EQ(CodeOf([&] { set.Add(1, m); }), ErrorCode::kInvalidArgument);
  m.set(1, 1);
  set.Add(1, m);
  EXPECT_EQ(CodeOf([&] { set.Add(1, m); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { set.Add(2, BinaryMask(5, 4, std::vector<std::uint8_t>(20, 1))); }),
            ErrorCode::kFrameMismatch);
  EXPECT_EQ(CodeOf([&] { set.Add(3, m, 1.5); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(set.size(), 1u);
  EXPECT_TRUE(set[0].small());
  EXPECT_EQ(set.small_count(), 1u);
  EXPECT_FALSE(set.has_all_scores());
}

TEST(LabelMapTest, DecodesDistinctLabels) {
  LabelMap map{6, 4, std::vector<std::uint16_t>(24, 0)};
  map.labels[0] = 1;
  map.labels[1] = 1;
  map.labels[10] = 2;
  map.labels[23] = 7;
  const InstanceSet set = InstancesFromLabelMap(map);
  ASSERT_EQ(set.size(), 3u);
  EXPECT_EQ(set[0].id, 1);
  EXPECT_EQ(set[1].id, 2);
  EXPECT_EQ(set[2].id, 7);
  EXPECT_EQ(set[0].mask.count(), 2);
  EXPECT_TRUE(set[2].mask.at(5, 3));
}

TEST(LabelMapTest, AllZeroIsEmptySet) {
  const InstanceSet set =
      InstancesFromLabelMap(LabelMap{5, 5, std::vector<std::uint16_t>(25, 0)});
  EXPECT_TRUE(set.empty());
  EXPECT_EQ(set.frame_width(), 5);
}

TEST(LabelMapTest, OverlapRejectedOnEncode) {
  InstanceSet set(3, 3);
  BinaryMask a(3, 3), b(3, 3);
  a.set(1, 1);
  b.set(1, 1);
  b.set(2, 2);
  set.Add(1, a);
  set.Add(2, b);
  EXPECT_THROW(LabelMapFromInstances(set), Error);
}

TEST(LabelMapTest, FileRoundTripIsBitIdentical) {
  SceneConfig cfg;
  cfg.width = 96;
  cfg.height = 80;
  cfg.n_cells = 5;
  const SyntheticScene scene = GenerateScene(cfg, 5);
  const fs::path dir = testing::FreshTempDir("labelmap_roundtrip");
  WriteLabelMap(dir / "a.png", scene.truth);
  const InstanceSet back = LoadLabelMap(dir / "a.png");
  ASSERT_EQ(back.size(), 5u);
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].id, scene.truth[i].id);
    EXPECT_EQ(back[i].mask, scene.truth[i].mask);
  }
  WriteLabelMap(dir / "b.png", back);
  EXPECT_EQ(testing::ReadFileBytes(dir / "a.png"),
            testing::ReadFileBytes(dir / "b.png"));
}

TEST(LabelMapTest, RandomMapsRoundTrip) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> lab(0, 9);
  const fs::path dir = testing::FreshTempDir("labelmap_random");
  for (int trial = 0; trial < 10; ++trial) {
    LabelMap map{17, 11, std::vector<std::uint16_t>(17 * 11)};
    for (auto& v : map.labels) v = static_cast<std::uint16_t>(lab(rng) * 7000);
    WriteLabelMapFile(dir / "m.png", map);
    EXPECT_EQ(ReadLabelMapFile(dir / "m.png"), map);
    EXPECT_EQ(LabelMapFromInstances(InstancesFromLabelMap(map)), map);
  }
}

TEST(LabelMapTest, EightBitImageIsFormatError) {
  const fs::path dir = testing::FreshTempDir("labelmap_8bit");
  cv::Mat m(4, 4, CV_8UC1, cv::Scalar(3));
  ASSERT_TRUE(cv::imwrite((dir / "m.png").string(), m));
  EXPECT_EQ(CodeOf([&] { ReadLabelMapFile(dir / "m.png"); }),
            ErrorCode::kFormatError);
}

TEST(LabelMapTest, MissingFileIsIoError) {
  EXPECT_EQ(CodeOf([&] { ReadLabelMapFile("/nonexistent/labels.png"); }),
            ErrorCode::kIoError);
}

TEST(PolygonTest, AxisAlignedSquare) {
  const Polygon sq{{10, 10}, {20, 10}, {20, 20}, {10, 20}};
  const BinaryMask m = RasterizePolygon(sq, 32, 32);
  EXPECT_EQ(m.count(), 100);
  EXPECT_EQ(m, testing::PointInPolygonFill(sq, 32, 32));
  EXPECT_TRUE(m.at(10, 10));
  EXPECT_TRUE(m.at(19, 19));
  EXPECT_FALSE(m.at(20, 20));
}

TEST(PolygonTest, MatchesPointInPolygonOnRandomPolygons) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> coord(-5.0, 45.0);
  std::uniform_int_distribution<int> nverts(3, 9);
  for (int trial = 0; trial < 300; ++trial) {
    Polygon p(nverts(rng));
    for (auto& v : p) v = {coord(rng), coord(rng)};
    ASSERT_EQ(RasterizePolygon(p, 40, 40), testing::PointInPolygonFill(p, 40, 40))
        << "trial " << trial;
  }
}

TEST(PolygonTest, IntegerVerticesMatchPointInPolygon) {
  // Edges through pixel centers exercise the half-open crossing rule.
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> coord(0, 30);
  for (int trial = 0; trial < 300; ++trial) {
    Polygon p(4);
    for (auto& v : p) v = {coord(rng) + 0.5, coord(rng) + 0.5};
    ASSERT_EQ(RasterizePolygon(p, 32, 32), testing::PointInPolygonFill(p, 32, 32));
  }
}

constexpr char kCocoSquare[] = R"({
  "images": [{"id": 3, "width": 32, "height": 24, "file_name": "a.png"}],
  "annotations": [
    {"id": 9, "image_id": 3, "segmentation": [[10,10, 20,10, 20,20, 10,20]],
     "score": 0.75}
  ]
})";

TEST(CocoTest, ParsesPolygonSquare) {
  const CocoDataset ds = ParseCoco(kCocoSquare);
  ASSERT_EQ(ds.images.size(), 1u);
  EXPECT_EQ(ds.images[0].file_name, "a.png");
  const InstanceSet& set = ds.sets.at(3);
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set[0].id, 9);
  EXPECT_EQ(set[0].mask.count(), 100);
  EXPECT_EQ(*set[0].score, 0.75);
  EXPECT_EQ(set.frame_width(), 32);
  EXPECT_EQ(set.frame_height(), 24);
}

TEST(CocoTest, DanglingImageReference) {
  EXPECT_EQ(CodeOf([] {
              ParseCoco(R"({"images": [{"id": 1, "width": 4, "height": 4}],
                "annotations": [{"id": 1, "image_id": 2,
                                 "segmentation": [[0,0, 2,0, 2,2]]}]})");
            }),
            ErrorCode::kDanglingImageRef);
}

TEST(CocoTest, RunLengthEncodingUnsupported) {
  EXPECT_EQ(CodeOf([] {
              ParseCoco(R"({"images": [{"id": 1, "width": 4, "height": 4}],
                "annotations": [{"id": 1, "image_id": 1,
                  "segmentation": {"size": [4, 4], "counts": "abc"}}]})");
            }),
            ErrorCode::kUnsupportedSegmentation);
}

TEST(CocoTest, MalformedJsonIsParseError) {
  EXPECT_EQ(CodeOf([] { ParseCoco("{not json"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseCoco(R"({"annotations": []})"); }),
            ErrorCode::kParseError);
}

TEST(CocoTest, ImagesWithoutAnnotationsAreEmpty) {
  const CocoDataset ds = ParseCoco(
      R"({"images": [{"id": 1, "width": 4, "height": 4}], "annotations": []})");
  EXPECT_TRUE(ds.sets.at(1).empty());
}

TEST(CocoTest, SubPixelPolygonIsDropped) {
  const CocoDataset ds = ParseCoco(R"({
    "images": [{"id": 1, "width": 8, "height": 8}],
    "annotations": [{"id": 5, "image_id": 1,
                     "segmentation": [[0.1,0.1, 0.3,0.1, 0.3,0.3]]}]})");
  EXPECT_TRUE(ds.sets.at(1).empty());
  ASSERT_EQ(ds.dropped_annotations.size(), 1u);
  EXPECT_EQ(ds.dropped_annotations[0], 5);
}

TEST(CocoTest, MultiPartUnion) {
  const CocoDataset ds = ParseCoco(R"({
    "images": [{"id": 1, "width": 16, "height": 16}],
    "annotations": [{"id": 1, "image_id": 1,
      "segmentation": [[0,0, 2,0, 2,2, 0,2], [5,5, 8,5, 8,8, 5,8]]}]})");
  EXPECT_EQ(ds.sets.at(1)[0].mask.count(), 4 + 9);
}

TEST(ComponentsTest, DiagonalPixelsAreOneComponent) {
  BinaryMask m(4, 4);
  m.set(0, 0);
  m.set(1, 1);
  EXPECT_EQ(ConnectedComponents(m).size(), 1u);
}

TEST(ComponentsTest, SeparatedPixelsAreTwoComponents) {
  BinaryMask m(4, 4);
  m.set(0, 0);
  m.set(2, 0);
  const InstanceSet set = ConnectedComponents(m);
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set[0].id, 1);
  EXPECT_TRUE(set[0].mask.at(0, 0));
  EXPECT_EQ(set[1].id, 2);
}

TEST(ComponentsTest, MatchesLabelPropagationOnRandomMasks) {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> dens(0.05, 0.6);
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryMask m = testing::RandomMask(rng, 23, 19, dens(rng));
    const std::vector<int> ref = testing::PropagationLabels(m);
    const InstanceSet set = ConnectedComponents(m);
    std::vector<int> got(ref.size(), 0);
    std::int64_t total = 0;
    for (const Instance& inst : set.instances()) {
      total += inst.mask.count();
      for (std::size_t i = 0; i < got.size(); ++i) {
        if (inst.mask.pixels()[i]) {
          ASSERT_EQ(got[i], 0) << "components overlap";
          got[i] = static_cast<int>(inst.id);
        }
      }
    }
    ASSERT_EQ(total, m.count());
    ASSERT_EQ(got, ref);
  }
}

}  // namespace
}  // namespace cellmorph
