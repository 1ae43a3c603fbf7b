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

#include "cellmorph/ingest/coco.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cellmorph/error.h"
#include "cellmorph/ingest/polygon.h"

namespace cellmorph {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(where + " is missing \"" + key + "\"");
  return *it;
}

std::int64_t IntField(const json& obj, const char* key,
                      const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_number_integer()) Fail(where + ": \"" + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::vector<Polygon> ParseSegmentation(const json& seg,
                                       const std::string& where) {
  if (seg.is_object()) {
    throw Error(ErrorCode::kUnsupportedSegmentation,
                where + " uses an RLE segmentation");
  }
  if (!seg.is_array()) Fail(where + ": segmentation must be a list of polygons");
  std::vector<Polygon> parts;
  for (const json& flat : seg) {
    if (!flat.is_array() || flat.size() < 6 || flat.size() % 2 != 0) {
      Fail(where + ": each polygon needs an even number (>= 6) of coordinates");
    }
    Polygon poly;
    for (std::size_t i = 0; i < flat.size(); i += 2) {
      if (!flat[i].is_number() || !flat[i + 1].is_number()) {
        Fail(where + ": polygon coordinates must be numbers");
      }
      const Point2 p{flat[i].get<double>(), flat[i + 1].get<double>()};
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        Fail(where + ": non-finite polygon coordinate");
      }
      poly.push_back(p);
    }
    parts.push_back(std::move(poly));
  }
  return parts;
}

}  // namespace

CocoDataset ParseCoco(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    Fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) Fail("top level must be an object");

  CocoDataset out;
  const json& images = Field(doc, "images", "document");
  if (!images.is_array()) Fail("\"images\" must be a list");
  for (const json& img : images) {
    CocoImage meta;
    meta.id = IntField(img, "id", "image");
    const std::string where = "image " + std::to_string(meta.id);
    meta.width = static_cast<int>(IntField(img, "width", where));
    meta.height = static_cast<int>(IntField(img, "height", where));
    if (auto it = img.find("file_name"); it != img.end() && it->is_string()) {
      meta.file_name = it->get<std::string>();
    }
    if (meta.width <= 0 || meta.height <= 0) {
      Fail(where + " has non-positive dimensions");
    }
    if (out.sets.count(meta.id)) Fail("duplicate image id " + std::to_string(meta.id));
    out.sets.emplace(meta.id, InstanceSet(meta.width, meta.height));
    out.images.push_back(std::move(meta));
  }

  auto anns = doc.find("annotations");
  if (anns == doc.end()) return out;
  if (!anns->is_array()) Fail("\"annotations\" must be a list");
  for (const json& ann : *anns) {
    const std::int64_t id = IntField(ann, "id", "annotation");
    const std::string where = "annotation " + std::to_string(id);
    const std::int64_t image_id = IntField(ann, "image_id", where);
    auto set_it = out.sets.find(image_id);
    if (set_it == out.sets.end()) {
      throw Error(ErrorCode::kDanglingImageRef,
                  where + " references missing image " +
                      std::to_string(image_id));
    }
    const auto parts = ParseSegmentation(Field(ann, "segmentation", where), where);

    std::optional<double> score;
    if (auto it = ann.find("score"); it != ann.end() && !it->is_null()) {
      if (!it->is_number()) Fail(where + ": score must be a number");
      score = it->get<double>();
    }

    InstanceSet& set = set_it->second;
    BinaryMask mask =
        RasterizePolygons(parts, set.frame_width(), set.frame_height());
    if (mask.empty()) {
      out.dropped_annotations.push_back(id);
      continue;
    }
    try {
      set.Add(id, std::move(mask), score);
    } catch (const Error& e) {
      Fail(where + ": " + e.what());
    }
  }
  return out;
}

CocoDataset LoadCoco(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseCoco(buf.str());
}

}  // namespace cellmorph
