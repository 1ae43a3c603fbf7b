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

#include "cellmorph/util/parse.h"

#include <charconv>
#include <cmath>
#include <string>

#include "cellmorph/error.h"

namespace cellmorph {
namespace {

[[noreturn]] void Bad(std::string_view what, std::string_view text) {
  throw Error(ErrorCode::kInvalidArgument,
              "expected " + std::string(what) + ", got '" + std::string(text) + "'");
}

template <typename T>
std::vector<T> SplitParse(std::string_view text, char sep, T (*one)(std::string_view)) {
  std::vector<T> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(one(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

int ParseInt(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    Bad("an integer", text);
  }
  return value;
}

double ParseDouble(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() ||
      !std::isfinite(value)) {
    Bad("a number", text);
  }
  return value;
}

std::vector<int> ParseIntList(std::string_view text, char sep) {
  return SplitParse<int>(text, sep, &ParseInt);
}

std::vector<double> ParseDoubleList(std::string_view text, char sep) {
  return SplitParse<double>(text, sep, &ParseDouble);
}

std::pair<int, int> ParseGrid(std::string_view text) {
  const auto v = SplitParse<int>(text, 'x', &ParseInt);
  if (v.size() != 2) Bad("NxM", text);
  return {v[0], v[1]};
}

}  // namespace cellmorph
