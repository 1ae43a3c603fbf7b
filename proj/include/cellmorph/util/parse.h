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

#ifndef CELLMORPH_UTIL_PARSE_H_
#define CELLMORPH_UTIL_PARSE_H_

#include <string_view>
#include <utility>
#include <vector>

namespace cellmorph {

// Strict number parsing for CLI arguments; the whole string must be consumed.
// All throw InvalidArgument on failure.
int ParseInt(std::string_view text);
double ParseDouble(std::string_view text);
std::vector<int> ParseIntList(std::string_view text, char sep = ',');
std::vector<double> ParseDoubleList(std::string_view text, char sep = ',');
// "NxM" -> {N, M}
std::pair<int, int> ParseGrid(std::string_view text);

}  // namespace cellmorph

#endif  // CELLMORPH_UTIL_PARSE_H_
