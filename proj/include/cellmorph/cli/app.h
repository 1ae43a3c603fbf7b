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

#ifndef CELLMORPH_CLI_APP_H_
#define CELLMORPH_CLI_APP_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace cellmorph::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPartial = 1;  // some images failed, others written
inline constexpr int kExitUsage = 2;    // bad flags, unreadable or invalid input

// Entry point behind the `cellmorph` binary. args[0] is the program name.
// Output file paths and reports go to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cellmorph::cli

#endif  // CELLMORPH_CLI_APP_H_
