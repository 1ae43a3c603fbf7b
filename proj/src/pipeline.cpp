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

#include "cellmorph/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <optional>
#include <thread>

#include "cellmorph/error.h"
#include "cellmorph/util/parse.h"

namespace cellmorph {

std::vector<CellProperties> AnalyzeInstances(const InstanceSet& set,
                                             const ScaleConfig& scale,
                                             const AnalyzeOptions& options) {
  std::vector<const Instance*> todo;
  for (const auto& inst : set.instances()) {
    if (options.exclude_small && inst.small()) continue;
    todo.push_back(&inst);
  }
  std::vector<std::optional<CellProperties>> slots(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        slots[i] = AnalyzeInstance(todo[i]->mask, scale, todo[i]->id);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t threads = static_cast<std::size_t>(
      std::clamp<int>(options.threads, 1, std::max<int>(1, static_cast<int>(todo.size()))));
  if (threads <= 1) {
    work(0, todo.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (todo.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(todo.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<CellProperties> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(*s);
  return out;
}

void ParallelFor(std::size_t n, int threads,
                 const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

int ResolveThreadCount(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CELLMORPH_THREADS")) {
    try {
      const int n = ParseInt(env);
      if (n > 0) return n;
    } catch (const Error&) {
    }
  }
  return 1;
}

}  // namespace cellmorph
