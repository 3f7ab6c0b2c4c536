// Copyright 2026 The clusterqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLUSTERQEC_PARALLEL_H
#define CLUSTERQEC_PARALLEL_H

#include <cstddef>
#include <functional>

namespace clusterqec {

/// Environment variable consulted for the default worker count.
inline constexpr const char* kThreadsEnvVar = "CLUSTERQEC_THREADS";

/// Worker count used when a caller passes 0: the global override if set, else
/// $CLUSTERQEC_THREADS, else std::thread::hardware_concurrency().
unsigned default_threads();
/// Global override (0 clears it). The CLI's --threads flag lands here.
void set_default_threads(unsigned threads);
unsigned resolve_threads(unsigned requested);

/// Runs task(0..num_tasks-1) on up to `threads` workers pulling from a shared
/// counter. Exceptions from tasks are rethrown on the calling thread.
void parallel_for(size_t num_tasks, unsigned threads, const std::function<void(size_t)>& task);

}  // namespace clusterqec

#endif
