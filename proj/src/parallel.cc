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

#include "clusterqec/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace clusterqec {
namespace {

std::atomic<unsigned> g_override{0};

}  // namespace

unsigned default_threads() {
    if (unsigned o = g_override.load()) {
        return o;
    }
    if (const char* env = std::getenv(kThreadsEnvVar)) {
        try {
            long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void set_default_threads(unsigned threads) { g_override.store(threads); }

unsigned resolve_threads(unsigned requested) { return requested ? requested : default_threads(); }

void parallel_for(size_t num_tasks, unsigned threads, const std::function<void(size_t)>& task) {
    threads = static_cast<unsigned>(std::min<size_t>(resolve_threads(threads), num_tasks));
    if (threads <= 1) {
        for (size_t i = 0; i < num_tasks; i++) {
            task(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= num_tasks) {
                return;
            }
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(num_tasks);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; t++) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace clusterqec
