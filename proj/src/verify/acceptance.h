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

#ifndef CLUSTERQEC_VERIFY_ACCEPTANCE_H
#define CLUSTERQEC_VERIFY_ACCEPTANCE_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace clusterqec::acceptance {

struct CriterionResult {
    /// "1" .. "10", with letter suffixes for the parts of the benchmark check.
    std::string id;
    std::string title;
    bool passed = false;
    /// Deterministic measured values; never contains timings.
    std::string detail;
    /// Extra diagnostic outside the criteria list.
    bool supplementary = false;
    double seconds = 0.0;
};

struct Options {
    uint64_t seed = 7;
    /// 0 means default_threads().
    unsigned threads = 0;
    /// Criterion numbers to run ("8" selects every part of 8); empty runs all.
    std::vector<std::string> only;
};

using Sink = std::function<void(const CriterionResult&)>;

/// Runs the checks in order, passing each result to `sink` as soon as it is known.
std::vector<CriterionResult> run(const Options& options, const Sink& sink = {});

/// "PASS  2    title: detail", plus the elapsed time when `with_timing`.
std::string format_line(const CriterionResult& r, bool with_timing = false);

/// True when every non-supplementary result passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace clusterqec::acceptance

#endif
