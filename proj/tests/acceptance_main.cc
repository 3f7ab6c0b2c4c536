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

#include <iostream>

#include "verify/acceptance.h"

int main() {
    using namespace clusterqec::acceptance;
    auto results = run(Options{}, [](const CriterionResult& r) { std::cout << format_line(r, true) << std::endl; });
    const bool ok = all_passed(results);
    std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
    return ok ? 0 : 1;
}
