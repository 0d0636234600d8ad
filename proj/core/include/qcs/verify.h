// Copyright 2026 The qcs Authors
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

#ifndef QCS_VERIFY_H
#define QCS_VERIFY_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcs {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed;
    // Worst observed error or failure count, depending on the check.
    double metric;
    std::string detail;
};

// Suite names: spectral, measure, states, dynamics, phase, or all.
std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed = 1);

const std::vector<std::string> &suite_names();

bool all_passed(const std::vector<CheckResult> &results);

}  // namespace qcs

#endif
