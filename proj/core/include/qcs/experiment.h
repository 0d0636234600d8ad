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

#ifndef QCS_EXPERIMENT_H
#define QCS_EXPERIMENT_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>


namespace qcs {

struct ExperimentConfig {
    std::string id;
    std::string kind;
    std::uint64_t seed = 1;
    std::size_t samples = 0;
    unsigned workers = 1;
    nlohmann::json payload;
};

// Validates the whole payload (operators, states, maps) before returning; any problem is a SchemaError.
ExperimentConfig parse_experiment(const nlohmann::json &j);
ExperimentConfig load_experiment(const std::string &path);

struct Report {
    std::string id;
    std::string kind;
    std::uint64_t seed = 0;
    bool passed = true;
    nlohmann::json exact = nlohmann::json::object();
    nlohmann::json sampled = nlohmann::json::object();
    double runtime_seconds = 0.0;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

Report run_experiment(const ExperimentConfig &config);

enum class ReportFormat { Json, Csv };

ReportFormat parse_report_format(const std::string &name);

// Deterministic text; floats use 17 significant digits. Runtime is written only when asked for.
std::string render_report(const Report &report, ReportFormat format, bool include_runtime = false);
void emit_report(const Report &report, ReportFormat format, std::ostream &out, bool include_runtime = false);
void emit_report(const Report &report, ReportFormat format, const std::string &path, bool include_runtime = false);

}  // namespace qcs

#endif
