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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcs/error.h"
#include "qcs/experiment.h"
#include "qcs/json_io.h"
#include "qcs/map_spec.h"
#include "qcs/verify.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitConfigError = 2;

struct Common {
    std::uint64_t seed = 1;
    std::size_t samples = 0;
    unsigned workers = 1;
    std::string format = "json";
    std::string out;
    bool timing = false;
};

void add_common(CLI::App *cmd, Common &common) {
    cmd->add_option("--seed", common.seed, "RNG seed");
    cmd->add_option("--samples", common.samples, "number of sampled labels");
    cmd->add_option("--workers", common.workers, "sampling threads")->check(CLI::PositiveNumber);
    cmd->add_option("--format", common.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", common.out, "report path (stdout when omitted)");
    cmd->add_flag("--timing", common.timing, "include runtime in JSON reports");
}

int finish(const qcs::Report &report, const Common &common) {
    auto format = qcs::parse_report_format(common.format);
    if (common.out.empty()) {
        qcs::emit_report(report, format, std::cout, common.timing);
    } else {
        qcs::emit_report(report, format, common.out, common.timing);
    }
    return report.passed ? kExitPass : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qcs: complete states for finite-dimensional quantum measurement"};
    app.require_subcommand(1);
    Common common;

    std::string config_path;
    auto *run = app.add_subcommand("run", "run an experiment described by a JSON config");
    run->add_option("--config", config_path, "experiment config")->required();
    add_common(run, common);

    std::string suite = "all";
    auto *verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--suite", suite, "suite name")
        ->check(CLI::IsMember({"all", "spectral", "measure", "states", "dynamics", "phase"}));
    add_common(verify, common);

    std::string barrier = "identity";
    auto *example4 = app.add_subcommand("example4", "three-block no-go witness and its barrier repair");
    example4->add_option("--barrier", barrier, "barrier spec, e.g. identity, rotation:1/4 or JSON");
    add_common(example4, common);

    std::string p;
    double z = 0.5;
    auto *cat = app.add_subcommand("cat", "threshold rule for a two-outcome projector");
    cat->add_option("--p", p, "probability of the value 1, as a rational")->required();
    cat->add_option("--z", z, "label in ]0,1[")->required();
    add_common(cat, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfigError;
    }

    qcs::ExperimentConfig config;
    try {
        if (run->parsed()) {
            config = qcs::load_experiment(config_path);
            if (run->count("--seed")) {
                config.seed = common.seed;
            }
            if (run->count("--samples")) {
                config.samples = common.samples;
            }
            if (run->count("--workers")) {
                config.workers = common.workers;
            }
        } else {
            nlohmann::json j;
            if (verify->parsed()) {
                j = {{"kind", "verify_suite"}, {"suite", suite}};
            } else if (example4->parsed()) {
                auto spec = qcs::parse_map_spec(barrier);
                j = {{"kind", "example4"}, {"barrier", qcs::to_json(spec)}};
            } else {
                j = {{"kind", "cat"}, {"p", p}, {"z", z}};
            }
            j["seed"] = common.seed;
            j["samples"] = common.samples;
            j["workers"] = common.workers;
            config = qcs::parse_experiment(j);
        }
    } catch (const qcs::Error &e) {
        std::cerr << "config error (" << qcs::errc_name(e.code()) << "): " << e.what() << "\n";
        return kExitConfigError;
    }

    try {
        return finish(qcs::run_experiment(config), common);
    } catch (const qcs::Error &e) {
        std::cerr << "error (" << qcs::errc_name(e.code()) << "): " << e.what() << "\n";
        return e.code() == qcs::Errc::IoError ? kExitConfigError : kExitPropertyFailure;
    }
}
