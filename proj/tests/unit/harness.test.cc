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

#include "qcs/experiment.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "qcs/json_io.h"
#include "qcs/ks.h"
#include "qcs/verify.h"
#include "test_util.h"

using namespace qcs;
using nlohmann::json;

namespace {

std::string config_path(const char *name) {
    return std::string(QCS_CONFIG_DIR) + "/" + name;
}

json example_measure_config() {
    return json::parse(R"({
        "id": "m", "kind": "measure", "seed": 3, "samples": 2000, "workers": 3,
        "A": [[-1, 0, 0], [0, 0, 0], [0, 0, 1]],
        "psi": [0.790569415042094832, 0.5, 0.353553390593273731],
        "barrier": "rotation:3/8"
    })");
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(ks, statistic_of_degenerate_sample) {
    StepCDF cdf({{0.0, 0.5}, {1.0, 1.0}});
    std::vector<double> zeros(10, 0.0);
    EXPECT_DOUBLE_EQ(ks_statistic(zeros, cdf), 0.5);
    std::vector<double> balanced{0.0, 1.0, 0.0, 1.0};
    EXPECT_DOUBLE_EQ(ks_statistic(balanced, cdf), 0.0);
    EXPECT_QCS_ERROR(ks_statistic(std::vector<double>{}, cdf), Errc::EmptySample);
}

TEST(ks, matches_brute_force_oracle) {
    StepCDF cdf({{-1.0, 0.625}, {0.0, 0.875}, {1.0, 1.0}});
    std::vector<double> samples{-1.0, -1.0, 0.0, 1.0, 1.0, -1.0, 0.0};
    // Oracle: both one-sided limits at every support point and in the gaps between them.
    double expected = 0.0;
    for (double r : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
        double count = static_cast<double>(std::count_if(samples.begin(), samples.end(), [r](double s) { return s <= r; }));
        expected = std::max(expected, std::abs(count / samples.size() - cdf(r)));
    }
    EXPECT_DOUBLE_EQ(ks_statistic(samples, cdf), expected);
}

TEST(ks, threshold) {
    EXPECT_DOUBLE_EQ(ks_threshold(100), 0.163);
    EXPECT_DOUBLE_EQ(ks_threshold(10000, 1.36), 0.0136);
}

TEST(json_io, matrices_and_vectors) {
    auto m = matrix_from_json(json::parse(R"([[1, [0, -1]], [[0, 1], 2]])"));
    EXPECT_EQ(m(0, 1), Complex(0.0, -1.0));
    EXPECT_EQ(m(1, 1), Complex(2.0, 0.0));
    EXPECT_EQ(matrix_from_json("sigma_y"), qcs::testing::pauli_y());
    EXPECT_EQ(matrix_from_json("sigma_z"), qcs::testing::pauli_z());
    auto v = vector_from_json(json::parse("[1, [0.5, 0.25]]"));
    EXPECT_EQ(v[1], Complex(0.5, 0.25));
    EXPECT_EQ(vector_from_json(to_json(v)), v);
    EXPECT_ANY_THROW(matrix_from_json(json::parse("[[1, 2], [3]]")));
    EXPECT_ANY_THROW(matrix_from_json("sigma_w"));
}

TEST(json_io, piecewise_functions) {
    EXPECT_EQ(piecewise_fn_from_json("square")(-3.0), 9.0);
    EXPECT_EQ(piecewise_fn_from_json("absolute")(-3.0), 3.0);
    EXPECT_EQ(piecewise_fn_from_json(json::parse(R"({"kind":"affine","slope":2,"intercept":1})"))(3.0), 7.0);
    EXPECT_EQ(piecewise_fn_from_json(json::parse(R"({"kind":"polynomial","coefficients":[1,0,2]})"))(2.0), 9.0);
    auto ind = piecewise_fn_from_json(json::parse(R"({"kind":"indicator","lo":0,"hi":1})"));
    EXPECT_EQ(ind(0.0), 0.0);
    EXPECT_EQ(ind(1.0), 1.0);
    auto pw = piecewise_fn_from_json(
        json::parse(R"({"kind":"piecewise","breakpoints":["-inf",0,"inf"],"coefficients":[[0],[0,1]]})"));
    EXPECT_EQ(pw(-5.0), 0.0);
    EXPECT_EQ(pw(5.0), 5.0);
    EXPECT_ANY_THROW(piecewise_fn_from_json(json::parse(R"({"kind":"wavelet"})")));
}

TEST(json_io, seventeen_digit_floats) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(1.0), "1.0");
    EXPECT_EQ(format_double(-0.625), "-0.625");
    EXPECT_EQ(format_double(1.0 / 3.0), "0.33333333333333331");
    json j{{"b", 1.0 / 3.0}, {"a", {1, 2}}};
    auto text = dump_json(j);
    EXPECT_LT(text.find("\"a\""), text.find("\"b\""));
    EXPECT_NE(text.find("0.33333333333333331"), std::string::npos);
    EXPECT_EQ(json::parse(text)["b"].get<double>(), 1.0 / 3.0);
}

TEST(experiment, parses_defaults) {
    auto c = parse_experiment(json::parse(R"({"kind":"example4"})"));
    EXPECT_EQ(c.id, "example4");
    EXPECT_EQ(c.seed, 1u);
    EXPECT_EQ(c.samples, 0u);
    EXPECT_EQ(c.workers, 1u);
}

TEST(experiment, rejects_bad_configs) {
    const char *bad[] = {
        R"([])",
        R"({"id":"x"})",
        R"({"kind":"teleport"})",
        R"({"kind":"example4","seed":-1})",
        R"({"kind":"example4","weights":["1/2","1/2","1/2"]})",
        R"({"kind":"example4","barrier":"expanding:1"})",
        R"({"kind":"example4","barrier":{"kind":"rotation","c":"9/8"}})",
        R"({"kind":"measure","A":[[0,1],[0,0]],"psi":[1,0]})",
        R"({"kind":"measure","A":"sigma_z","psi":[1,1]})",
        R"({"kind":"measure","A":"sigma_z","psi":[1,0,0]})",
        R"({"kind":"measure","A":"sigma_z"})",
        R"({"kind":"measure","A":"sigma_z","psi":[1,0],"barrier":{"kind":"composition","maps":[{"kind":"identity"},{"kind":"rotation","c":"1/2"}]},"extra":{"kind":"x"},"samples":"many"})",
        R"({"kind":"dynamics","H":"sigma_x","A":"sigma_z","psi0":[1,0]})",
        R"({"kind":"dynamics","H":"sigma_x","A":"sigma_z","psi0":[1,0],"times":[0],"dt":0.1})",
        R"({"kind":"dynamics","H":"sigma_x","A":"sigma_z","psi0":[1,0],"times":[0],"U":[[1,1],[0,1]]})",
        R"({"kind":"dynamics","H":"sigma_x","A":"sigma_z","psi0":[1,0],"times":[0],"sigma":{"kind":"nope"}})",
        R"({"kind":"cat","p":"3/2","z":0.5})",
        R"({"kind":"cat","p":"1/2","z":1.5})",
        R"({"kind":"phase_space","sigma":"1/3","N":4,"dq":1,"psi":{"gaussian":{}},"observable":{"kind":"spin"}})",
        R"({"kind":"phase_space","sigma":"0","N":4,"dq":1,"psi":{"gaussian":{}},"observable":{"kind":"energy"}})",
        R"({"kind":"verify_suite","suite":"everything"})",
    };
    for (const char *text : bad) {
        EXPECT_QCS_ERROR(parse_experiment(json::parse(text)), Errc::SchemaError);
    }
}

TEST(experiment, load_errors) {
    EXPECT_QCS_ERROR(load_experiment("/nonexistent/qcs/config.json"), Errc::IoError);
    std::string path = ::testing::TempDir() + "qcs_bad_config.json";
    std::ofstream(path) << "{ not json";
    EXPECT_QCS_ERROR(load_experiment(path), Errc::SchemaError);
    std::remove(path.c_str());
}

TEST(experiment, sample_configs_run_and_pass) {
    for (const char *name : {"measure_example4.json", "dynamics_rabi.json", "example4.json", "cat.json",
                             "phase_gaussian.json"}) {
        auto r = run_experiment(load_experiment(config_path(name)));
        EXPECT_TRUE(r.passed) << name;
    }
}

TEST(experiment, report_is_byte_identical_across_runs) {
    auto c = parse_experiment(example_measure_config());
    for (auto format : {ReportFormat::Json, ReportFormat::Csv}) {
        EXPECT_EQ(render_report(run_experiment(c), format), render_report(run_experiment(c), format));
    }
    auto other = example_measure_config();
    other["workers"] = 1;
    EXPECT_EQ(render_report(run_experiment(c), ReportFormat::Json),
              render_report(run_experiment(parse_experiment(other)), ReportFormat::Json));
}

TEST(experiment, runtime_only_on_request) {
    auto r = run_experiment(parse_experiment(example_measure_config()));
    EXPECT_EQ(render_report(r, ReportFormat::Json).find("runtime_seconds"), std::string::npos);
    EXPECT_NE(render_report(r, ReportFormat::Json, true).find("runtime_seconds"), std::string::npos);
}

TEST(experiment, measure_csv_rows) {
    auto r = run_experiment(parse_experiment(example_measure_config()));
    auto rows = lines(render_report(r, ReportFormat::Csv));
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "eigenvalue,probability");
    EXPECT_EQ(rows[2], "0.0,0.25");
    auto j = json::parse(render_report(r, ReportFormat::Json));
    EXPECT_EQ(j["kind"], "measure");
    EXPECT_EQ(j["seed"], 3);
    EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(experiment, dynamics_csv_rows) {
    auto r = run_experiment(load_experiment(config_path("dynamics_rabi.json")));
    auto rows = lines(render_report(r, ReportFormat::Csv));
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0], "t,lhs,rhs,gap");
    EXPECT_EQ(rows[1], "0.0,1.0,1.0,0.0");
}

TEST(experiment, example4_report) {
    auto r = run_experiment(load_experiment(config_path("example4.json")));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.exact["same_barrier_disagreement"].get<double>(), 0.5);
    EXPECT_EQ(r.exact["rotation_repair_disagreement"].get<double>(), 0.0);
    EXPECT_EQ(r.exact["constructed_repair_disagreement"].get<double>(), 0.0);
    EXPECT_TRUE(r.exact["constructed_repair_matches_rotation"].get<bool>());
}

TEST(experiment, example4_general_weights) {
    auto r = run_experiment(parse_experiment(json::parse(R"({"kind":"example4","weights":["1/4","1/2","1/4"]})")));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.exact["same_barrier_disagreement"].get<double>(), 0.5);
    EXPECT_EQ(r.exact["repair_rotation"], "3/4");
    auto narrow = run_experiment(parse_experiment(json::parse(R"({"kind":"example4","weights":["1/2","1/8","3/8"]})")));
    EXPECT_TRUE(narrow.passed);
    EXPECT_EQ(narrow.exact["same_barrier_disagreement"].get<double>(), 0.25);
    auto none = run_experiment(parse_experiment(json::parse(R"({"kind":"example4","weights":["1/2","1/2","0"]})")));
    EXPECT_FALSE(none.passed);
    EXPECT_EQ(none.exact["same_barrier_disagreement"].get<double>(), 0.0);
}

TEST(experiment, cat_threshold_rule) {
    auto asleep = run_experiment(parse_experiment(json::parse(R"({"kind":"cat","p":"1/3","z":0.5})")));
    EXPECT_EQ(asleep.exact["outcome"], "asleep");
    auto awake = run_experiment(parse_experiment(json::parse(R"({"kind":"cat","p":"1/3","z":0.9})")));
    EXPECT_EQ(awake.exact["outcome"], "awake");
    EXPECT_TRUE(awake.passed);
    EXPECT_TRUE(asleep.passed);
}

TEST(experiment, report_formats) {
    EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
    EXPECT_EQ(parse_report_format("csv"), ReportFormat::Csv);
    EXPECT_QCS_ERROR(parse_report_format("xml"), Errc::SchemaError);
}

class VerifySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(VerifySuite, passes) {
    auto results = run_suite(GetParam(), 1);
    ASSERT_FALSE(results.empty());
    for (const auto &r : results) {
        EXPECT_TRUE(r.passed) << r.suite << "/" << r.name << " metric " << r.metric << " " << r.detail;
    }
    EXPECT_TRUE(all_passed(results));
}

INSTANTIATE_TEST_SUITE_P(harness, VerifySuite, ::testing::Values("spectral", "measure", "states", "dynamics", "phase"));

TEST(verify, unknown_suite) {
    EXPECT_QCS_ERROR(run_suite("quantum_gravity"), Errc::SchemaError);
    EXPECT_EQ(suite_names().size(), 5u);
}
