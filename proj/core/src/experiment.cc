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

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "qcs/algebra.h"
#include "qcs/complete_state.h"
#include "qcs/dynamics.h"
#include "qcs/error.h"
#include "qcs/factorization.h"
#include "qcs/json_io.h"
#include "qcs/ks.h"
#include "qcs/map_spec.h"
#include "qcs/phase_space.h"
#include "qcs/representation.h"
#include "qcs/verify.h"

namespace qcs {

namespace {

const nlohmann::json &require(const nlohmann::json &j, const char *key) {
    if (!j.contains(key)) {
        fail(Errc::SchemaError, std::string("missing field '") + key + "'");
    }
    return j[key];
}

PiecewiseAffineMap barrier_from(const nlohmann::json &j, const char *key = "barrier") {
    if (!j.contains(key)) {
        return PiecewiseAffineMap::identity();
    }
    const auto &spec = j[key];
    auto map = build_map(spec.is_string() ? parse_map_spec(spec.get<std::string>()) : map_spec_from_json(spec));
    if (!verify_measure_preserving(map)) {
        fail(Errc::NotABarrier, "barrier does not preserve Lebesgue measure");
    }
    return map;
}

MapSpec spec_from(const nlohmann::json &j, const char *key) {
    if (!j.contains(key)) {
        return MapSpec::identity();
    }
    const auto &spec = j[key];
    return spec.is_string() ? parse_map_spec(spec.get<std::string>()) : map_spec_from_json(spec);
}

Rational rational_field(const nlohmann::json &j, const char *key) {
    const auto &x = require(j, key);
    if (x.is_string()) {
        return parse_rational(x.get<std::string>());
    }
    if (x.is_number_integer()) {
        return Rational(x.get<std::int64_t>());
    }
    fail(Errc::SchemaError, std::string("'") + key + "' must be a rational string");
}

std::vector<double> times_from(const nlohmann::json &j) {
    std::vector<double> out;
    for (const auto &t : require(j, "times")) {
        if (!t.is_number()) {
            fail(Errc::SchemaError, "'times' must hold numbers");
        }
        out.push_back(t.get<double>());
    }
    return out;
}

std::vector<std::string> row(std::initializer_list<double> values) {
    std::vector<std::string> out;
    for (double v : values) {
        out.push_back(format_double(v));
    }
    return out;
}

struct MeasureInputs {
    HermitianOperator a;
    PureState psi;
    PiecewiseAffineMap alpha;
};

MeasureInputs measure_inputs(const nlohmann::json &p) {
    return {HermitianOperator(matrix_from_json(require(p, "A"))), PureState(vector_from_json(require(p, "psi"))),
            barrier_from(p)};
}

struct DynamicsInputs {
    HermitianOperator h;
    HermitianOperator a;
    PureState psi0;
    std::vector<double> times;
    PiecewiseAffineMap alpha;
    EquivalenceComplex sigma;
    std::optional<UnitaryOperator> u;
};

DynamicsInputs dynamics_inputs(const nlohmann::json &p) {
    DynamicsInputs in{HermitianOperator(matrix_from_json(require(p, "H"))),
                      HermitianOperator(matrix_from_json(require(p, "A"))),
                      PureState(vector_from_json(require(p, "psi0"))),
                      times_from(p),
                      barrier_from(p),
                      EquivalenceComplex::from_json(p.value("sigma", nlohmann::json())),
                      std::nullopt};
    require_same_dim(in.h.dim(), in.a.dim(), "dynamics operators");
    require_same_dim(in.h.dim(), in.psi0.dim(), "dynamics state");
    if (p.contains("U")) {
        in.u = UnitaryOperator(matrix_from_json(p["U"]));
        require_same_dim(in.u->dim(), in.a.dim(), "dynamics unitary");
    }
    return in;
}

struct PhaseInputs {
    PhaseSpaceState state;
    std::string observable;
    PiecewiseFn fn;
};

PhaseInputs phase_inputs(const nlohmann::json &p) {
    Rational spin = rational_field(p, "sigma");
    const auto &n = require(p, "N");
    const auto &dq = require(p, "dq");
    if (!is_nonnegative_integer(n) || !dq.is_number()) {
        fail(Errc::SchemaError, "'N' must be a positive integer and 'dq' a number");
    }
    PhaseSpaceGrid grid{n.get<std::size_t>(), dq.get<double>()};
    const auto &psi = require(p, "psi");
    std::optional<PhaseSpaceState> state;
    if (psi.is_object() && psi.contains("gaussian")) {
        const auto &g = psi["gaussian"];
        std::vector<double> weights;
        if (g.contains("sector_weights")) {
            for (const auto &w : g["sector_weights"]) {
                weights.push_back(w.get<double>());
            }
        }
        state = gaussian_state(spin, grid, g.value("width", 0.5), g.value("momentum", 0.0), std::move(weights));
    } else if (psi.is_array()) {
        std::vector<CVector> sectors;
        for (const auto &s : psi) {
            sectors.push_back(vector_from_json(s));
        }
        state = PhaseSpaceState(spin, grid, std::move(sectors));
    } else {
        fail(Errc::SchemaError, "'psi' must be an array of sectors or {\"gaussian\": {...}}");
    }
    const auto &obs = require(p, "observable");
    std::string kind = require(obs, "kind").get<std::string>();
    PiecewiseFn fn = PiecewiseFn::identity();
    if (kind == "position") {
        fn = piecewise_fn_from_json(obs.value("g", nlohmann::json("identity")));
    } else if (kind == "momentum") {
        fn = piecewise_fn_from_json(obs.value("f", nlohmann::json("identity")));
    } else if (kind != "spin") {
        fail(Errc::SchemaError, "observable kind must be position, momentum or spin");
    }
    return {std::move(*state), kind, std::move(fn)};
}

std::array<Rational, 3> weight_rationals(const nlohmann::json &p) {
    std::array<Rational, 3> w{Rational(1, 8), Rational(1, 4), Rational(5, 8)};
    if (p.contains("weights")) {
        const auto &j = p["weights"];
        if (!j.is_array() || j.size() != 3) {
            fail(Errc::SchemaError, "'weights' must list three rationals");
        }
        Rational total(0);
        for (std::size_t i = 0; i < 3; ++i) {
            Rational r = j[i].is_string() ? parse_rational(j[i].get<std::string>()) : Rational(-1);
            if (r < Rational(0)) {
                fail(Errc::SchemaError, "weights must be nonnegative rational strings");
            }
            total += r;
            w[i] = r;
        }
        if (total != Rational(1)) {
            fail(Errc::SchemaError, "weights must sum to 1");
        }
    }
    return w;
}

std::array<double, 3> weights_from(const nlohmann::json &p) {
    auto r = weight_rationals(p);
    return {to_double(r[0]), to_double(r[1]), to_double(r[2])};
}

void validate_payload(const ExperimentConfig &c) {
    const auto &p = c.payload;
    if (c.kind == "measure") {
        auto in = measure_inputs(p);
        require_same_dim(in.a.dim(), in.psi.dim(), "measure experiment");
    } else if (c.kind == "dynamics") {
        dynamics_inputs(p);
        if (p.contains("dt")) {
            const auto &dt = p["dt"];
            if (!dt.is_number() || dt.get<double>() < 1e-7 || dt.get<double>() > 1e-3) {
                fail(Errc::SchemaError, "'dt' must lie in [1e-7, 1e-3]");
            }
        }
    } else if (c.kind == "example4") {
        weights_from(p);
        barrier_from(p);
    } else if (c.kind == "cat") {
        Rational prob = rational_field(p, "p");
        if (prob < Rational(0) || prob > Rational(1)) {
            fail(Errc::SchemaError, "'p' must lie in [0,1]");
        }
        const auto &z = require(p, "z");
        if (!z.is_number() || !(z.get<double>() > 0.0 && z.get<double>() < 1.0)) {
            fail(Errc::SchemaError, "'z' must be a number in ]0,1[");
        }
        barrier_from(p);
    } else if (c.kind == "phase_space") {
        phase_inputs(p);
    } else if (c.kind == "verify_suite") {
        auto suite = p.value("suite", std::string("all"));
        const auto &names = suite_names();
        if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
            fail(Errc::SchemaError, "unknown suite '" + suite + "'");
        }
    } else {
        fail(Errc::SchemaError, "unknown experiment kind '" + c.kind + "'");
    }
}

Report run_measure(const ExperimentConfig &c) {
    auto in = measure_inputs(c.payload);
    Report r;
    r.csv_header = {"eigenvalue", "probability"};
    double err = 0.0;
    auto weights = spectral_weights(in.a, in.psi);
    const auto atoms = in.a.eigensystem().atoms();
    nlohmann::json dist = nlohmann::json::array();
    for (const auto &[v, prob] : value_distribution(in.a, in.psi, in.alpha)) {
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            if (atoms[k].value == v) {
                err = std::max(err, std::abs(prob - weights[k]));
            }
        }
        dist.push_back({v, prob});
        r.csv_rows.push_back(row({v, prob}));
    }
    r.exact["distribution"] = dist;
    r.exact["max_error"] = err;
    r.passed = err < 1e-12;
    if (c.samples > 0) {
        auto samples = sample_values(in.a, in.psi, in.alpha, c.seed, c.samples, c.workers);
        double d = ks_statistic(samples, spectral_cdf(in.a, in.psi));
        double threshold = ks_threshold(samples.size());
        std::map<double, std::size_t> counts;
        for (double s : samples) {
            ++counts[s];
        }
        nlohmann::json freq = nlohmann::json::array();
        for (const auto &[v, n] : counts) {
            freq.push_back({v, static_cast<double>(n) / static_cast<double>(samples.size())});
        }
        r.sampled = {{"n", samples.size()}, {"ks_statistic", d}, {"ks_threshold", threshold},
                     {"ks_pass", d < threshold}, {"frequencies", freq}};
        r.passed = r.passed && d < threshold;
        if (c.payload.contains("samples_out")) {
            std::ofstream out(c.payload["samples_out"].get<std::string>());
            if (!out) {
                fail(Errc::IoError, "cannot write samples file");
            }
            for (double s : samples) {
                out << format_double(s) << '\n';
            }
        }
    }
    return r;
}

Report run_dynamics(const ExperimentConfig &c) {
    auto in = dynamics_inputs(c.payload);
    Report r;
    r.csv_header = {"t", "lhs", "rhs", "gap"};
    auto result = evolution_expectation_check(in.a, in.h, in.psi0, in.alpha, in.times);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &e : result.rows) {
        rows.push_back({e.t, e.operator_side, e.label_side, e.gap});
        r.csv_rows.push_back(row({e.t, e.operator_side, e.label_side, e.gap}));
    }
    r.exact["rows"] = rows;
    r.exact["max_error"] = result.max_error;
    r.passed = result.max_error < 1e-10;
    double dt = c.payload.value("dt", 1e-4);
    double worst = 0.0;
    ObservableFunction f(in.a);
    ObservableFunction h(in.h);
    for (double t : in.times) {
        worst = std::max(worst, schrodinger_equivalence_check(f, h, in.psi0, t, dt).gap);
    }
    r.exact["schrodinger_max_gap"] = worst;
    r.passed = r.passed && worst < 1e-5;
    if (in.u && c.samples > 0) {
        auto labels = uniform_labels(c.seed, c.samples);
        auto check = intertwine_check(in.a, *in.u, in.sigma, in.psi0, in.alpha, labels);
        r.sampled = {{"labels", labels.size()}, {"checked", check.checked}, {"skipped", check.skipped},
                     {"max_gap", check.max_gap}, {"ok", check.ok}};
        r.passed = r.passed && check.ok;
    }
    return r;
}

Report run_example4(const ExperimentConfig &c) {
    auto alpha = barrier_from(c.payload);
    auto spec = spec_from(c.payload, "barrier");
    auto weights = weights_from(c.payload);
    auto witness = no_go_witness(alpha, weights);
    const auto &m = witness.model;
    // Level order is G, F, E; rotating by <E> + <F> sends the F levels onto the zero atom of A^2.
    Rational shift = weight_rationals(c.payload)[0] + weight_rationals(c.payload)[1];
    if (shift == Rational(1)) {
        shift = Rational(0);
    }
    double expected = 2.0 * std::min(weights[1], weights[2]);
    auto repaired_map = build_map(MapSpec::composition({spec, MapSpec::rotation(shift)}));
    double repaired = composition_disagreement(m.a, witness.b, m.psi, alpha, repaired_map);
    auto beta = repair_barrier(m.a, witness.b, alpha, m.psi);
    double constructed = composition_disagreement(m.a, witness.b, m.psi, alpha, beta);
    Report r;
    r.csv_header = {"eigenvalue", "probability"};
    nlohmann::json dist = nlohmann::json::array();
    for (const auto &[v, prob] : value_distribution(m.a, m.psi, alpha)) {
        dist.push_back({v, prob});
        r.csv_rows.push_back(row({v, prob}));
    }
    auto square_of_values = value_function(m.a, m.psi, alpha).map_values([](double x) { return x * x; });
    auto values_of_square = value_function(m.a_squared, m.psi, alpha);
    auto intervals = [](const IntervalSet &s) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto &iv : s.intervals()) {
            out.push_back({iv.lo, iv.hi});
        }
        return out;
    };
    r.exact = {{"distribution", dist},
               {"square_of_values_is_one_on", intervals(square_of_values.simplified().level_set(1.0))},
               {"values_of_square_is_one_on", intervals(values_of_square.simplified().level_set(1.0))},
               {"same_barrier_disagreement", witness.disagreement},
               {"expected_disagreement", expected},
               {"repair_rotation", to_string(shift)},
               {"rotation_repair_disagreement", repaired},
               {"constructed_repair_disagreement", constructed},
               {"constructed_repair_matches_rotation",
                compose(quantile_function(spectral_cdf(m.a_squared, m.psi)), beta)
                    .equal_ae(compose(quantile_function(spectral_cdf(m.a_squared, m.psi)), repaired_map))}};
    r.passed = witness.disagreement > 0.0 && std::abs(witness.disagreement - expected) <= 1e-12 &&
               repaired <= 1e-12 && constructed <= 1e-12;
    return r;
}

Report run_cat(const ExperimentConfig &c) {
    Rational p = rational_field(c.payload, "p");
    double z = c.payload["z"].get<double>();
    auto alpha = barrier_from(c.payload);
    double pd = to_double(p);
    CMatrix awake = CMatrix::Zero(2, 2);
    awake(1, 1) = 1.0;
    CMatrix asleep = CMatrix::Identity(2, 2) - awake;
    CVector amps(2);
    amps << std::sqrt(1.0 - pd), std::sqrt(pd);
    PureState psi = PureState::normalized(amps);
    const CMatrix projectors[] = {asleep, awake};
    const double values[] = {0.0, 1.0};
    auto regions = sigma_simple_regions(projectors, values, psi, alpha);
    auto a = HermitianOperator::from_spectrum(EigenSystem({{0.0, asleep}, {1.0, awake}}));
    double level = alpha(z);
    double v = value(a, CompleteState(psi, alpha, z));
    bool rule = level > 1.0 - pd;
    Report r;
    r.csv_header = {"eigenvalue", "probability"};
    r.csv_rows.push_back(row({0.0, regions.regions[0].measure()}));
    r.csv_rows.push_back(row({1.0, regions.regions[1].measure()}));
    r.exact = {{"p", to_string(p)},
               {"z", z},
               {"level", level},
               {"threshold", 1.0 - pd},
               {"value", v},
               {"outcome", v == 1.0 ? "awake" : "asleep"},
               {"threshold_rule_outcome", rule ? "awake" : "asleep"},
               {"region_measures", {regions.regions[0].measure(), regions.regions[1].measure()}}};
    r.passed = (v == 1.0) == rule && sigma_simple_value(regions, values, z) == v;
    return r;
}

Report run_phase(const ExperimentConfig &c) {
    auto in = phase_inputs(c.payload);
    auto mu = build_measure(in.state);
    std::optional<LabelObservable> obs;
    std::optional<HermitianOperator> a;
    if (in.observable == "position") {
        obs = position_observable(in.fn, mu);
        a = position_operator(in.fn, in.state);
    } else if (in.observable == "momentum") {
        obs = momentum_observable(in.fn, mu);
        a = momentum_operator(in.fn, in.state);
    } else {
        obs = spin_observable(mu);
        a = spin_operator(in.state);
    }
    auto born = spectral_cdf(*a, in.state.pure_state());
    double dist_err = 0.0;
    Report r;
    r.csv_header = {"eigenvalue", "probability"};
    nlohmann::json dist = nlohmann::json::array();
    const auto &label = obs->distribution;
    if (label.size() != born.size()) {
        dist_err = 1.0;
    }
    for (std::size_t k = 0; k < label.size(); ++k) {
        dist.push_back({label.support(k), label.weight(k)});
        r.csv_rows.push_back(row({label.support(k), label.weight(k)}));
        if (k < born.size()) {
            dist_err = std::max({dist_err, std::abs(label.level(k) - born.level(k)),
                                 label.support(k) == born.support(k) ? 0.0 : 1.0});
        }
    }
    auto q = qmps_check(*a, *obs, in.state, mu);
    r.exact = {{"observable", in.observable},
               {"distribution", dist},
               {"distribution_max_error", dist_err},
               {"operator_side", q.operator_side},
               {"label_side", q.label_side},
               {"qmps_gap", q.gap},
               {"barrier_realizes_observable", q.barrier_preserves_measure},
               {"total_mass", mu.total_mass()}};
    r.passed = dist_err < 1e-12 && q.gap < 1e-12 && q.barrier_preserves_measure;
    return r;
}

Report run_verify(const ExperimentConfig &c) {
    auto results = run_suite(c.payload.value("suite", std::string("all")), c.seed);
    Report r;
    r.csv_header = {"suite", "name", "passed", "metric"};
    nlohmann::json checks = nlohmann::json::array();
    for (const auto &res : results) {
        checks.push_back(
            {{"suite", res.suite}, {"name", res.name}, {"passed", res.passed}, {"metric", res.metric}, {"detail", res.detail}});
        r.csv_rows.push_back({res.suite, res.name, res.passed ? "1" : "0", format_double(res.metric)});
    }
    r.exact["checks"] = checks;
    r.passed = all_passed(results);
    return r;
}

}  // namespace

ExperimentConfig parse_experiment(const nlohmann::json &j) {
    if (!j.is_object()) {
        fail(Errc::SchemaError, "experiment config must be a JSON object");
    }
    ExperimentConfig c;
    try {
        const auto &kind = require(j, "kind");
        if (!kind.is_string()) {
            fail(Errc::SchemaError, "'kind' must be a string");
        }
        c.kind = kind.get<std::string>();
        c.id = j.value("id", c.kind);
        if (j.contains("seed")) {
            if (!is_nonnegative_integer(j["seed"])) {
                fail(Errc::SchemaError, "'seed' must be a nonnegative integer");
            }
            c.seed = j["seed"].get<std::uint64_t>();
        }
        if (j.contains("samples")) {
            if (!is_nonnegative_integer(j["samples"])) {
                fail(Errc::SchemaError, "'samples' must be a nonnegative integer");
            }
            c.samples = j["samples"].get<std::size_t>();
        }
        if (j.contains("workers")) {
            if (!is_nonnegative_integer(j["workers"])) {
                fail(Errc::SchemaError, "'workers' must be a positive integer");
            }
            c.workers = std::max(1u, j["workers"].get<unsigned>());
        }
        c.payload = j;
        validate_payload(c);
    } catch (const nlohmann::json::exception &e) {
        fail(Errc::SchemaError, std::string("malformed config: ") + e.what());
    } catch (const Error &e) {
        if (e.code() == Errc::SchemaError) {
            throw;
        }
        fail(Errc::SchemaError, std::string(errc_name(e.code())) + ": " + e.what());
    }
    return c;
}

ExperimentConfig load_experiment(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(Errc::IoError, "cannot open config '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        fail(Errc::SchemaError, std::string("config is not valid JSON: ") + e.what());
    }
    return parse_experiment(j);
}

Report run_experiment(const ExperimentConfig &config) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    if (config.kind == "measure") {
        r = run_measure(config);
    } else if (config.kind == "dynamics") {
        r = run_dynamics(config);
    } else if (config.kind == "example4") {
        r = run_example4(config);
    } else if (config.kind == "cat") {
        r = run_cat(config);
    } else if (config.kind == "phase_space") {
        r = run_phase(config);
    } else if (config.kind == "verify_suite") {
        r = run_verify(config);
    } else {
        fail(Errc::SchemaError, "unknown experiment kind '" + config.kind + "'");
    }
    r.id = config.id;
    r.kind = config.kind;
    r.seed = config.seed;
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

ReportFormat parse_report_format(const std::string &name) {
    if (name == "json") {
        return ReportFormat::Json;
    }
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    fail(Errc::SchemaError, "format must be json or csv");
}

std::string render_report(const Report &report, ReportFormat format, bool include_runtime) {
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        for (std::size_t i = 0; i < report.csv_header.size(); ++i) {
            out << (i ? "," : "") << report.csv_header[i];
        }
        out << '\n';
        for (const auto &r : report.csv_rows) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                out << (i ? "," : "") << r[i];
            }
            out << '\n';
        }
        return out.str();
    }
    nlohmann::json j{{"id", report.id},       {"kind", report.kind},       {"seed", report.seed},
                     {"passed", report.passed}, {"exact", report.exact}, {"sampled", report.sampled}};
    if (include_runtime) {
        j["runtime_seconds"] = report.runtime_seconds;
    }
    return dump_json(j) + "\n";
}

void emit_report(const Report &report, ReportFormat format, std::ostream &out, bool include_runtime) {
    out << render_report(report, format, include_runtime);
    if (!out) {
        fail(Errc::IoError, "failed to write report");
    }
}

void emit_report(const Report &report, ReportFormat format, const std::string &path, bool include_runtime) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(Errc::IoError, "cannot open '" + path + "' for writing");
    }
    emit_report(report, format, out, include_runtime);
}

}  // namespace qcs
