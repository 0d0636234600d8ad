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

#include "qcs/json_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qcs/error.h"

namespace qcs {

namespace {

Complex entry_from_json(const nlohmann::json &x) {
    if (x.is_number()) {
        return x.get<double>();
    }
    if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
        return {x[0].get<double>(), x[1].get<double>()};
    }
    fail(Errc::SchemaError, "entries must be numbers or [re, im] pairs");
}

double bound_from_json(const nlohmann::json &x) {
    if (x.is_number()) {
        return x.get<double>();
    }
    if (x.is_string()) {
        auto s = x.get<std::string>();
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
        if (s == "inf" || s == "+inf") {
            return std::numeric_limits<double>::infinity();
        }
    }
    fail(Errc::SchemaError, "breakpoints must be numbers, \"-inf\" or \"inf\"");
}

double number(const nlohmann::json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number()) {
        fail(Errc::SchemaError, std::string("function needs numeric '") + key + "'");
    }
    return j[key].get<double>();
}

std::vector<double> numbers(const nlohmann::json &j) {
    if (!j.is_array()) {
        fail(Errc::SchemaError, "expected an array of numbers");
    }
    std::vector<double> out;
    for (const auto &x : j) {
        if (!x.is_number()) {
            fail(Errc::SchemaError, "expected an array of numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

void dump(const nlohmann::json &j, int indent, int depth, std::string &out) {
    auto newline = [&](int d) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto &[key, value] : j.items()) {
                if (!first) {
                    out += ',';
                }
                first = false;
                newline(depth + 1);
                out += nlohmann::json(key).dump();
                out += indent >= 0 ? ": " : ":";
                dump(value, indent, depth + 1, out);
            }
            newline(depth);
            out += '}';
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            bool flat = std::all_of(j.begin(), j.end(), [](const auto &x) { return x.is_primitive(); });
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) {
                    out += flat ? ", " : ",";
                }
                if (!flat) {
                    newline(depth + 1);
                }
                dump(j[i], indent, depth + 1, out);
            }
            if (!flat) {
                newline(depth);
            }
            out += ']';
            return;
        }
        case nlohmann::json::value_t::number_float: {
            double x = j.get<double>();
            out += std::isfinite(x) ? format_double(x) : nlohmann::json(std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf")).dump();
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

CMatrix matrix_from_json(const nlohmann::json &j) {
    if (j.is_string()) {
        auto name = j.get<std::string>();
        CMatrix m(2, 2);
        const Complex i(0.0, 1.0);
        if (name == "sigma_x") {
            m << 0.0, 1.0, 1.0, 0.0;
        } else if (name == "sigma_y") {
            m << 0.0, -i, i, 0.0;
        } else if (name == "sigma_z") {
            m << 1.0, 0.0, 0.0, -1.0;
        } else if (name == "hadamard") {
            m << 1.0, 1.0, 1.0, -1.0;
            m /= std::sqrt(2.0);
        } else {
            fail(Errc::SchemaError, "unknown matrix name '" + name + "'");
        }
        return m;
    }
    if (!j.is_array() || j.empty()) {
        fail(Errc::SchemaError, "matrix must be a non-empty array of rows");
    }
    const auto n = static_cast<Eigen::Index>(j.size());
    CMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const auto &row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            fail(Errc::SchemaError, "matrix must be square");
        }
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

CVector vector_from_json(const nlohmann::json &j) {
    if (!j.is_array() || j.empty()) {
        fail(Errc::SchemaError, "vector must be a non-empty array");
    }
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = entry_from_json(j[i]);
    }
    return v;
}

nlohmann::json to_json(const CVector &v) {
    nlohmann::json out = nlohmann::json::array();
    for (auto x : v) {
        out.push_back({x.real(), x.imag()});
    }
    return out;
}

PiecewiseFn piecewise_fn_from_json(const nlohmann::json &j) {
    std::string kind;
    if (j.is_string()) {
        kind = j.get<std::string>();
    } else if (j.is_object() && j.contains("kind") && j["kind"].is_string()) {
        kind = j["kind"].get<std::string>();
    } else {
        fail(Errc::SchemaError, "function must be a name or an object with 'kind'");
    }
    if (kind == "identity") {
        return PiecewiseFn::identity();
    }
    if (kind == "square") {
        return PiecewiseFn::square();
    }
    if (kind == "absolute") {
        return PiecewiseFn::absolute();
    }
    if (!j.is_object()) {
        fail(Errc::SchemaError, "function '" + kind + "' needs parameters");
    }
    if (kind == "constant") {
        return PiecewiseFn::constant(number(j, "c"));
    }
    if (kind == "affine") {
        return PiecewiseFn::affine(number(j, "slope"), number(j, "intercept"));
    }
    if (kind == "monomial") {
        if (!j.contains("power") || !is_nonnegative_integer(j["power"])) {
            fail(Errc::SchemaError, "monomial needs a nonnegative integer 'power'");
        }
        return PiecewiseFn::monomial(j["power"].get<unsigned>());
    }
    if (kind == "polynomial") {
        return PiecewiseFn::polynomial(numbers(j.value("coefficients", nlohmann::json())));
    }
    if (kind == "indicator") {
        return PiecewiseFn::indicator(number(j, "lo"), number(j, "hi"));
    }
    if (kind == "piecewise") {
        if (!j.contains("breakpoints") || !j.contains("coefficients") || !j["breakpoints"].is_array() ||
            !j["coefficients"].is_array()) {
            fail(Errc::SchemaError, "piecewise function needs 'breakpoints' and 'coefficients'");
        }
        std::vector<double> bp;
        for (const auto &x : j["breakpoints"]) {
            bp.push_back(bound_from_json(x));
        }
        std::vector<std::vector<double>> coeffs;
        for (const auto &c : j["coefficients"]) {
            coeffs.push_back(numbers(c));
        }
        try {
            return PiecewiseFn(std::move(bp), std::move(coeffs));
        } catch (const Error &e) {
            fail(Errc::SchemaError, e.what());
        }
    }
    fail(Errc::SchemaError, "unknown function kind '" + kind + "'");
}

bool is_nonnegative_integer(const nlohmann::json &j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string dump_json(const nlohmann::json &j, int indent) {
    std::string out;
    dump(j, indent, 0, out);
    return out;
}

}  // namespace qcs
