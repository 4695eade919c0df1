// Copyright 2026 The chanspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chanspec/io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "chanspec/errors.h"

namespace chanspec {

namespace {

[[noreturn]] void bad_format(const std::string &message) {
    throw PreconditionError("bad_format", message);
}

std::string format_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

bool is_scalar(const Json &j) {
    return !j.is_array() && !j.is_object();
}

void dump_rec(const Json &j, int indent, int level, std::string &out) {
    const std::string pad(static_cast<std::size_t>(indent * (level + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * level), ' ');
    switch (j.type()) {
        case Json::value_t::null:
            out += "null";
            return;
        case Json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case Json::value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            return;
        case Json::value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            return;
        case Json::value_t::number_float: {
            const double x = j.get<double>();
            out += std::isfinite(x) ? format_g17(x) : "null";
            return;
        }
        case Json::value_t::string:
            out += j.dump();
            return;
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
            out += "[";
            bool first = true;
            for (const auto &e : j) {
                if (!first) {
                    out += ",";
                }
                if (flat) {
                    out += first ? "" : " ";
                } else {
                    out += "\n" + pad;
                }
                dump_rec(e, indent, level + 1, out);
                first = false;
            }
            out += flat ? "]" : "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out += first ? "\n" : ",\n";
                out += pad + Json(it.key()).dump() + ": ";
                dump_rec(it.value(), indent, level + 1, out);
                first = false;
            }
            out += "\n" + close_pad + "}";
            return;
        }
        default:
            out += "null";
            return;
    }
}

double number_from_json(const Json &j, const char *what) {
    if (!j.is_number()) {
        bad_format(std::string(what) + ": expected a number");
    }
    return j.get<double>();
}

int int_from_json(const Json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        bad_format(std::string("missing or non-integer field \"") + key + "\"");
    }
    return j.at(key).get<int>();
}

}  // namespace

std::string dump_json(const Json &j, int indent) {
    std::string out;
    dump_rec(j, indent, 0, out);
    out += "\n";
    return out;
}

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    bad_format("complex number must be a number or [re, im]");
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix complex_matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        bad_format("matrix must be a non-empty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto &row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            bad_format("matrix rows must all have the same length");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
        }
    }
    require_finite(m, "matrix");
    return m;
}

Json real_matrix_to_json(const RealMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json spectrum_to_json(const SpectrumMultiset &s) {
    Json out = Json::array();
    for (const auto &z : s) {
        out.push_back(complex_to_json(z));
    }
    return out;
}

SpectrumMultiset spectrum_from_json(const Json &j) {
    if (!j.is_array()) {
        bad_format("spectrum must be an array");
    }
    std::vector<Complex> values;
    for (const auto &e : j) {
        values.push_back(complex_from_json(e));
    }
    return SpectrumMultiset(std::move(values));
}

Json channel_to_json(const Channel &c, std::optional<Repr> repr) {
    const Repr r = repr.value_or(c.native_repr());
    Json out;
    out["d"] = c.dim();
    out["repr"] = std::string(to_string(r));
    switch (r) {
        case Repr::kraus: {
            Json list = Json::array();
            for (const auto &k : c.kraus()) {
                list.push_back(matrix_to_json(k));
            }
            out["data"] = std::move(list);
            break;
        }
        case Repr::superop:
            out["data"] = matrix_to_json(c.superop());
            break;
        case Repr::choi:
            out["data"] = matrix_to_json(c.choi());
            break;
    }
    return out;
}

Channel channel_from_json(const Json &j) {
    if (!j.is_object()) {
        bad_format("channel must be a JSON object");
    }
    const int d = int_from_json(j, "d");
    if (d < 1) {
        bad_format("channel: d must be >= 1");
    }
    if (!j.contains("repr") || !j.at("repr").is_string()) {
        bad_format("channel: missing \"repr\"");
    }
    const auto repr = parse_repr(j.at("repr").get<std::string>());
    if (!repr) {
        bad_format("channel: repr must be kraus, superop or choi");
    }
    if (!j.contains("data")) {
        bad_format("channel: missing \"data\"");
    }
    const auto &data = j.at("data");
    if (*repr == Repr::kraus) {
        if (!data.is_array() || data.empty()) {
            bad_format("channel: kraus data must be a non-empty array of matrices");
        }
        std::vector<ComplexMatrix> kraus;
        for (const auto &k : data) {
            auto m = complex_matrix_from_json(k);
            if (m.rows() != d || m.cols() != d) {
                bad_format("channel: Kraus operator is not d x d");
            }
            kraus.push_back(std::move(m));
        }
        return Channel::from_kraus(std::move(kraus));
    }
    auto m = complex_matrix_from_json(data);
    if (m.rows() != d * d || m.cols() != d * d) {
        bad_format("channel: superop/choi data must be d^2 x d^2");
    }
    return *repr == Repr::superop ? Channel::from_superop(std::move(m)) : Channel::from_choi(std::move(m));
}

Json stochastic_to_json(const RealMatrix &s) {
    Json out;
    out["n"] = s.rows();
    Json data = Json::array();
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
        for (Eigen::Index j = 0; j < s.cols(); ++j) {
            data.push_back(s(i, j));
        }
    }
    out["data"] = std::move(data);
    return out;
}

RealMatrix stochastic_from_json(const Json &j) {
    if (!j.is_object()) {
        bad_format("stochastic matrix must be a JSON object");
    }
    const int n = int_from_json(j, "n");
    if (n < 1 || !j.contains("data") || !j.at("data").is_array()) {
        bad_format("stochastic matrix: need n >= 1 and a data array");
    }
    const auto &data = j.at("data");
    RealMatrix s(n, n);
    if (!data.empty() && data[0].is_array()) {
        if (data.size() != static_cast<std::size_t>(n)) {
            bad_format("stochastic matrix: expected n rows");
        }
        for (int i = 0; i < n; ++i) {
            const auto &row = data[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
                bad_format("stochastic matrix: expected n entries per row");
            }
            for (int k = 0; k < n; ++k) {
                s(i, k) = number_from_json(row[static_cast<std::size_t>(k)], "stochastic entry");
            }
        }
    } else {
        if (data.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
            bad_format("stochastic matrix: expected n*n entries");
        }
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                s(i, k) = number_from_json(data[static_cast<std::size_t>(i * n + k)], "stochastic entry");
            }
        }
    }
    require_finite(s, "stochastic matrix");
    return s;
}

Json cycle_spec_to_json(const CycleSpec &spec) {
    Json cycles = Json::array();
    for (const auto &c : spec.cycles) {
        Json mu = Json::array();
        for (const auto &z : c.phases) {
            mu.push_back(complex_to_json(z));
        }
        cycles.push_back({{"n", c.length}, {"d", c.block_dim}, {"mu", std::move(mu)}});
    }
    return {{"cycles", std::move(cycles)}};
}

CycleSpec cycle_spec_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("cycles") || !j.at("cycles").is_array()) {
        bad_format("cycle spec must be an object with a \"cycles\" array");
    }
    CycleSpec spec;
    for (const auto &c : j.at("cycles")) {
        Cycle cycle;
        cycle.length = int_from_json(c, "n");
        cycle.block_dim = int_from_json(c, "d");
        if (!c.contains("mu") || !c.at("mu").is_array()) {
            bad_format("cycle spec: missing \"mu\" array");
        }
        for (const auto &z : c.at("mu")) {
            cycle.phases.push_back(complex_from_json(z));
        }
        spec.cycles.push_back(std::move(cycle));
    }
    spec.validate();
    return spec;
}

Series read_series_csv(std::istream &in) {
    Series s;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto parse = [&](const std::string &field) {
            const char *begin = field.c_str();
            char *end = nullptr;
            const double x = std::strtod(begin, &end);
            while (end != nullptr && (*end == ' ' || *end == '\t' || *end == '\r')) {
                ++end;
            }
            if (end == begin || end == nullptr || *end != '\0' || !std::isfinite(x)) {
                bad_format("series CSV line " + std::to_string(line_no) + ": cannot parse \"" + field + "\"");
            }
            return x;
        };
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            s.values.emplace_back(parse(line), 0.0);
        } else {
            if (line.find(',', comma + 1) != std::string::npos) {
                bad_format("series CSV line " + std::to_string(line_no) + ": expected at most two fields");
            }
            s.values.emplace_back(parse(line.substr(0, comma)), parse(line.substr(comma + 1)));
        }
    }
    return s;
}

void write_series_csv(std::ostream &out, const Series &s) {
    const bool real = s.is_real();
    for (const auto &v : s.values) {
        out << format_g17(v.real());
        if (!real) {
            out << ',' << format_g17(v.imag());
        }
        out << '\n';
    }
}

Json verification_to_json(const VerificationReport &r) {
    return {{"trace_preserving_error", r.trace_preserving_error},
            {"unital_error", r.unital_error},
            {"hermiticity_error", r.hermiticity_error},
            {"cp_margin", r.cp_margin},
            {"contains_one_error", r.contains_one_error},
            {"spectral_radius", r.spectral_radius}};
}

Json moment_report_to_json(const MomentReport &r) {
    Json jll = Json::array();
    for (const auto &[d, ok] : r.jll_ok) {
        jll.push_back({{"d", d}, {"ok", ok}});
    }
    Json out = {{"horizon", r.horizon},
                {"mu", r.mu},
                {"mucond1_ok", r.mucond1_ok},
                {"mucond2_ok", r.mucond2_ok},
                {"jll", std::move(jll)},
                {"screening_only", true}};
    out["first_violation"] = r.first_violation ? Json(*r.first_violation) : Json(nullptr);
    out["violation"] = r.violation;
    return out;
}

Json tetra_point_to_json(const TetraPoint &p) {
    return {{"s", {p.s(0), p.s(1), p.s(2)}},
            {"facet_margins", p.facet_margins},
            {"min_margin", p.min_margin()},
            {"member", p.member}};
}

Json qubit_verdict_to_json(const QubitSpectrumVerdict &v) {
    Json out = {{"realizable", v.realizable}, {"reason", v.reason}};
    if (v.point) {
        out["tetrahedron"] = tetra_point_to_json(*v.point);
    }
    if (v.reduced) {
        out["form"] = v.reduced->complex_pair ? "complex" : "real";
    }
    return out;
}

Json recurrence_to_json(const RecurrenceModel &m) {
    Json coeffs = Json::array();
    for (const auto &c : m.coefficients) {
        coeffs.push_back(complex_to_json(c));
    }
    return {{"order", m.order},
            {"coefficients", std::move(coeffs)},
            {"residual", m.residual},
            {"poles", spectrum_to_json(m.poles)}};
}

Json series_verdict_to_json(const SeriesVerdict &v) {
    Json out = {{"realizable", v.realizable},
                {"reason", v.reason},
                {"model", recurrence_to_json(v.model)},
                {"candidate_spectrum", spectrum_to_json(v.candidate)},
                {"note", v.note}};
    if (v.qubit) {
        out["qubit"] = qubit_verdict_to_json(*v.qubit);
    }
    return out;
}

Json synthesis_report_to_json(const SynthesisOutcome &outcome) {
    Json out = {{"status", std::string(to_string(outcome.status))},
                {"reason", outcome.reason},
                {"message", outcome.message}};
    if (outcome.moments) {
        out["moments"] = moment_report_to_json(*outcome.moments);
    }
    if (!outcome.result) {
        return out;
    }
    const auto &r = *outcome.result;
    out["route"] = std::string(to_string(r.route));
    out["d"] = r.dimension;
    out["target"] = spectrum_to_json(r.target);
    out["achieved"] = spectrum_to_json(r.achieved);
    out["kernel_added"] = r.kernel_added;
    const auto report = verify(r.channel);
    out["residuals"] = {{"objective", r.objective},
                        {"match_error", r.match_error},
                        {"cp_margin", report.cp_margin},
                        {"trace_preserving_error", report.trace_preserving_error}};
    out["restarts_used"] = r.restarts_used;
    if (r.realization) {
        out["stochastic"] = stochastic_to_json(r.realization->s);
        out["provenance"] = std::string(to_string(r.realization->provenance));
    }
    return out;
}

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw PreconditionError("io_error", "cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        bad_format(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw PreconditionError("io_error", "cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw PreconditionError("io_error", "write failed for " + path.string());
    }
}

}  // namespace chanspec
