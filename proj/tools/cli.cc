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

#include "cli.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chanspec/channel.h"
#include "chanspec/cycles.h"
#include "chanspec/errors.h"
#include "chanspec/io.h"
#include "chanspec/nonneg.h"
#include "chanspec/qubit.h"
#include "chanspec/synthesis.h"
#include "chanspec/timeseries.h"

namespace chanspec::cli {

namespace {

class Scanner {
   public:
    explicit Scanner(std::string_view text) : text_(text) {
    }

    SpectrumMultiset parse_all() {
        std::vector<Complex> values;
        skip_ws();
        if (at_end()) {
            fail("empty value list");
        }
        while (true) {
            values.push_back(parse_value());
            skip_ws();
            if (at_end()) {
                break;
            }
            if (peek() != ',') {
                fail("expected ','");
            }
            ++pos_;
        }
        return SpectrumMultiset(std::move(values));
    }

   private:
    bool at_end() const {
        return pos_ >= text_.size();
    }
    char peek() const {
        return at_end() ? '\0' : text_[pos_];
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    [[noreturn]] void fail(const std::string &what) const {
        throw UsageError("cannot parse value list at column " + std::to_string(pos_ + 1) + ": " + what, pos_ + 1);
    }

    double parse_sign() {
        if (peek() == '+' || peek() == '-') {
            const double s = peek() == '-' ? -1.0 : 1.0;
            ++pos_;
            skip_ws();
            return s;
        }
        return 1.0;
    }

    bool number_ahead() const {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
    }

    double parse_number() {
        const std::size_t start = pos_;
        std::size_t digits = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
            ++digits;
        }
        if (peek() == '.') {
            ++pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
                ++digits;
            }
        }
        if (digits == 0) {
            pos_ = start;
            fail("expected a number");
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) {
                ++look;
            }
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                while (std::isdigit(static_cast<unsigned char>(peek()))) {
                    ++pos_;
                }
            }
        }
        const std::string token(text_.substr(start, pos_ - start));
        return std::strtod(token.c_str(), nullptr);
    }

    Complex parse_value() {
        skip_ws();
        const double s1 = parse_sign();
        if (peek() == 'i') {
            ++pos_;
            return {0.0, s1};
        }
        if (!number_ahead()) {
            fail("expected a number or 'i'");
        }
        const double first = s1 * parse_number();
        skip_ws();
        if (peek() == 'i') {
            ++pos_;
            return {0.0, first};
        }
        if (peek() != '+' && peek() != '-') {
            return {first, 0.0};
        }
        const double s2 = parse_sign();
        if (peek() == 'i') {
            ++pos_;
            return {first, s2};
        }
        if (!number_ahead()) {
            fail("expected the imaginary part");
        }
        const double second = s2 * parse_number();
        skip_ws();
        if (peek() != 'i') {
            fail("expected 'i' after the imaginary part");
        }
        ++pos_;
        return {first, second};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

struct Globals {
    std::uint64_t seed = 0;
    std::optional<double> tol;
    int jobs = 1;
};

double tol_or(const Globals &g, double fallback) {
    return g.tol.value_or(fallback);
}

Json parse_json_arg(const std::string &text) {
    if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
        try {
            return Json::parse(text);
        } catch (const Json::parse_error &e) {
            throw UsageError(std::string("malformed JSON argument: ") + e.what());
        }
    }
    return read_json_file(text);
}

void emit(std::ostream &out, const Json &j, const std::string &path) {
    if (path.empty()) {
        out << dump_json(j);
    } else {
        write_text_file(path, dump_json(j));
    }
}

Repr parse_repr_option(const std::string &name) {
    const auto r = parse_repr(name);
    if (!r) {
        throw UsageError("--repr must be kraus, superop or choi");
    }
    return *r;
}

Json facet_citation(const TetraPoint &p) {
    static const char *const kFacets[4] = {"1+s1+s2+s3 >= 0", "1+s1-s2-s3 >= 0", "1-s1+s2-s3 >= 0",
                                           "1-s1-s2+s3 >= 0"};
    Json out = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        if (p.facet_margins[i] < -1e-12) {
            out.push_back({{"facet", kFacets[i]}, {"margin", p.facet_margins[i]}});
        }
    }
    return out;
}

SynthesisOptions synthesis_options(const Globals &g) {
    SynthesisOptions o;
    o.optimizer.seed = g.seed;
    o.optimizer.jobs = g.jobs;
    return o;
}

int cmd_check(const Globals &g, const std::string &values, const std::string &mode, int horizon,
              const std::vector<int> &dims, std::ostream &out, std::ostream &err) {
    const auto spectrum = parse_complex_multiset(values);
    Json j = {{"mode", mode}, {"values", spectrum_to_json(spectrum)}};
    bool yes = false;
    if (mode == "qubit-cp") {
        if (spectrum.size() != 4) {
            throw UsageError("qubit-cp needs exactly four values");
        }
        const auto v = check_qubit_cp_spectrum(spectrum, tol_or(g, tol::kSpectral));
        j["verdict"] = qubit_verdict_to_json(v);
        if (v.point && !v.point->member) {
            j["violated_facets"] = facet_citation(*v.point);
        }
        yes = v.realizable;
    } else if (mode == "qubit-pos") {
        if (spectrum.size() != 4) {
            throw UsageError("qubit-pos needs exactly four values");
        }
        const auto v = check_and_synth_positive_qubit(spectrum, tol_or(g, tol::kSpectral));
        j["verdict"] = {{"realizable", v.realizable}, {"reason", v.reason}};
        if (v.rep) {
            j["verdict"]["delta"] = real_matrix_to_json(v.rep->delta);
            j["verdict"]["delta_norm"] = v.delta_norm;
        }
        yes = v.realizable;
    } else if (mode == "set") {
        const auto o = synth_spectral_set(spectrum);
        j["verdict"] = {{"realizable", o.ok()}, {"reason", o.reason}, {"message", o.message}};
        if (o.result) {
            j["verdict"]["d"] = o.result->dimension;
        }
        yes = o.ok();
    } else if (mode == "moments") {
        const auto r = moment_report(spectrum, horizon, dims);
        j["verdict"] = moment_report_to_json(r);
        yes = r.mucond1_ok && r.mucond2_ok;
    } else {
        throw UsageError("--mode must be qubit-cp, qubit-pos, set or moments");
    }
    out << dump_json(j);
    err << "check-spectrum (" << mode << "): " << (yes ? "realizable" : "not realizable") << "\n";
    return yes ? kOk : kNegative;
}

int cmd_synth(const Globals &g, const std::string &mode, const std::string &values, const std::string &spec_path,
              const std::string &out_path, const std::string &repr_name, std::ostream &out, std::ostream &err) {
    const Repr repr = parse_repr_option(repr_name);
    Json report;
    std::optional<Channel> channel;
    int code = kOk;
    if (mode == "cycles") {
        if (spec_path.empty()) {
            throw UsageError("synth --mode cycles needs --spec");
        }
        const auto spec = cycle_spec_from_json(parse_json_arg(spec_path));
        channel = synth_cycles(spec);
        report = {{"route", "cycles"},
                  {"d", channel->dim()},
                  {"target", spectrum_to_json(predicted_peripheral_spectrum(spec))},
                  {"achieved", spectrum_to_json(eig_multiset(channel->superop()))},
                  {"kernel_added",
                   static_cast<long long>(channel->dim()) * channel->dim() -
                       static_cast<long long>(spec.peripheral_count())}};
        report["status"] = "ok";
    } else {
        if (values.empty()) {
            throw UsageError("synth --mode " + mode + " needs --values");
        }
        const auto spectrum = parse_complex_multiset(values);
        if (mode == "qubit") {
            if (spectrum.size() != 4) {
                throw UsageError("synth --mode qubit needs exactly four values");
            }
            const auto v = check_qubit_cp_spectrum(spectrum, tol_or(g, tol::kSpectral));
            if (!v.realizable) {
                report = {{"status", "infeasible"}, {"reason", v.reason}, {"verdict", qubit_verdict_to_json(v)}};
                code = kNegative;
            } else {
                channel = synth_qubit_channel(spectrum, tol_or(g, tol::kSpectral));
                report = {{"status", "ok"},
                          {"route", "qubit"},
                          {"d", 2},
                          {"target", spectrum_to_json(spectrum)},
                          {"achieved", spectrum_to_json(eig_multiset(channel->superop()))},
                          {"kernel_added", 0}};
            }
        } else {
            SynthesisOutcome o;
            if (mode == "set") {
                o = synth_spectral_set(spectrum);
            } else if (mode == "nonzero") {
                o = synth_nonzero_spectrum(spectrum, synthesis_options(g));
            } else if (mode == "full-rank") {
                o = synth_full_kraus_rank(spectrum, synthesis_options(g));
            } else {
                throw UsageError("--mode must be qubit, set, nonzero, full-rank or cycles");
            }
            report = synthesis_report_to_json(o);
            if (o.result) {
                channel = o.result->channel;
            }
            code = o.ok() ? kOk : (o.status == SynthesisStatus::infeasible ? kNegative : kNumerical);
        }
    }
    if (channel) {
        report["verification"] = verification_to_json(verify(*channel));
        const Json cj = channel_to_json(*channel, repr);
        if (out_path.empty()) {
            report["channel"] = cj;
        } else {
            write_text_file(out_path, dump_json(cj));
            report["channel_file"] = out_path;
        }
    }
    out << dump_json(report);
    err << "synth (" << mode << "): " << report.value("status", "ok");
    if (channel) {
        err << ", d = " << channel->dim();
    }
    err << "\n";
    return code;
}

int cmd_analyze(const Globals &g, const std::string &path, int k_max, std::ostream &out, std::ostream &err) {
    const Channel c = channel_from_json(read_json_file(path));
    const auto report = verify(c);
    const double cptp_tol = tol_or(g, tol::kSpectral);
    Json j = {{"d", c.dim()}, {"repr", std::string(to_string(c.native_repr()))}};
    j["verification"] = verification_to_json(report);
    j["cptp"] = report.cptp(cptp_tol);
    j["spectrum"] = spectrum_to_json(eig_multiset(c.superop()));
    try {
        j["moments"] = moments(c, k_max);
    } catch (const PreconditionError &e) {
        j["moments"] = nullptr;
        j["moments_error"] = e.what();
    }
    const auto peri = peripheral_spectrum(c, tol_or(g, tol::kSpectral));
    j["peripheral"] = {{"phases", spectrum_to_json(peri.phases)}, {"moduli", peri.moduli}};
    j["stochastic_submatrix"] = real_matrix_to_json(stochastic_submatrix(c));
    bool primitive = false;
    if (report.cptp(cptp_tol)) {
        const auto cert = is_primitive(c);
        primitive = cert.primitive;
        j["primitivity"] = {{"primitive", cert.primitive},
                            {"spectral", cert.spectral},
                            {"kraus_span", cert.kraus_span},
                            {"span_length", cert.span_length},
                            {"wielandt_bound", cert.wielandt_bound},
                            {"peripheral_count", cert.peripheral_count},
                            {"fixed_point_min_eigenvalue", cert.fixed_point_min_eigenvalue}};
        j["irreducible"] = is_irreducible(c);
    } else {
        j["primitivity"] = nullptr;
        j["irreducible"] = nullptr;
    }
    out << dump_json(j);
    err << "analyze: d = " << c.dim() << ", " << (report.cptp(cptp_tol) ? "CPTP" : "not CPTP") << ", "
        << (primitive ? "primitive" : "not primitive") << "\n";
    return primitive ? kOk : kNegative;
}

int cmd_lift(const std::string &path, const std::string &out_path, const std::string &repr_name,
             std::ostream &out, std::ostream &err) {
    const Repr repr = parse_repr_option(repr_name);
    const Channel c = lift_to_channel(stochastic_from_json(read_json_file(path)));
    emit(out, channel_to_json(c, repr), out_path);
    err << "lift: d = " << c.dim() << "\n";
    return kOk;
}

int cmd_series_gen(const std::string &example, double x, double y, const std::string &channel_path,
                   const std::string &a_arg, const std::string &rho_arg, int steps, const std::string &out_path,
                   std::ostream &out, std::ostream &err) {
    Series s;
    if (!example.empty()) {
        if (example != "damped-rotation") {
            throw UsageError("--example must be damped-rotation");
        }
        const auto sys = damped_rotation_system(x, y);
        s = generate_series(sys.transfer, sys.observable, sys.state, steps);
    } else {
        if (channel_path.empty()) {
            throw UsageError("series-gen needs --example or --channel");
        }
        const Channel c = channel_from_json(read_json_file(channel_path));
        ComplexMatrix ket0 = ComplexMatrix::Zero(c.dim(), c.dim());
        ket0(0, 0) = 1.0;
        const ComplexMatrix a = a_arg.empty() ? ket0 : complex_matrix_from_json(parse_json_arg(a_arg));
        const ComplexMatrix rho = rho_arg.empty() ? ket0 : complex_matrix_from_json(parse_json_arg(rho_arg));
        s = generate_series(c, a, rho, steps);
    }
    if (out_path.empty()) {
        write_series_csv(out, s);
    } else {
        std::ofstream f(out_path);
        if (!f) {
            throw PreconditionError("io_error", "cannot write " + out_path);
        }
        write_series_csv(f, s);
    }
    err << "series-gen: " << s.size() << " values\n";
    return kOk;
}

int cmd_series_fit(const Globals &g, const std::string &path, int max_order, const std::string &plot_prefix,
                   std::ostream &out, std::ostream &err) {
    std::ifstream in(path);
    if (!in) {
        throw PreconditionError("io_error", "cannot open " + path);
    }
    const Series s = read_series_csv(in);
    const double tol = tol_or(g, 1e-8);
    Json j;
    SeriesVerdict v;
    try {
        v = qubit_series_verdict(s, tol, max_order);
    } catch (const PreconditionError &e) {
        if (e.reason() != "no_recurrence") {
            throw;
        }
        j = {{"realizable", false}, {"reason", "no_recurrence"}, {"note", e.what()}};
        out << dump_json(j);
        err << "series-fit: no finite recurrence at tolerance\n";
        return kNegative;
    }
    j = series_verdict_to_json(v);
    if (!plot_prefix.empty()) {
        std::ostringstream csv;
        const bool real = s.is_real();
        csv << (real ? "t,a_t\n" : "t,re,im\n");
        for (std::size_t t = 0; t < s.size(); ++t) {
            char buf[96];
            if (real) {
                std::snprintf(buf, sizeof buf, "%zu,%.17g\n", t, s.values[t].real());
            } else {
                std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", t, s.values[t].real(), s.values[t].imag());
            }
            csv << buf;
        }
        write_text_file(plot_prefix + ".csv", csv.str());
        Json plot = {{"poles", spectrum_to_json(v.model.poles)}, {"candidate_spectrum", spectrum_to_json(v.candidate)}};
        if (v.qubit && v.qubit->point) {
            plot["facet_margins"] = v.qubit->point->facet_margins;
            plot["min_margin"] = v.qubit->point->min_margin();
        }
        write_text_file(plot_prefix + ".json", dump_json(plot));
    }
    out << dump_json(j);
    err << "series-fit: order " << v.model.order << ", " << (v.realizable ? "qubit-realizable" : "not qubit-realizable")
        << "\n";
    return v.realizable ? kOk : kNegative;
}

}  // namespace

SpectrumMultiset parse_complex_multiset(std::string_view text) {
    return Scanner(text).parse_all();
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"chanspec: spectra of quantum channels"};
    app.require_subcommand(1);
    Globals g;
    double tol_value = 0.0;
    app.add_option("--seed", g.seed, "Seed for randomized paths")->capture_default_str();
    auto *tol_opt = app.add_option("--tol", tol_value, "Override the spectral tolerance");
    app.add_option("--jobs", g.jobs, "Worker threads for independent restarts")->check(CLI::PositiveNumber);

    std::string values, mode, spec_path, out_path, repr_name = "kraus", path, example, channel_path, a_arg, rho_arg,
                                                  plot_prefix;
    int horizon = kDefaultMomentHorizon;
    int k_max = 8;
    int steps = 64;
    int max_order = kDefaultMaxOrder;
    double x = 0.58;
    double y = 2.0 / 3.0;
    std::vector<int> dims;

    auto *check = app.add_subcommand("check-spectrum", "Decide realizability of a spectrum");
    check->add_option("--values", values, "Comma-separated complex values")->required();
    check->add_option("--mode", mode, "qubit-cp | qubit-pos | set | moments")->required();
    check->add_option("--horizon", horizon, "Moment horizon K")->check(CLI::PositiveNumber);
    check->add_option("--dims", dims, "Dimensions for the dimension-dependent moment inequality")->delimiter(',');
    check->fallthrough();

    auto *synth = app.add_subcommand("synth", "Construct a channel");
    synth->add_option("--mode", mode, "qubit | set | nonzero | full-rank | cycles")->required();
    synth->add_option("--values", values, "Comma-separated complex values");
    synth->add_option("--spec", spec_path, "CycleSpec JSON file or literal");
    synth->add_option("--out", out_path, "Channel JSON output file");
    synth->add_option("--repr", repr_name, "Output representation")->capture_default_str();
    synth->fallthrough();

    auto *analyze = app.add_subcommand("analyze", "Spectral analysis of a channel file");
    analyze->add_option("channel", path, "Channel JSON file")->required();
    analyze->add_option("--moments", k_max, "Number of moments")->check(CLI::PositiveNumber);
    analyze->fallthrough();

    auto *lift = app.add_subcommand("lift", "Lift a stochastic matrix to a channel");
    lift->add_option("stochastic", path, "Stochastic matrix JSON file")->required();
    lift->add_option("--out", out_path, "Channel JSON output file");
    std::string lift_repr = "choi";
    lift->add_option("--repr", lift_repr, "Output representation")->capture_default_str();
    lift->fallthrough();

    auto *gen = app.add_subcommand("series-gen", "Generate a_t = <A|T^t|rho>");
    gen->add_option("--example", example, "Built-in example (damped-rotation)");
    gen->add_option("--x", x, "Example parameter x")->capture_default_str();
    gen->add_option("--y", y, "Example parameter y")->capture_default_str();
    gen->add_option("--channel", channel_path, "Channel JSON file");
    gen->add_option("--A", a_arg, "Observable (JSON matrix or file), default |0><0|");
    gen->add_option("--rho", rho_arg, "State (JSON matrix or file), default |0><0|");
    gen->add_option("--steps", steps, "Sequence length")->check(CLI::PositiveNumber);
    gen->add_option("--out", out_path, "CSV output file");
    gen->fallthrough();

    auto *fit = app.add_subcommand("series-fit", "Fit a recurrence and decide qubit realizability");
    fit->add_option("csv", path, "Series CSV file")->required();
    fit->add_option("--max-order", max_order, "Largest recurrence order")->check(CLI::PositiveNumber);
    fit->add_option("--plot-data", plot_prefix, "Write <prefix>.csv and <prefix>.json");
    fit->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (tol_opt->count() > 0) {
            if (!(tol_value > 0.0)) {
                throw UsageError("--tol must be positive");
            }
            g.tol = tol_value;
        }
        if (check->parsed()) {
            return cmd_check(g, values, mode, horizon, dims, out, err);
        }
        if (synth->parsed()) {
            return cmd_synth(g, mode, values, spec_path, out_path, repr_name, out, err);
        }
        if (analyze->parsed()) {
            return cmd_analyze(g, path, k_max, out, err);
        }
        if (lift->parsed()) {
            return cmd_lift(path, out_path, lift_repr, out, err);
        }
        if (gen->parsed()) {
            return cmd_series_gen(example, x, y, channel_path, a_arg, rho_arg, steps, out_path, out, err);
        }
        if (fit->parsed()) {
            return cmd_series_fit(g, path, max_order, plot_prefix, out, err);
        }
        return kUsage;
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError &e) {
        err << "error (" << e.reason() << "): " << e.what() << "\n";
        return kUsage;
    } catch (const NumericalError &e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    } catch (const std::exception &e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    }
}

}  // namespace chanspec::cli
