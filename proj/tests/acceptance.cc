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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chanspec/channel.h"
#include "chanspec/cycles.h"
#include "chanspec/errors.h"
#include "chanspec/linalg.h"
#include "chanspec/nonneg.h"
#include "chanspec/qubit.h"
#include "chanspec/synthesis.h"
#include "chanspec/timeseries.h"

namespace {

using namespace chanspec;

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string &what) {
        if (!cond && ok) {
            why << what;
        }
        ok = ok && cond;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SpectrumMultiset spectrum_of(const Channel &c) {
    return eig_multiset(c.superop());
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// 1: verdict flips between x = 0.58 and x = 0.59 at y = 2/3.
void boundary(Check &c) {
    const double y = 2.0 / 3.0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const double x : {0.58, 0.59}) {
        const auto sys = damped_rotation_system(x, y);
        const auto s = generate_series(sys.transfer, sys.observable, sys.state, 64);
        const auto v = qubit_series_verdict(s);
        const bool want = x < 0.585;
        c.expect(v.realizable == want, "verdict at x=" + fmt(x));
        c.expect(v.qubit && v.qubit->point, "no tetrahedron point at x=" + fmt(x));
        if (v.qubit && v.qubit->point) {
            const double expected = 1.0 + y - 2.0 * std::sqrt(2.0) * x;
            const double got = v.qubit->point->min_margin();
            c.expect(std::abs(got - expected) <= 1e-6, "margin " + fmt(got) + " vs " + fmt(expected));
        }
        c.expect(!want || v.witness.has_value(), "missing witness");
    }
    c.expect(seconds_since(t0) < 1.0, "runtime >= 1 s");
}

// 2: spectra of random qubit channels are accepted.
void qubit_soundness(Check &c) {
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int m = 1 + static_cast<int>(seed % 4);
        const auto ch = random_channel(2, m, 1000 + seed);
        const auto v = check_qubit_cp_spectrum(spectrum_of(ch));
        c.expect(v.realizable, "rejected seed " + std::to_string(seed) + " (" + v.reason + ")");
    }
    c.expect(seconds_since(t0) < 10.0, "runtime >= 10 s");
}

Eigen::Vector3d uniform_in_tetrahedron(std::mt19937_64 &rng) {
    static const Eigen::Vector3d corners[4] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    std::exponential_distribution<double> e(1.0);
    double w[4];
    double total = 0.0;
    for (double &x : w) {
        x = e(rng);
        total += x;
    }
    Eigen::Vector3d s = Eigen::Vector3d::Zero();
    for (int k = 0; k < 4; ++k) {
        s += (w[k] / total) * corners[k];
    }
    return s;
}

// 3: every point of the tetrahedron is synthesised.
void qubit_completeness(Check &c) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000 && c.ok; ++i) {
        const auto s = uniform_in_tetrahedron(rng);
        const SpectrumMultiset target{1.0, s(0), s(1), s(2)};
        try {
            const auto ch = synth_qubit_channel(target);
            const auto r = verify(ch);
            c.expect(r.cp_margin >= -1e-9, "cp_margin " + fmt(r.cp_margin));
            c.expect(r.trace_preserving_error <= 1e-9, "tp error " + fmt(r.trace_preserving_error));
            c.expect(multiset_match(spectrum_of(ch), target, 1e-8).matched, "spectrum mismatch");
        } catch (const std::exception &e) {
            c.expect(false, std::string("sample ") + std::to_string(i) + ": " + e.what());
        }
    }
}

// 4: facet test agrees with the Choi spectrum of the unital map 1 + diag(s).
void tetra_oracle(Check &c) {
    int disagreements = 0;
    for (int a = 0; a <= 20; ++a) {
        for (int b = 0; b <= 20; ++b) {
            for (int k = 0; k <= 20; ++k) {
                const Eigen::Vector3d s(-1.0 + 0.1 * a, -1.0 + 0.1 * b, -1.0 + 0.1 * k);
                QubitPauliRep rep;
                rep.delta = s.asDiagonal();
                const auto choi = from_pauli_rep(rep).choi();
                const double min_eig = herm_eigensystem(choi).values(0);
                const bool cp = min_eig >= -1e-10;
                disagreements += tetra_membership(s).member != cp ? 1 : 0;
            }
        }
    }
    c.expect(disagreements == 0, std::to_string(disagreements) + " grid points disagree");
}

// 5: Kraus-product moments equal superoperator trace powers.
void kraus_moments(Check &c) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int d = 2 + static_cast<int>(seed % 2);
        const int m = 1 + static_cast<int>((seed / 3) % 4);
        const auto ch = random_channel(d, m, 5000 + seed);
        const auto by_kraus = moments(ch, 4, MomentMethod::kraus);
        ComplexMatrix power = ComplexMatrix::Identity(d * d, d * d);
        for (int k = 1; k <= 4; ++k) {
            power = power * ch.superop();
            const double direct = power.trace().real();
            c.expect(std::abs(by_kraus[k - 1] - direct) <= 1e-8 * std::abs(direct) + 1e-10,
                     "seed " + std::to_string(seed) + " k=" + std::to_string(k));
        }
    }
}

// 6: the d = 3 counterexample.
void jll(Check &c) {
    const auto ch = jll_counterexample_channel(3);
    const auto mu = moments(ch, 2);
    c.expect(std::abs(mu[0] - 2.0) <= 1e-10, "mu1 = " + fmt(mu[0]));
    c.expect(mu[1] <= 1e-10, "mu2 = " + fmt(mu[1]));
    c.expect(mu[0] * mu[0] > 3.0 * mu[1], "inequality not violated");
    const auto cert = is_primitive(ch);
    c.expect(cert.kraus_span && cert.span_length >= 1 && cert.span_length <= 56,
             "span length " + std::to_string(cert.span_length));
}

RealMatrix random_stochastic(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RealMatrix s(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            s(i, j) = u(rng);
        }
        s.col(j) /= s.col(j).sum();
    }
    return s;
}

// 7: lift spectrum law and diagonal Choi margin.
void lift_law(Check &c) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + i % 6;
        const RealMatrix s = random_stochastic(n, rng);
        const auto ch = lift_to_channel(s);
        const auto expected = eig_multiset(s).with_zeros(static_cast<std::size_t>(n * (n - 1)));
        c.expect(multiset_match(spectrum_of(ch), expected, 1e-8).matched, "spectrum, sample " + std::to_string(i));
        const double margin = verify(ch).cp_margin;
        c.expect(margin == s.minCoeff(), "cp_margin " + fmt(margin) + " vs min entry " + fmt(s.minCoeff()));
    }
}

// 8: spectral sets are realised in dimension <= 2 (N - 1).
void spectral_sets(Check &c) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const int target_size = 2 + i % 5;
        std::vector<Complex> values{1.0};
        while (static_cast<int>(values.size()) < target_size) {
            const double r = std::sqrt(u(rng));
            if (static_cast<int>(values.size()) + 2 <= target_size && u(rng) < 0.5) {
                const double phase = std::numbers::pi * (0.05 + 0.9 * u(rng));
                values.push_back(std::polar(r, phase));
                values.push_back(std::polar(r, -phase));
            } else {
                values.emplace_back(-1.0 + 1.95 * u(rng), 0.0);
            }
        }
        const SpectrumMultiset target(values);
        const auto out = synth_spectral_set(target);
        c.expect(out.ok(), "sample " + std::to_string(i) + " not synthesised (" + out.reason + ")");
        if (!out.ok()) {
            continue;
        }
        const int n = static_cast<int>(dedupe(target).size());
        c.expect(out.result->dimension <= 2 * (n - 1) || (n == 1 && out.result->dimension == 2),
                 "dimension " + std::to_string(out.result->dimension));
        const auto achieved = dedupe(spectrum_of(out.result->channel).nonzero_part());
        c.expect(same_spectral_set(achieved, dedupe(target).nonzero_part()), "spectral set differs");
        c.expect(verify(out.result->channel).cptp(1e-8), "not CPTP");
    }
}

// 9: cycle synthesis reproduces the predicted peripheral multiset.
void cycles(Check &c) {
    const double pi = std::numbers::pi;
    std::vector<CycleSpec> specs;
    specs.push_back({{Cycle{3, 1, {1.0}}}});
    for (const double theta : {pi / 5, pi / 2}) {
        specs.push_back({{Cycle{1, 2, {1.0, std::polar(1.0, theta)}}}});
    }
    specs.push_back({{Cycle{2, 2, {1.0, Complex(0.0, 1.0)}}}});
    for (const auto &spec : specs) {
        const auto ch = synth_cycles(spec);
        const auto nonzero = spectrum_of(ch).nonzero_part();
        const auto predicted = predicted_peripheral_spectrum(spec);
        c.expect(predicted.size() == spec.peripheral_count(), "predicted count");
        c.expect(nonzero.size() == spec.peripheral_count(), "nonzero count " + std::to_string(nonzero.size()));
        c.expect(multiset_match(nonzero, predicted, 1e-8).matched, "multiset mismatch");
        for (const auto &z : nonzero) {
            c.expect(std::abs(std::abs(z) - 1.0) <= 1e-8, "non-unimodular " + fmt(std::abs(z)));
        }
        c.expect(verify(ch).cptp(1e-8) && verify(ch).unital(1e-8), "not CPTP unital");
    }
}

// 10: companion and optimiser routes end to end.
void classical(Check &c) {
    const SpectrumMultiset suleimanova{1.0, -0.5, -0.3};
    const auto a = synth_nonzero_spectrum(suleimanova);
    c.expect(a.ok() && a.result->route == Route::companion, "companion route not taken");
    if (a.ok() && a.result->realization) {
        const auto &r = *a.result->realization;
        c.expect(r.m.minCoeff() >= 0.0, "companion has negative entries");
        const RealVector sums = r.s.colwise().sum();
        c.expect((sums.array() - 1.0).abs().maxCoeff() <= 1e-10, "column sums");
        c.expect(multiset_match(spectrum_of(a.result->channel).nonzero_part(), suleimanova, 1e-7).matched,
                 "lifted spectrum");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const SpectrumMultiset target{1.0, 1.0, 1.0, -1.0};
    SynthesisOptions options;
    options.optimizer.restarts = 50;
    const auto b = synth_nonzero_spectrum(target, options);
    c.expect(b.ok(), "optimizer route failed (" + b.reason + ": " + b.message + ")");
    if (b.ok()) {
        c.expect(b.result->route == Route::optimizer, "route " + std::string(to_string(b.result->route)));
        c.expect(b.result->dimension == 4, "d = " + std::to_string(b.result->dimension));
        c.expect(b.result->restarts_used <= 50, "restarts");
        c.expect(multiset_match(spectrum_of(b.result->channel).nonzero_part(), target, 1e-7).matched,
                 "nonzero spectrum");
    }
    c.expect(seconds_since(t0) < 30.0, "runtime >= 30 s");
}

// 11: full-Kraus-rank realisations.
void full_rank(Check &c) {
    for (const SpectrumMultiset &target : {SpectrumMultiset{1.0, 0.1}, SpectrumMultiset{1.0, -0.2, -0.2}}) {
        const auto out = synth_full_kraus_rank(target);
        c.expect(out.ok(), "not synthesised (" + out.reason + ")");
        if (!out.ok()) {
            continue;
        }
        c.expect(out.result->realization && out.result->realization->s.minCoeff() > 0.0, "not entrywise positive");
        c.expect(herm_eigensystem(out.result->channel.choi()).values(0) > 0.0, "Choi not positive definite");
    }
    c.expect(!synth_full_kraus_rank(SpectrumMultiset{1.0, -1.0}).ok(), "{1,-1} accepted");
}

// 12: trace normalisation recovers the scale.
void normalization(Check &c) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int d = 2 + static_cast<int>(seed % 2);
        const double scale = u(rng);
        const ComplexMatrix superop = scale * random_channel(d, 2, 12000 + seed).superop();
        const auto n = normalize_trace_preserving(superop);
        c.expect(std::abs(n.spectral_radius - scale) <= 1e-6, "rho " + fmt(n.spectral_radius) + " vs " + fmt(scale));
        c.expect(multiset_match(spectrum_of(n.channel).scaled(n.spectral_radius), eig_multiset(superop), 1e-6).matched,
                 "spectrum, seed " + std::to_string(seed));
        c.expect(verify(n.channel).trace_preserving(1e-8), "not trace preserving");
    }
}

// 13: recurrence recovery and annihilation by the characteristic polynomial.
void recovery(Check &c) {
    const double y = 2.0 / 3.0;
    for (const double x : {0.58, 0.59}) {
        const auto sys = damped_rotation_system(x, y);
        const auto s = generate_series(sys.transfer, sys.observable, sys.state, 64);
        const auto model = fit_recurrence(s);
        c.expect(model.order == 3, "order " + std::to_string(model.order));
        const SpectrumMultiset expected{Complex(x, x), Complex(x, -x), y};
        const auto m = multiset_match(model.poles, expected, 1e-6);
        c.expect(m.matched, "pole error " + fmt(m.max_cost));
        const auto charpoly = charpoly_coefficients(RealMatrix(sys.transfer.real()));
        const std::vector<Complex> p(charpoly.begin(), charpoly.end());
        c.expect(annihilation_residual(s, p) <= 1e-8, "damped rotation residual");
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto ch = random_channel(2, 1 + static_cast<int>(seed % 4), 13000 + seed);
        const auto ch_rho = random_channel(2, 2, 13500 + seed);
        const ComplexMatrix rho = ch_rho.apply(ComplexMatrix::Identity(2, 2) / 2.0);
        const ComplexMatrix a = random_channel(2, 1, 13700 + seed).kraus()[0];
        const auto s = generate_series(ch, a, rho, 32);
        const RealMatrix ptm = pauli_transfer_matrix(ch).real();
        const auto charpoly = charpoly_coefficients(ptm);
        const std::vector<Complex> p(charpoly.begin(), charpoly.end());
        c.expect(annihilation_residual(s, p) <= 1e-8, "residual, seed " + std::to_string(seed));
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check &)>>> criteria = {
        {"qubit series verdict boundary", boundary},
        {"qubit soundness on random channels", qubit_soundness},
        {"qubit completeness on the tetrahedron", qubit_completeness},
        {"tetrahedron vs Choi oracle", tetra_oracle},
        {"Kraus-product moments", kraus_moments},
        {"moment counterexample channel", jll},
        {"stochastic lift spectrum law", lift_law},
        {"spectral set synthesis", spectral_sets},
        {"peripheral cycle synthesis", cycles},
        {"classical pipeline", classical},
        {"full Kraus rank route", full_rank},
        {"trace normalisation", normalization},
        {"time-series recovery", recovery},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(check);
        } catch (const std::exception &e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(t0);
        std::printf("%s criterion %2zu: %s (%.2f s)%s%s\n", check.ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), elapsed, check.ok ? "" : " -- ", check.why.str().c_str());
        failures += check.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
