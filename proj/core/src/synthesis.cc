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

#include "chanspec/synthesis.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chanspec/errors.h"
#include "chanspec/qubit.h"

namespace chanspec {

namespace {

constexpr double kUnitTolerance = 1e-9;
constexpr double kZeroTolerance = 1e-12;
constexpr double kNonzeroMatch = 1e-7;

SynthesisOutcome negative(SynthesisStatus status, std::string reason, std::string message) {
    SynthesisOutcome out;
    out.status = status;
    out.reason = std::move(reason);
    out.message = std::move(message);
    return out;
}

double match_tolerance(const SpectrumMultiset &target, double base) {
    std::size_t worst = 1;
    for (const auto &a : target) {
        std::size_t count = 0;
        for (const auto &b : target) {
            count += std::abs(a - b) <= 1e-6 ? 1 : 0;
        }
        worst = std::max(worst, count);
    }
    if (worst <= 1) {
        return base;
    }
    return std::max(base, 10.0 * std::pow(std::numeric_limits<double>::epsilon(), 1.0 / static_cast<double>(worst)));
}

std::size_t index_closest_to_one(const SpectrumMultiset &s) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (std::abs(s[i] - 1.0) < std::abs(s[best] - 1.0)) {
            best = i;
        }
    }
    return best;
}

// Necessary conditions shared by the non-zero-spectrum routes.
std::optional<SynthesisOutcome> screen(const SpectrumMultiset &spectrum, std::string_view op) {
    if (spectrum.empty()) {
        throw PreconditionError("empty", std::string(op) + ": empty spectrum");
    }
    for (const auto &lambda : spectrum) {
        if (std::abs(lambda) <= kZeroTolerance) {
            throw PreconditionError("contains_zero", std::string(op) + ": target must not contain 0");
        }
    }
    if (std::abs(spectrum[index_closest_to_one(spectrum)] - 1.0) > tol::kSpectral) {
        return negative(SynthesisStatus::infeasible, "no_unit_eigenvalue", "1 is not an element of the target");
    }
    if (!spectrum.conjugation_closed()) {
        return negative(SynthesisStatus::infeasible, "not_conjugation_closed",
                        "target is not closed under complex conjugation");
    }
    if (spectrum.spectral_radius() > 1.0 + kZeroTolerance) {
        return negative(SynthesisStatus::infeasible, "modulus_exceeds_one", "an element has modulus above 1");
    }
    return std::nullopt;
}

SynthesisOutcome finish_lift(const SpectrumMultiset &target, NonnegRealization realization, Route route,
                             double objective, int restarts) {
    Channel channel = lift_to_channel(realization.s);
    const auto achieved = eig_multiset(channel.superop());
    const auto top = achieved.largest(target.size());
    const auto match = multiset_match(top, target, std::numeric_limits<double>::infinity());
    if (match.max_cost > match_tolerance(target, kNonzeroMatch)) {
        throw NumericalError("synthesis: lifted channel's non-zero spectrum misses the target by " +
                             std::to_string(match.max_cost));
    }
    const int d = channel.dim();
    SynthesisOutcome out;
    out.status = SynthesisStatus::ok;
    out.reason = "ok";
    out.result = SynthesisResult{channel,
                                 d,
                                 route,
                                 target,
                                 achieved,
                                 d * d - static_cast<int>(target.size()),
                                 std::move(realization),
                                 objective,
                                 match.max_cost,
                                 restarts};
    return out;
}

std::optional<SynthesisOutcome> optimize_range(const SpectrumMultiset &spectrum, int start,
                                               const SynthesisOptions &options, bool strict, std::string &failure) {
    OptimizerOptions opt = options.optimizer;
    opt.strict_positive = strict;
    for (int n = start; n <= start + std::max(0, options.max_padding); ++n) {
        auto res = nniep_optimize(spectrum, n, opt);
        if (res.realization) {
            return finish_lift(spectrum, std::move(*res.realization), Route::optimizer, res.objective,
                               res.restarts_tried);
        }
        failure += "N=" + std::to_string(n) + ": " + res.failure + "; ";
    }
    return std::nullopt;
}

bool suleimanova_shaped(const SpectrumMultiset &s) {
    std::size_t positives = 0;
    double sum = 0.0;
    for (const auto &lambda : s) {
        if (std::abs(lambda.imag()) > 1e-9) {
            return false;
        }
        sum += lambda.real();
        if (lambda.real() > kZeroTolerance) {
            ++positives;
        }
    }
    return positives == 1 && sum >= -kZeroTolerance;
}

}  // namespace

std::string_view to_string(Route route) noexcept {
    switch (route) {
        case Route::qubit_blocks:
            return "qubit-blocks";
        case Route::companion:
            return "companion";
        case Route::optimizer:
            return "optimizer";
        case Route::circulant_direct:
            return "circulant-direct";
    }
    return "unknown";
}

std::string_view to_string(SynthesisStatus status) noexcept {
    switch (status) {
        case SynthesisStatus::ok:
            return "ok";
        case SynthesisStatus::infeasible:
            return "infeasible";
        case SynthesisStatus::not_synthesized:
            return "not_synthesized";
    }
    return "unknown";
}

SpectrumMultiset dedupe(const SpectrumMultiset &values, double tolerance) {
    std::vector<Complex> out;
    for (const auto &x : values) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const Complex &y) { return std::abs(x - y) <= tolerance; });
        if (!seen) {
            out.push_back(x);
        }
    }
    return SpectrumMultiset(std::move(out), values.tolerance());
}

bool same_spectral_set(const SpectrumMultiset &a, const SpectrumMultiset &b, double tolerance) {
    auto covered = [tolerance](const SpectrumMultiset &from, const SpectrumMultiset &to) {
        for (const auto &x : from) {
            if (std::abs(x) <= tolerance) {
                continue;
            }
            const bool hit = std::any_of(to.begin(), to.end(), [&](const Complex &y) { return std::abs(x - y) <= tolerance; });
            if (!hit) {
                return false;
            }
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

SynthesisOutcome synth_spectral_set(const SpectrumMultiset &input) {
    const auto set = dedupe(input);
    if (set.empty()) {
        throw PreconditionError("empty", "synth_spectral_set: empty set");
    }
    for (const auto &lambda : set) {
        if (std::abs(lambda) <= kZeroTolerance) {
            throw PreconditionError("contains_zero", "synth_spectral_set: the set must not contain 0");
        }
    }
    if (std::abs(set[index_closest_to_one(set)] - 1.0) > kUnitTolerance) {
        return negative(SynthesisStatus::infeasible, "no_unit_eigenvalue", "1 is not an element of the set");
    }
    if (!set.conjugation_closed()) {
        return negative(SynthesisStatus::infeasible, "not_conjugation_closed",
                        "set is not closed under complex conjugation");
    }
    if (set.spectral_radius() > 1.0 + kZeroTolerance) {
        return negative(SynthesisStatus::infeasible, "modulus_exceeds_one", "an element has modulus above 1");
    }

    // One representative per real element != 1 and per conjugate pair.
    std::vector<Complex> reps;
    for (const auto &lambda : set) {
        if (std::abs(lambda - 1.0) <= kUnitTolerance) {
            continue;
        }
        if (std::abs(lambda.imag()) <= kRealnessThreshold) {
            reps.emplace_back(lambda.real(), 0.0);
        } else if (lambda.imag() > 0.0) {
            reps.push_back(lambda);
        }
    }

    Channel channel = identity_channel(2);
    if (!reps.empty()) {
        const int d = 2 * static_cast<int>(reps.size());
        std::vector<ComplexMatrix> kraus;
        for (std::size_t b = 0; b < reps.size(); ++b) {
            const Complex lambda = reps[b];
            const Channel block = synth_qubit_channel(SpectrumMultiset{1.0, 1.0, lambda, std::conj(lambda)});
            for (const auto &k : block.kraus()) {
                ComplexMatrix embedded = ComplexMatrix::Zero(d, d);
                embedded.block(static_cast<Eigen::Index>(2 * b), static_cast<Eigen::Index>(2 * b), 2, 2) = k;
                kraus.push_back(std::move(embedded));
            }
        }
        channel = Channel::from_kraus(std::move(kraus));
    }

    const auto achieved = eig_multiset(channel.superop());
    if (!same_spectral_set(achieved, set)) {
        throw NumericalError("synth_spectral_set: achieved spectral set differs from the target");
    }
    int zeros = 0;
    for (const auto &lambda : achieved) {
        zeros += std::abs(lambda) <= tol::kSpectral ? 1 : 0;
    }
    SynthesisOutcome out;
    out.status = SynthesisStatus::ok;
    out.reason = "ok";
    out.result =
        SynthesisResult{channel, channel.dim(), Route::qubit_blocks, set, achieved, zeros, std::nullopt, 0.0, 0.0, 0};
    return out;
}

SynthesisOutcome synth_nonzero_spectrum(const SpectrumMultiset &spectrum, const SynthesisOptions &options) {
    if (auto rejected = screen(spectrum, "synth_nonzero_spectrum")) {
        return *rejected;
    }
    const auto moments = moment_report(spectrum, options.moment_horizon);
    if (!moments.mucond1_ok) {
        auto out = negative(SynthesisStatus::infeasible, "moment_negative",
                            "moment condition violated: " + moments.violation);
        out.moments = moments;
        return out;
    }
    if (!moments.mucond2_ok) {
        auto out = negative(SynthesisStatus::not_synthesized, "mucond2_violated",
                            "no nonnegative matrix has this non-zero spectrum (" + moments.violation +
                                "); a quantum realization is not excluded");
        out.moments = moments;
        return out;
    }

    const auto n = static_cast<int>(spectrum.size());
    if (suleimanova_shaped(spectrum)) {
        try {
            auto real = suleimanova_companion(spectrum);
            auto out = finish_lift(spectrum, std::move(real), Route::companion, 0.0, 0);
            out.moments = moments;
            return out;
        } catch (const PreconditionError &) {
            // fall through to the optimizer
        } catch (const NumericalError &) {
        }
    }

    int start = n;
    bool all_real = std::all_of(spectrum.begin(), spectrum.end(),
                                [](const Complex &x) { return std::abs(x.imag()) <= kRealnessThreshold; });
    if (!(all_real && n == 4 && moments.mu_at(1) >= -kZeroTolerance)) {
        const std::size_t one = index_closest_to_one(spectrum);
        bool nonpositive = true;
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
            nonpositive = nonpositive && (i == one || spectrum[i].real() <= kZeroTolerance);
        }
        const double mu1 = moments.mu_at(1);
        const double mu2 = moments.mu_at(2);
        if (nonpositive && mu1 >= 0.0 && mu2 > kZeroTolerance) {
            const double ratio = mu1 * mu1 / mu2;
            start = std::max(n, static_cast<int>(std::ceil(ratio - 1e-12)));
        }
    }

    std::string failure;
    if (auto out = optimize_range(spectrum, start, options, false, failure)) {
        out->moments = moments;
        return *out;
    }
    auto out = negative(SynthesisStatus::not_synthesized, "optimizer_exhausted",
                        "not synthesized (existence not refuted): " + failure);
    out.moments = moments;
    return out;
}

SynthesisOutcome synth_full_kraus_rank(const SpectrumMultiset &spectrum, const SynthesisOptions &options) {
    if (auto rejected = screen(spectrum, "synth_full_kraus_rank")) {
        return *rejected;
    }
    const std::size_t one = index_closest_to_one(spectrum);
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (i != one && std::abs(spectrum[i]) > 1.0 - kUnitTolerance) {
            return negative(SynthesisStatus::infeasible, "peripheral_not_unique",
                            "full Kraus rank needs |lambda| < 1 for every element other than 1");
        }
    }
    const auto moments = moment_report(spectrum, options.moment_horizon);
    for (int k = 1; k <= moments.horizon; ++k) {
        if (moments.mu_at(k) <= 1e-10) {
            auto out = negative(SynthesisStatus::infeasible, "moment_not_positive",
                                "mu_" + std::to_string(k) + " = " + std::to_string(moments.mu_at(k)) + " is not > 0");
            out.moments = moments;
            return out;
        }
    }

    const auto n = static_cast<int>(spectrum.size());
    const double floor = 1e-3 / n;
    // Circulant fast path: {1} together with one real value repeated.
    bool circulant = true;
    double r = 0.0;
    bool have_r = false;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (i == one) {
            continue;
        }
        if (std::abs(spectrum[i].imag()) > kRealnessThreshold ||
            (have_r && std::abs(spectrum[i].real() - r) > tol::kSpectral)) {
            circulant = false;
            break;
        }
        r = have_r ? r : spectrum[i].real();
        have_r = true;
    }
    if (circulant) {
        const double b = have_r ? (1.0 - r) / n : 0.0;
        const double a = have_r ? r + b : 1.0;
        if (n == 1 || (a >= floor && b >= floor)) {
            RealMatrix s = RealMatrix::Constant(n, n, b);
            s.diagonal().setConstant(a);
            NonnegRealization real;
            real.m = s;
            real.s = s;
            real.left_perron = RealVector::Ones(n);
            real.provenance = Provenance::direct;
            auto out = finish_lift(spectrum, std::move(real), Route::circulant_direct, 0.0, 0);
            out.moments = moments;
            return out;
        }
    }

    std::string failure;
    if (auto out = optimize_range(spectrum, n, options, true, failure)) {
        out->moments = moments;
        return *out;
    }
    auto out = negative(SynthesisStatus::not_synthesized, "optimizer_exhausted",
                        "not synthesized (existence not refuted): " + failure);
    out.moments = moments;
    return out;
}

}  // namespace chanspec
