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

#include "chanspec/timeseries.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chanspec/errors.h"

namespace chanspec {

namespace {

constexpr double kRealSeries = 1e-10;

// Replace each non-real pole and its nearest conjugate partner by an exact
// conjugate pair; unmatched poles are kept as they are.
SpectrumMultiset symmetrize(const std::vector<Complex> &poles) {
    std::vector<Complex> out = poles;
    std::vector<bool> used(out.size(), false);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (used[i]) {
            continue;
        }
        used[i] = true;
        if (std::abs(out[i].imag()) <= kRealSeries) {
            out[i] = Complex(out[i].real(), 0.0);
            continue;
        }
        std::size_t partner = out.size();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (!used[j] && std::abs(out[j] - std::conj(out[i])) < best) {
                best = std::abs(out[j] - std::conj(out[i]));
                partner = j;
            }
        }
        if (partner < out.size() && best <= 1e-6 * std::max(1.0, std::abs(out[i]))) {
            used[partner] = true;
            const Complex avg = (out[i] + std::conj(out[partner])) / 2.0;
            out[i] = avg;
            out[partner] = std::conj(avg);
        }
    }
    return SpectrumMultiset(std::move(out));
}

}  // namespace

bool Series::is_real(double tolerance) const {
    return std::all_of(values.begin(), values.end(), [&](const Complex &v) { return std::abs(v.imag()) <= tolerance; });
}

Series generate_series(const ComplexMatrix &transfer, const ComplexVector &a, const ComplexVector &rho, int steps) {
    if (transfer.rows() != transfer.cols() || a.size() != transfer.rows() || rho.size() != transfer.rows()) {
        throw PreconditionError("dimension_mismatch", "generate_series: inconsistent dimensions");
    }
    if (steps < 1) {
        throw PreconditionError("bad_length", "generate_series: steps must be >= 1");
    }
    Series s;
    s.values.reserve(static_cast<std::size_t>(steps));
    ComplexVector state = rho;
    for (int t = 0; t < steps; ++t) {
        s.values.push_back(a.dot(state));  // conjugate-linear in a
        state = transfer * state;
    }
    return s;
}

Series generate_series(const Channel &c, const ComplexMatrix &a, const ComplexMatrix &rho, int steps) {
    const int d = c.dim();
    if (a.rows() != d || a.cols() != d || rho.rows() != d || rho.cols() != d) {
        throw PreconditionError("dimension_mismatch", "generate_series: A and rho must be d x d");
    }
    return generate_series(c.superop(), vec(a), vec(rho), steps);
}

LinearSystem damped_rotation_system(double x, double y) {
    LinearSystem sys;
    sys.transfer = ComplexMatrix::Zero(4, 4);
    sys.transfer(0, 0) = 1.0;
    sys.transfer(1, 1) = y;
    sys.transfer(2, 2) = x;
    sys.transfer(2, 3) = x;
    sys.transfer(3, 2) = -x;
    sys.transfer(3, 3) = x;
    const double h = 1.0 / std::sqrt(2.0);
    sys.state = ComplexVector(4);
    sys.state << 1.0, h, h, 0.0;
    sys.observable = ComplexVector(4);
    sys.observable << 0.0, 1.0, 0.0, 1.0;
    return sys;
}

double damped_rotation_closed_form(double x, double y, int t) {
    const Complex z = std::pow(Complex(1.0, -1.0) * x, t);
    return (z.imag() + std::pow(y, t)) / std::sqrt(2.0);
}

RecurrenceModel fit_recurrence(const Series &s, double tolerance, int max_order) {
    const auto n = static_cast<int>(s.size());
    double peak = 0.0;
    for (const auto &v : s.values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw PreconditionError("not_finite", "fit_recurrence: series has non-finite values");
        }
        peak = std::max(peak, std::abs(v));
    }
    RecurrenceModel model;
    if (n >= 1 && peak == 0.0) {
        return model;
    }
    if (n < 3) {
        throw PreconditionError("too_short", "fit_recurrence: need at least 3 values");
    }
    const bool real = s.is_real(kRealSeries);
    std::vector<Complex> a = s.values;
    if (real) {
        for (auto &v : a) {
            v = Complex(v.real(), 0.0);
        }
    }
    const int r_max = std::min(max_order, (n - 1) / 2);
    for (int r = 1; r <= r_max; ++r) {
        const int rows = n - r;
        ComplexMatrix h(rows, r);
        ComplexVector rhs(rows);
        for (int l = 0; l < rows; ++l) {
            for (int k = 0; k < r; ++k) {
                h(l, k) = a[static_cast<std::size_t>(l + k)];
            }
            rhs(l) = a[static_cast<std::size_t>(l + r)];
        }
        const auto ls = least_squares(h, rhs);
        const double scale = rhs.norm();
        const double rel = scale > 0.0 ? ls.residual_norm / scale : ls.residual_norm;
        if (rel > tolerance) {
            continue;
        }
        model.order = r;
        model.residual = rel;
        model.coefficients.resize(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k) {
            model.coefficients[static_cast<std::size_t>(k)] = real ? Complex(ls.x(k).real(), 0.0) : ls.x(k);
        }
        // p(x) = x^r - sum c_k x^k
        std::vector<Complex> lower(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k) {
            lower[static_cast<std::size_t>(k)] = -model.coefficients[static_cast<std::size_t>(k)];
        }
        std::vector<Complex> poles;
        if (real) {
            std::vector<double> lower_re(lower.size());
            for (std::size_t k = 0; k < lower.size(); ++k) {
                lower_re[k] = lower[k].real();
            }
            const auto eig = eig_multiset(companion_matrix(std::span<const double>(lower_re)));
            poles = eig.values();
            model.poles = symmetrize(poles);
        } else {
            poles = eig_multiset(companion_matrix(std::span<const Complex>(lower))).values();
            model.poles = SpectrumMultiset(std::move(poles));
        }
        return model;
    }
    throw PreconditionError("no_recurrence", "fit_recurrence: no finite recurrence of order <= " +
                                                 std::to_string(r_max) + " at tolerance");
}

double annihilation_residual(const Series &s, std::span<const Complex> poly) {
    const auto n = s.values.size();
    const auto degree = poly.size();
    if (degree == 0 || n < degree) {
        throw PreconditionError("too_short", "annihilation_residual: series shorter than the polynomial");
    }
    double peak = 0.0;
    for (const auto &v : s.values) {
        peak = std::max(peak, std::abs(v));
    }
    double weight = 0.0;
    for (const auto &p : poly) {
        weight += std::abs(p);
    }
    if (peak == 0.0) {
        return 0.0;
    }
    double worst = 0.0;
    for (std::size_t l = 0; l + degree <= n; ++l) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < degree; ++k) {
            acc += poly[k] * s.values[l + k];
        }
        worst = std::max(worst, std::abs(acc));
    }
    return worst / (peak * weight);
}

SeriesVerdict qubit_series_verdict(const Series &s, double tolerance, int max_order) {
    SeriesVerdict verdict;
    verdict.model = fit_recurrence(s, tolerance, max_order);
    std::vector<Complex> candidate = verdict.model.poles.values();
    const bool has_one = std::any_of(candidate.begin(), candidate.end(),
                                     [](const Complex &z) { return std::abs(z - 1.0) <= tol::kSpectral; });
    if (!has_one) {
        candidate.emplace_back(1.0, 0.0);
    }
    if (candidate.size() > 4) {
        verdict.candidate = SpectrumMultiset(std::move(candidate));
        verdict.reason = "too_many_poles";
        verdict.note = "more than four poles: no qubit channel generates this sequence";
        return verdict;
    }
    while (candidate.size() < 4) {
        candidate.emplace_back(0.0, 0.0);
    }
    verdict.candidate = SpectrumMultiset(std::move(candidate));
    verdict.qubit = check_qubit_cp_spectrum(verdict.candidate);
    verdict.realizable = verdict.qubit->realizable;
    verdict.reason = verdict.qubit->reason;
    if (verdict.realizable) {
        verdict.witness = synth_qubit_channel(verdict.candidate);
        verdict.note = "witness channel reproduces the observed poles";
    } else {
        verdict.note =
            "no qubit channel has the observed poles (completed by 1 and zeros) as its spectrum; "
            "eigenvalues that do not appear as poles are not constrained by the sequence";
    }
    return verdict;
}

}  // namespace chanspec
