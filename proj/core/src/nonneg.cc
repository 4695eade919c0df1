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

#include "chanspec/nonneg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "chanspec/errors.h"

namespace chanspec {

namespace {

constexpr double kMomentTolerance = 1e-10;
constexpr double kEntryTolerance = 1e-12;
constexpr int kPerronCap = 100000;
constexpr double kPerronTolerance = 1e-12;
constexpr double kObjectiveSuccess = 1e-10;
constexpr double kObjectiveFloor = 1e-30;
constexpr double kOptimizerMatch = 1e-7;

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

void require_square_real(const RealMatrix &m, std::string_view what) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw PreconditionError("not_square", std::string(what) + ": matrix must be square and non-empty");
    }
    require_finite(m, what);
}

// Largest number of elements of `values` lying within `tol` of one another.
std::size_t max_cluster(const std::vector<Complex> &values, double tol) {
    std::size_t best = values.empty() ? 0 : 1;
    for (const auto &a : values) {
        std::size_t count = 0;
        for (const auto &b : values) {
            if (std::abs(a - b) <= tol) {
                ++count;
            }
        }
        best = std::max(best, count);
    }
    return best;
}

// Eigenvalue accuracy attainable for a root of multiplicity m in a
// non-derogatory matrix is about eps^(1/m).
double multiplicity_tolerance(const SpectrumMultiset &target, double base) {
    const auto m = max_cluster(target.values(), 1e-6);
    if (m <= 1) {
        return base;
    }
    return std::max(base, 10.0 * std::pow(std::numeric_limits<double>::epsilon(), 1.0 / static_cast<double>(m)));
}

RealMatrix build_stochastic(const RealVector &q, int n, double floor) {
    RealMatrix s(n, n);
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = q(j * n + i);
            s(i, j) = x * x;
            col += x * x;
        }
        if (col <= 0.0) {
            s.col(j).setConstant(1.0 / n);
        } else {
            s.col(j) /= col;
        }
    }
    if (floor > 0.0) {
        s = (1.0 - n * floor) * s + RealMatrix::Constant(n, n, floor);
    }
    return s;
}

RealVector coefficient_residual(const RealVector &q, int n, double floor, const std::vector<double> &target) {
    const auto c = charpoly_coefficients(build_stochastic(q, n, floor));
    RealVector r(n);
    for (int k = 0; k < n; ++k) {
        r(k) = c[static_cast<std::size_t>(k)] - target[static_cast<std::size_t>(k)];
    }
    return r;
}

struct RestartResult {
    RealMatrix s;
    double objective = std::numeric_limits<double>::infinity();
    double match_error = std::numeric_limits<double>::infinity();
    bool success = false;
};

RestartResult run_restart(const SpectrumMultiset &nonzero_target, const std::vector<double> &target, int n,
                          double floor, const OptimizerOptions &options, int restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(restart),
                      static_cast<std::uint32_t>(options.strict_positive ? 1 : 0)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    const int p = n * n;
    RealVector q(p);
    for (int i = 0; i < p; ++i) {
        q(i) = normal(rng);
    }

    RealVector r = coefficient_residual(q, n, floor, target);
    double obj = r.squaredNorm();
    double lambda = 1e-3;
    RealMatrix jac(n, p);
    for (int it = 0; it < options.max_iterations && obj > kObjectiveFloor; ++it) {
        for (int i = 0; i < p; ++i) {
            const double h = 1e-6 * std::max(1.0, std::abs(q(i)));
            RealVector qp = q;
            RealVector qm = q;
            qp(i) += h;
            qm(i) -= h;
            jac.col(i) = (coefficient_residual(qp, n, floor, target) - coefficient_residual(qm, n, floor, target)) /
                         (2.0 * h);
        }
        const RealMatrix jjt = jac * jac.transpose();
        bool improved = false;
        while (lambda < 1e16) {
            const RealMatrix a = jjt + lambda * RealMatrix::Identity(n, n);
            const RealVector step = -jac.transpose() * a.ldlt().solve(r);
            const RealVector q_new = q + step;
            const RealVector r_new = coefficient_residual(q_new, n, floor, target);
            const double obj_new = r_new.squaredNorm();
            if (std::isfinite(obj_new) && obj_new < obj) {
                q = q_new;
                r = r_new;
                obj = obj_new;
                lambda = std::max(lambda / 3.0, 1e-15);
                improved = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!improved) {
            break;
        }
    }

    RestartResult out;
    out.s = build_stochastic(q, n, floor);
    out.objective = obj;
    if (obj < kObjectiveSuccess) {
        const auto top = eig_multiset(out.s).largest(nonzero_target.size());
        const auto match = multiset_match(top, nonzero_target, std::numeric_limits<double>::infinity());
        out.match_error = match.max_cost;
        out.success = match.max_cost <= kOptimizerMatch;
    }
    return out;
}

}  // namespace

MomentReport moment_report(const SpectrumMultiset &spectrum, int horizon, const std::vector<int> &jll_dims) {
    if (horizon < 1) {
        throw PreconditionError("bad_horizon", "moment_report: horizon must be >= 1");
    }
    MomentReport rep;
    rep.horizon = horizon;
    rep.mu.resize(static_cast<std::size_t>(horizon));
    for (int k = 1; k <= horizon; ++k) {
        rep.mu[static_cast<std::size_t>(k - 1)] = spectrum.power_sum(k).real();
    }
    for (int k = 1; k <= horizon; ++k) {
        if (rep.mu_at(k) < -kMomentTolerance) {
            rep.mucond1_ok = false;
            rep.first_violation = k;
            rep.violation = "mu_" + std::to_string(k) + " = " + format_double(rep.mu_at(k)) + " < 0";
            break;
        }
    }
    for (int m = 1; m <= horizon && rep.mucond2_ok; ++m) {
        if (rep.mu_at(m) <= kMomentTolerance) {
            continue;
        }
        for (int k = 2; k * m <= horizon; ++k) {
            if (rep.mu_at(k * m) <= kMomentTolerance) {
                rep.mucond2_ok = false;
                if (rep.violation.empty()) {
                    rep.violation = "mu_" + std::to_string(m) + " > 0 but mu_" + std::to_string(k * m) + " = " +
                                    format_double(rep.mu_at(k * m));
                }
                break;
            }
        }
    }
    for (int d : jll_dims) {
        bool ok = true;
        for (int k = 1; k <= horizon && ok; ++k) {
            for (int m = 2; k * m <= horizon; ++m) {
                const double lhs = std::pow(rep.mu_at(k), m);
                const double rhs = std::pow(static_cast<double>(d), m - 1) * rep.mu_at(k * m);
                if (lhs > rhs + 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)})) {
                    ok = false;
                    break;
                }
            }
        }
        rep.jll_ok.emplace_back(d, ok);
    }
    return rep;
}

std::string_view to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::companion:
            return "companion";
        case Provenance::optimizer:
            return "optimizer";
        case Provenance::direct:
            return "direct";
    }
    return "unknown";
}

NonnegRealization to_stochastic(const RealMatrix &m_in, Provenance provenance) {
    require_square_real(m_in, "to_stochastic");
    if (m_in.minCoeff() < -kEntryTolerance) {
        throw PreconditionError("negative_entry", "to_stochastic: matrix has a negative entry");
    }
    const RealMatrix m = m_in.cwiseMax(0.0);
    const Eigen::Index n = m.rows();
    const double radius = eig_multiset(m).spectral_radius();
    if (std::abs(radius - 1.0) > tol::kSpectral) {
        throw PreconditionError("not_unit_radius",
                                "to_stochastic: spectral radius " + format_double(radius) + " is not 1; rescale first");
    }

    // Row vector iteration v <- v (1 + m) / 2; the lazy step removes every
    // other peripheral eigenvalue from the dominant set.
    RealVector v = RealVector::Constant(n, 1.0 / static_cast<double>(n));
    bool converged = false;
    for (int it = 0; it < kPerronCap; ++it) {
        RealVector next = 0.5 * (v + m.transpose() * v);
        next /= next.sum();
        const double step = (next - v).cwiseAbs().maxCoeff();
        v = next;
        if (step <= kPerronTolerance * v.cwiseAbs().maxCoeff()) {
            converged = true;
            break;
        }
    }
    if (!converged || v.minCoeff() <= 1e-10 * v.maxCoeff()) {
        throw PreconditionError("reducible",
                                "to_stochastic: left Perron vector is not strictly positive (reducible matrix); "
                                "apply an epsilon-perturbation");
    }

    NonnegRealization out;
    out.m = m;
    out.left_perron = v / v(0);
    out.provenance = provenance;
    out.s.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out.s(i, j) = out.left_perron(i) * m(i, j) / out.left_perron(j);
        }
    }
    const RealVector col_sums = out.s.colwise().sum().transpose();
    if ((col_sums.array() - 1.0).abs().maxCoeff() > 1e-10) {
        throw NumericalError("to_stochastic: similarity transform is not stochastic within 1e-10");
    }
    return out;
}

NonnegRealization suleimanova_companion(const SpectrumMultiset &spectrum) {
    if (spectrum.empty()) {
        throw PreconditionError("not_suleimanova", "suleimanova_companion: empty spectrum");
    }
    std::vector<double> nonzero;
    std::size_t zeros = 0;
    std::size_t positives = 0;
    double sum = 0.0;
    for (const auto &lambda : spectrum) {
        if (std::abs(lambda.imag()) > 1e-9) {
            throw PreconditionError("not_suleimanova", "suleimanova_companion: spectrum is not real");
        }
        const double x = lambda.real();
        sum += x;
        if (x > kEntryTolerance) {
            ++positives;
            if (std::abs(x - 1.0) > tol::kSpectral) {
                throw PreconditionError("not_suleimanova", "suleimanova_companion: the positive element must be 1");
            }
            nonzero.push_back(1.0);
        } else if (x < -kEntryTolerance) {
            nonzero.push_back(x);
        } else {
            ++zeros;
        }
    }
    if (positives != 1) {
        throw PreconditionError("not_suleimanova", "suleimanova_companion: need exactly one positive element");
    }
    if (sum < -kEntryTolerance) {
        throw PreconditionError("infeasible",
                                "suleimanova_companion: sum " + format_double(sum) + " < 0 (mu_1 negative)");
    }

    std::vector<Complex> roots(nonzero.begin(), nonzero.end());
    const auto coeffs = poly_from_roots(roots);
    std::vector<double> lower(nonzero.size());
    for (std::size_t k = 0; k < nonzero.size(); ++k) {
        lower[k] = coeffs[k].real();
    }
    const RealMatrix c = companion_matrix(lower);
    if (c.minCoeff() < -kEntryTolerance) {
        throw PreconditionError("companion_negative", "suleimanova_companion: companion matrix has a negative entry");
    }

    const auto np = static_cast<Eigen::Index>(nonzero.size());
    const auto nz = static_cast<Eigen::Index>(zeros);
    RealMatrix m = RealMatrix::Zero(np + nz, np + nz);
    m.topLeftCorner(np, np) = c.cwiseMax(0.0);
    // Transient states: each feeds the recurrent class like state 0 does
    // and is never entered, adding exact zeros to the spectrum.
    for (Eigen::Index j = 0; j < nz; ++j) {
        m.block(0, np + j, np, 1) = m.block(0, 0, np, 1);
    }

    auto out = to_stochastic(m, Provenance::companion);
    const double tol = multiplicity_tolerance(spectrum, tol::kSpectral);
    if (!multiset_match(eig_multiset(out.m), spectrum, tol).matched) {
        throw NumericalError("suleimanova_companion: companion spectrum does not match the target");
    }
    return out;
}

OptimizerResult nniep_optimize(const SpectrumMultiset &target, int n, const OptimizerOptions &options) {
    OptimizerResult result;
    if (n < 1 || static_cast<std::size_t>(n) < target.size()) {
        throw PreconditionError("bad_dimension", "nniep_optimize: n must be at least the target size");
    }
    if (target.spectral_radius() > 1.0 + 1e-9) {
        result.failure = "target spectral radius exceeds 1";
        return result;
    }
    bool has_one = false;
    for (const auto &lambda : target) {
        has_one = has_one || std::abs(lambda - 1.0) <= tol::kSpectral;
    }
    if (!has_one) {
        result.failure = "target does not contain 1";
        return result;
    }
    if (!target.conjugation_closed()) {
        result.failure = "target is not closed under conjugation";
        return result;
    }

    const auto padded = target.with_zeros(static_cast<std::size_t>(n) - target.size());
    const auto coeffs = poly_from_roots(padded.values());
    std::vector<double> goal(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        goal[k] = coeffs[k].real();
    }
    const auto nonzero_target = target.nonzero_part();
    const double floor = options.strict_positive ? (options.floor > 0.0 ? options.floor : 1e-3 / n) : 0.0;
    if (floor * n >= 1.0) {
        throw PreconditionError("bad_floor", "nniep_optimize: floor * n must be below 1");
    }

    const int restarts = std::max(options.restarts, 0);
    const int jobs = std::max(1, options.jobs);
    std::vector<RestartResult> runs(static_cast<std::size_t>(restarts));
    double best_objective = std::numeric_limits<double>::infinity();
    for (int begin = 0; begin < restarts; begin += jobs) {
        const int end = std::min(restarts, begin + jobs);
        if (jobs == 1) {
            runs[static_cast<std::size_t>(begin)] = run_restart(nonzero_target, goal, n, floor, options, begin);
        } else {
            std::vector<std::thread> workers;
            for (int r = begin; r < end; ++r) {
                workers.emplace_back([&, r] {
                    runs[static_cast<std::size_t>(r)] = run_restart(nonzero_target, goal, n, floor, options, r);
                });
            }
            for (auto &w : workers) {
                w.join();
            }
        }
        for (int r = begin; r < end; ++r) {
            const auto &run = runs[static_cast<std::size_t>(r)];
            best_objective = std::min(best_objective, run.objective);
            if (run.success) {
                result.restart = r;
                result.restarts_tried = r + 1;
                result.objective = run.objective;
                result.match_error = run.match_error;
                NonnegRealization real;
                real.m = run.s;
                real.s = run.s;
                real.left_perron = RealVector::Ones(n);
                real.provenance = Provenance::optimizer;
                result.realization = std::move(real);
                return result;
            }
        }
    }
    result.restarts_tried = restarts;
    result.objective = best_objective;
    result.failure = "no restart reached the target (best objective " + format_double(best_objective) + ")";
    return result;
}

Channel lift_to_channel(const RealMatrix &s_in) {
    require_square_real(s_in, "lift_to_channel");
    if (s_in.minCoeff() < -kEntryTolerance) {
        throw PreconditionError("negative_entry", "lift_to_channel: stochastic matrix has a negative entry");
    }
    const RealMatrix s = s_in.cwiseMax(0.0);
    const RealVector col_sums = s.colwise().sum().transpose();
    if ((col_sums.array() - 1.0).abs().maxCoeff() > 1e-9) {
        throw PreconditionError("not_stochastic", "lift_to_channel: columns do not sum to 1");
    }
    const auto n = s.rows();
    ComplexMatrix choi = ComplexMatrix::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            choi(i * n + j, i * n + j) = s(i, j);
        }
    }
    return Channel::from_choi(std::move(choi));
}

}  // namespace chanspec
