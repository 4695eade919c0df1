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

// Nonnegative matrices with prescribed spectrum: moment screening, the
// companion construction for one-positive-eigenvalue spectra, a multi-start
// least-squares search, Perron similarity to a column-stochastic matrix and
// the lift of a stochastic matrix to an entanglement-breaking channel.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chanspec/channel.h"
#include "chanspec/linalg.h"

namespace chanspec {

inline constexpr int kDefaultMomentHorizon = 64;

/// Finite-horizon screening of the moment conditions. Passing is a
/// necessary-condition check only: the conditions quantify over all k.
struct MomentReport {
    int horizon = 0;
    std::vector<double> mu;  ///< mu[k - 1] = mu_k
    /// mu_k >= -1e-10 for all k <= horizon.
    bool mucond1_ok = true;
    /// mu_m > 1e-10 implies mu_{km} > 1e-10, for all k*m <= horizon.
    bool mucond2_ok = true;
    /// (d, ok): mu_k^m <= d^(m-1) mu_{km} for all k*m <= horizon, m >= 2.
    std::vector<std::pair<int, bool>> jll_ok;
    /// Smallest k with mu_k < -1e-10.
    std::optional<int> first_violation;
    /// Human-readable description of the first failed condition, empty if none.
    std::string violation;

    double mu_at(int k) const {
        return mu.at(static_cast<std::size_t>(k - 1));
    }
};

MomentReport moment_report(const SpectrumMultiset &spectrum, int horizon = kDefaultMomentHorizon,
                           const std::vector<int> &jll_dims = {});

enum class Provenance { companion, optimizer, direct };
std::string_view to_string(Provenance p) noexcept;

struct NonnegRealization {
    RealMatrix m;            ///< entrywise nonnegative
    RealMatrix s;            ///< X m X^-1, column-stochastic
    RealVector left_perron;  ///< L with L m = L, L(0) = 1
    Provenance provenance = Provenance::direct;
};

/// Left Perron vector by lazy power iteration on (1 + m^T) / 2 (cap 1e5
/// iterations, Cauchy tolerance 1e-12), then S = diag(L) m diag(L)^-1.
/// Throws PreconditionError("negative_entry" / "not_unit_radius") on bad
/// input and ("reducible") when the Perron vector is not strictly
/// positive or the iteration stalls.
NonnegRealization to_stochastic(const RealMatrix &m, Provenance provenance = Provenance::direct);

/// Frobenius companion of prod (x - lambda_i) for spectra with a single
/// positive element 1 and all others real and <= 0. Zero elements are
/// supplied by transient states appended to the companion of the nonzero
/// part. Throws PreconditionError("not_suleimanova") when the shape is
/// wrong, ("infeasible") when the sum is negative.
NonnegRealization suleimanova_companion(const SpectrumMultiset &spectrum);

struct OptimizerOptions {
    int restarts = 50;
    std::uint64_t seed = 0;
    bool strict_positive = false;
    /// Entry floor in strict mode; <= 0 selects 1e-3 / N.
    double floor = 0.0;
    int max_iterations = 400;
    /// Worker threads for independent restarts; the lowest successful
    /// restart index is returned regardless of this value.
    int jobs = 1;
};

struct OptimizerResult {
    std::optional<NonnegRealization> realization;
    double objective = 0.0;   ///< sum_k (c_k(S) - c_k(target))^2 of the returned / best iterate
    double match_error = 0.0; ///< max eigenvalue distance on the nonzero part
    int restart = -1;         ///< index of the successful restart
    int restarts_tried = 0;
    std::string failure;      ///< empty on success
};

/// Column-stochastic S of size n whose characteristic polynomial is that
/// of target (+) {0}^(n - |target|). Parameterised as S_ij = q_ij^2 /
/// sum_k q_kj^2 (plus a floor in strict mode), fitted by Levenberg-Marquardt
/// on the coefficient residual with a central-difference Jacobian. Success
/// requires objective < 1e-10 and the nonzero part of the target matched by
/// the largest eigenvalues of S within 1e-7. Failure says nothing about
/// existence.
OptimizerResult nniep_optimize(const SpectrumMultiset &target, int n, const OptimizerOptions &options = {});

/// T(rho) = sum_ij S_ij <j|rho|j> |i><i|, held natively as its (diagonal)
/// Choi matrix. Entries in [-1e-12, 0) are clamped to 0.
Channel lift_to_channel(const RealMatrix &s);

}  // namespace chanspec
