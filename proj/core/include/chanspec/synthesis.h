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

// Channels with a prescribed spectral set, non-zero spectrum, or non-zero
// spectrum together with full Kraus rank.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "chanspec/channel.h"
#include "chanspec/nonneg.h"

namespace chanspec {

enum class Route { qubit_blocks, companion, optimizer, circulant_direct };
std::string_view to_string(Route route) noexcept;

struct SynthesisResult {
    Channel channel;
    int dimension = 0;
    Route route = Route::qubit_blocks;
    SpectrumMultiset target;
    SpectrumMultiset achieved;  ///< eig_multiset of the superoperator
    int kernel_added = 0;       ///< zero eigenvalues in `achieved`
    std::optional<NonnegRealization> realization;
    double objective = 0.0;     ///< optimizer objective, 0 for direct routes
    double match_error = 0.0;   ///< distance between target and achieved (per route contract)
    int restarts_used = 0;
};

enum class SynthesisStatus {
    ok,
    infeasible,       ///< a necessary condition fails; no channel exists
    not_synthesized,  ///< the construction failed; existence is not refuted
};
std::string_view to_string(SynthesisStatus status) noexcept;

struct SynthesisOutcome {
    SynthesisStatus status = SynthesisStatus::not_synthesized;
    std::string reason;   ///< machine-readable code
    std::string message;  ///< human-readable detail
    std::optional<SynthesisResult> result;
    std::optional<MomentReport> moments;

    bool ok() const noexcept {
        return status == SynthesisStatus::ok;
    }
};

struct SynthesisOptions {
    OptimizerOptions optimizer;
    /// Extra padding tried beyond the starting size.
    int max_padding = 4;
    int moment_horizon = kDefaultMomentHorizon;
};

/// Elements within `tolerance` merged, in first-occurrence order.
SpectrumMultiset dedupe(const SpectrumMultiset &values, double tolerance = tol::kSpectral);

/// True iff the two sets (after dedupe and dropping |x| <= tolerance)
/// coincide within tolerance.
bool same_spectral_set(const SpectrumMultiset &a, const SpectrumMultiset &b, double tolerance = tol::kSpectral);

/// Direct sum of unital qubit blocks, one per real element != 1 and one per
/// conjugate pair, with block spectrum {1, 1, lambda, conj(lambda)}.
SynthesisOutcome synth_spectral_set(const SpectrumMultiset &set);

/// Entanglement-breaking channel whose non-zero spectrum is `spectrum`,
/// via a companion matrix or the nonnegative least-squares search.
SynthesisOutcome synth_nonzero_spectrum(const SpectrumMultiset &spectrum, const SynthesisOptions &options = {});

/// As synth_nonzero_spectrum with an entrywise-positive stochastic matrix,
/// giving a positive definite Choi matrix.
SynthesisOutcome synth_full_kraus_rank(const SpectrumMultiset &spectrum, const SynthesisOptions &options = {});

}  // namespace chanspec
