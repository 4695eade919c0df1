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

// Peripheral spectrum: channels built from cycles of blocks with phases,
// extraction of the unimodular part of a spectrum, and a primitive channel
// whose second moment vanishes.

#pragma once

#include <vector>

#include "chanspec/channel.h"
#include "chanspec/linalg.h"

namespace chanspec {

struct Cycle {
    int length = 1;              ///< n_c
    int block_dim = 1;           ///< d_c
    std::vector<Complex> phases; ///< d_c unimodular numbers
};

struct CycleSpec {
    std::vector<Cycle> cycles;

    /// Throws PreconditionError("bad_cycle_spec") on non-positive sizes,
    /// a phase count different from d_c, or |mu| != 1 beyond 1e-12.
    void validate() const;
    /// sum_c n_c d_c
    int dimension() const;
    /// sum_c n_c d_c^2
    std::size_t peripheral_count() const;
};

/// {mu_k conj(mu_l) exp(2 pi i m / n_c)} over all c, k, l and m in Z_{n_c}.
SpectrumMultiset predicted_peripheral_spectrum(const CycleSpec &spec);

/// Kraus operators A_{c,k} = (embed into block (c, k+1 mod n_c)) W_c
/// (project onto block (c, k)), W_c = diag(mu^(c)). CPTP and unital.
Channel synth_cycles(const CycleSpec &spec);

struct PeripheralSpectrum {
    SpectrumMultiset phases;      ///< lambda / |lambda|
    std::vector<double> moduli;   ///< |lambda| before projection
};

/// Eigenvalues with |lambda| >= 1 - tolerance.
PeripheralSpectrum peripheral_spectrum(const Channel &c, double tolerance = tol::kSpectral);

/// K_j = |j><j+1 mod d| / sqrt 2 for j < d and K_d = sum_k exp(i pi k / d)
/// |k><k| / sqrt 2. Throws PreconditionError for d < 2.
Channel jll_counterexample_channel(int d);

}  // namespace chanspec
