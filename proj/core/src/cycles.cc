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

#include "chanspec/cycles.h"

#include <cmath>
#include <numbers>
#include <string>

#include "chanspec/errors.h"

namespace chanspec {

void CycleSpec::validate() const {
    if (cycles.empty()) {
        throw PreconditionError("bad_cycle_spec", "CycleSpec: no cycles");
    }
    for (const auto &c : cycles) {
        if (c.length < 1 || c.block_dim < 1) {
            throw PreconditionError("bad_cycle_spec", "CycleSpec: cycle length and block dimension must be >= 1");
        }
        if (c.phases.size() != static_cast<std::size_t>(c.block_dim)) {
            throw PreconditionError("bad_cycle_spec", "CycleSpec: expected " + std::to_string(c.block_dim) +
                                                          " phases, got " + std::to_string(c.phases.size()));
        }
        for (const auto &mu : c.phases) {
            if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag()) || std::abs(std::abs(mu) - 1.0) > 1e-12) {
                throw PreconditionError("bad_cycle_spec", "CycleSpec: phases must have modulus 1");
            }
        }
    }
}

int CycleSpec::dimension() const {
    int d = 0;
    for (const auto &c : cycles) {
        d += c.length * c.block_dim;
    }
    return d;
}

std::size_t CycleSpec::peripheral_count() const {
    std::size_t n = 0;
    for (const auto &c : cycles) {
        n += static_cast<std::size_t>(c.length) * static_cast<std::size_t>(c.block_dim) *
             static_cast<std::size_t>(c.block_dim);
    }
    return n;
}

SpectrumMultiset predicted_peripheral_spectrum(const CycleSpec &spec) {
    spec.validate();
    std::vector<Complex> out;
    for (const auto &c : spec.cycles) {
        for (int m = 0; m < c.length; ++m) {
            const Complex root = std::polar(1.0, 2.0 * std::numbers::pi * m / c.length);
            for (const auto &mk : c.phases) {
                for (const auto &ml : c.phases) {
                    out.push_back(mk * std::conj(ml) * root);
                }
            }
        }
    }
    return SpectrumMultiset(std::move(out));
}

Channel synth_cycles(const CycleSpec &spec) {
    spec.validate();
    const int d = spec.dimension();
    std::vector<ComplexMatrix> kraus;
    int offset = 0;
    for (const auto &c : spec.cycles) {
        for (int k = 0; k < c.length; ++k) {
            const int from = offset + k * c.block_dim;
            const int to = offset + ((k + 1) % c.length) * c.block_dim;
            ComplexMatrix a = ComplexMatrix::Zero(d, d);
            for (int i = 0; i < c.block_dim; ++i) {
                a(to + i, from + i) = c.phases[static_cast<std::size_t>(i)];
            }
            kraus.push_back(std::move(a));
        }
        offset += c.length * c.block_dim;
    }
    return Channel::from_kraus(std::move(kraus));
}

PeripheralSpectrum peripheral_spectrum(const Channel &c, double tolerance) {
    PeripheralSpectrum out;
    std::vector<Complex> phases;
    for (const auto &lambda : eig_multiset(c.superop())) {
        const double r = std::abs(lambda);
        if (r >= 1.0 - tolerance) {
            phases.push_back(lambda / r);
            out.moduli.push_back(r);
        }
    }
    out.phases = SpectrumMultiset(std::move(phases));
    return out;
}

Channel jll_counterexample_channel(int d) {
    if (d < 2) {
        throw PreconditionError("bad_dimension", "jll_counterexample_channel: d must be >= 2");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> kraus;
    for (int j = 0; j < d; ++j) {
        ComplexMatrix k = ComplexMatrix::Zero(d, d);
        k(j, (j + 1) % d) = inv_sqrt2;
        kraus.push_back(std::move(k));
    }
    ComplexMatrix phase = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        phase(k, k) = std::polar(inv_sqrt2, std::numbers::pi * k / d);
    }
    kraus.push_back(std::move(phase));
    return Channel::from_kraus(std::move(kraus));
}

}  // namespace chanspec
