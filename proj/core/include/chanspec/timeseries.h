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

// Sequences a_t = <A| T^t |rho>: generation, minimal linear recurrences,
// their poles, and whether a qubit channel could have produced them.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chanspec/channel.h"
#include "chanspec/linalg.h"
#include "chanspec/qubit.h"

namespace chanspec {

struct Series {
    std::vector<Complex> values;
    std::string description;

    std::size_t size() const noexcept {
        return values.size();
    }
    /// All imaginary parts below `tolerance` (default 1e-10).
    bool is_real(double tolerance = 1e-10) const;
};

/// a_t = tr(A^dag T^t(rho)), t = 0..steps-1, by repeated application.
Series generate_series(const Channel &c, const ComplexMatrix &a, const ComplexMatrix &rho, int steps);
/// a_t = a^dag T^t rho for an arbitrary square matrix and vectors.
Series generate_series(const ComplexMatrix &transfer, const ComplexVector &a, const ComplexVector &rho, int steps);

/// Transfer matrix, observable and state of the damped-rotation example:
/// T = diag(1, y) (+) x [[1, 1], [-1, 1]], rho = (1, 1/sqrt2, 1/sqrt2, 0),
/// A = (0, 1, 0, 1), giving a_t = (Im[(1 - i)^t x^t] + y^t) / sqrt 2.
struct LinearSystem {
    ComplexMatrix transfer;
    ComplexVector observable;
    ComplexVector state;
};
LinearSystem damped_rotation_system(double x, double y);
double damped_rotation_closed_form(double x, double y, int t);

inline constexpr int kDefaultMaxOrder = 12;

struct RecurrenceModel {
    int order = 0;
    /// a_{l+r} = sum_k coefficients[k] a_{l+k}
    std::vector<Complex> coefficients;
    double residual = 0.0;  ///< relative least-squares residual of the Hankel system
    SpectrumMultiset poles;
};

/// Smallest order r <= max_order whose Hankel least-squares system has
/// relative residual <= tolerance. Order 0 for the all-zero series. Throws
/// PreconditionError("too_short") when the series cannot determine order 1
/// and ("no_recurrence") when no order fits.
RecurrenceModel fit_recurrence(const Series &s, double tolerance = 1e-8, int max_order = kDefaultMaxOrder);

/// max_l |sum_k p_k a_{k+l}| / (max_t |a_t| * sum_k |p_k|) for polynomial
/// coefficients p (low to high).
double annihilation_residual(const Series &s, std::span<const Complex> poly);

struct SeriesVerdict {
    bool realizable = false;
    std::string reason;
    RecurrenceModel model;
    SpectrumMultiset candidate;  ///< poles, 1 adjoined if absent, zero-padded to 4
    std::optional<QubitSpectrumVerdict> qubit;
    std::optional<Channel> witness;
    /// A negative answer concerns the observed poles: eigenvalues that do
    /// not appear as poles are invisible in the sequence.
    std::string note;
};

SeriesVerdict qubit_series_verdict(const Series &s, double tolerance = 1e-8, int max_order = kDefaultMaxOrder);

}  // namespace chanspec
