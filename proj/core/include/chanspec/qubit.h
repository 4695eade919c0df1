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

// Qubit maps in Bloch-affine form and the complete answer to "which four
// complex numbers are the spectrum of a qubit channel / positive qubit map".

#pragma once

#include <array>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "chanspec/channel.h"
#include "chanspec/linalg.h"

namespace chanspec {

/// Pauli transfer form of a trace-preserving Hermiticity-preserving qubit
/// map: superop in the normalised Pauli basis is [[1, 0], [v, delta]], i.e.
/// the Bloch vector transforms as x -> v + delta x.
struct QubitPauliRep {
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    Eigen::Matrix3d delta = Eigen::Matrix3d::Identity();
};

/// Full 4x4 matrix tr[sigma_i T(sigma_j)] / 2 (complex in general).
ComplexMatrix pauli_transfer_matrix(const Channel &c);
ComplexMatrix superop_from_pauli_transfer(const ComplexMatrix &ptm);

/// Throws PreconditionError("not_qubit") for d != 2 and
/// ("not_trace_preserving") when the first row deviates from (1,0,0,0) or
/// the matrix is not real, both beyond `tolerance`.
QubitPauliRep pauli_rep(const Channel &c, double tolerance = 1e-9);
Channel from_pauli_rep(const QubitPauliRep &rep);

/// Point of R^3 tested against the tetrahedron with corners (1,1,1),
/// (1,-1,-1), (-1,1,-1), (-1,-1,1).
struct TetraPoint {
    Eigen::Vector3d s = Eigen::Vector3d::Zero();
    /// {1+s1+s2+s3, 1+s1-s2-s3, 1-s1+s2-s3, 1-s1-s2+s3}
    std::array<double, 4> facet_margins{};
    bool member = false;

    double min_margin() const noexcept;
};

/// Membership iff all facet margins >= -1e-12.
TetraPoint tetra_membership(const Eigen::Vector3d &s);

/// The spectrum minus one occurrence of 1, split into its real form
/// (three reals) or complex form (one real and a conjugate pair a +- ib).
struct ReducedQubitSpectrum {
    bool complex_pair = false;
    std::array<double, 3> reals{};   ///< real form: the three values
    double real_value = 0.0;         ///< complex form: the real eigenvalue
    Complex pair{0.0, 0.0};          ///< complex form: a + ib with b > 0
    Eigen::Vector3d s = Eigen::Vector3d::Zero();  ///< s_i = lambda_i or |lambda_i|
};

struct QubitSpectrumVerdict {
    bool realizable = false;
    /// "ok", "wrong_size", "no_unit_eigenvalue", "not_conjugation_closed",
    /// "outside_tetrahedron" or "modulus_exceeds_one".
    std::string reason;
    std::optional<ReducedQubitSpectrum> reduced;
    std::optional<TetraPoint> point;
};

/// Realness threshold for the s-vector construction.
inline constexpr double kRealnessThreshold = 1e-9;

/// Decides whether `spectrum` (four values) is the spectrum of a qubit
/// channel: 1 present within `tolerance`, remaining triple closed under
/// conjugation, and s in the tetrahedron.
QubitSpectrumVerdict check_qubit_cp_spectrum(const SpectrumMultiset &spectrum, double tolerance = tol::kSpectral);

/// Delta with zero off-diagonal part: diag(l1, l2, l3) in the real form,
/// diag(l_r) (+) [[a, b], [-b, a]] in the complex form.
Eigen::Matrix3d canonical_delta(const ReducedQubitSpectrum &reduced);

/// Unital qubit channel 1 (+) canonical_delta with the given spectrum.
/// Throws PreconditionError("not_realizable") if the check fails and
/// NumericalError if the constructed map fails its own verification.
Channel synth_qubit_channel(const SpectrumMultiset &spectrum, double tolerance = tol::kSpectral);

struct PositiveQubitVerdict {
    bool realizable = false;
    std::string reason;
    std::optional<QubitPauliRep> rep;
    std::optional<ComplexMatrix> superop;
    double delta_norm = 0.0;
};

/// Positive (not necessarily CP) qubit maps: 1 in the spectrum, closed
/// under conjugation, all |lambda| <= 1 + 1e-12; construction as above.
PositiveQubitVerdict check_and_synth_positive_qubit(const SpectrumMultiset &spectrum,
                                                    double tolerance = tol::kSpectral);

struct QubitPositivity {
    bool positive = false;
    double max_norm = 0.0;                                  ///< max_{|x|=1} |v + delta x|
    Eigen::Vector3d maximizer = Eigen::Vector3d::UnitZ();  ///< a unit x attaining it
};

/// Exact positivity test for a qubit map in Bloch form: maximises
/// |v + delta x|^2 over the unit sphere (a trust-region subproblem) by
/// safeguarded bisection on the secular equation. Throws NumericalError if
/// the bisection does not meet its residual check within 200 steps.
QubitPositivity qubit_positivity(const QubitPauliRep &rep);

/// 1 (+) delta: the unital part of a trace-preserving qubit map. Same
/// spectrum; complete positivity is preserved (checked).
Channel reduce_to_unital(const Channel &c);

}  // namespace chanspec
