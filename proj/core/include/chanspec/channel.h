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

// Linear maps on d x d complex matrices.
//
// Basis convention (fixed, used by every file format): matrix units in
// row-major order. The operator X is vectorised as vec(X)[i*d + j] = X(i, j),
// and the superoperator satisfies
//
//     superop(k*d + l, i*d + j) = <k| T(|i><j|) |l>.
//
// With this convention vec(K X K^dagger) = (K (x) conj(K)) vec(X), and the
// Choi matrix C = sum_ij T(|i><j|) (x) |i><j| is the reshuffle
//
//     C(k*d + i, l*d + j) = superop(k*d + l, i*d + j).

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "chanspec/linalg.h"

namespace chanspec {

enum class Repr { kraus, superop, choi };

std::string_view to_string(Repr repr) noexcept;
std::optional<Repr> parse_repr(std::string_view name) noexcept;

/// Row-major vectorisation and its inverse.
ComplexVector vec(const ComplexMatrix &x);
ComplexMatrix unvec(const ComplexVector &v, int d);

/// Reshuffle between superoperator and Choi matrix (an involution up to the
/// index relabelling documented above).
ComplexMatrix superop_to_choi(const ComplexMatrix &superop, int d);
ComplexMatrix choi_to_superop(const ComplexMatrix &choi, int d);
ComplexMatrix superop_from_kraus(std::span<const ComplexMatrix> kraus);

/// A linear map on M_d held in one native representation. The others are
/// derived lazily and cached; caches are write-once and shared between
/// copies, so a Channel is safe to read from several threads.
class Channel {
   public:
    static Channel from_kraus(std::vector<ComplexMatrix> kraus);
    static Channel from_superop(ComplexMatrix superop);
    static Channel from_choi(ComplexMatrix choi);

    int dim() const noexcept;
    Repr native_repr() const noexcept;

    const ComplexMatrix &superop() const;
    const ComplexMatrix &choi() const;

    /// Kraus operators. For a non-native request they are extracted from the
    /// Choi eigen-decomposition, discarding eigenvalues below 1e-10 * tr(C);
    /// throws PreconditionError("not_cp") if the Choi matrix has an
    /// eigenvalue below -1e-9 * max(1, tr C) or is not Hermitian.
    const std::vector<ComplexMatrix> &kraus() const;

    /// T(x).
    ComplexMatrix apply(const ComplexMatrix &x) const;

   private:
    struct State;
    explicit Channel(std::shared_ptr<State> state);
    std::shared_ptr<State> state_;
};

/// A channel whose native representation is `target` (data converted).
Channel convert_repr(const Channel &c, Repr target);

Channel identity_channel(int d);
Channel unitary_channel(const ComplexMatrix &u);

struct VerificationReport {
    double trace_preserving_error = 0.0;  ///< ||sum K^dag K - I||_op
    double unital_error = 0.0;            ///< ||T(I) - I||_op
    double hermiticity_error = 0.0;       ///< ||C - C^dag||_op of the Choi matrix
    double cp_margin = 0.0;               ///< min eigenvalue of the (Hermitian part of the) Choi matrix
    double contains_one_error = 0.0;      ///< min_lambda |lambda - 1|
    double spectral_radius = 0.0;

    bool trace_preserving(double tol) const noexcept {
        return trace_preserving_error <= tol;
    }
    bool unital(double tol) const noexcept {
        return unital_error <= tol;
    }
    bool completely_positive(double tol) const noexcept {
        return hermiticity_error <= tol && cp_margin >= -tol;
    }
    /// All necessary conditions of a quantum channel at tolerance `tol`.
    bool cptp(double tol) const noexcept {
        return completely_positive(tol) && trace_preserving(tol) && contains_one_error <= tol &&
               spectral_radius <= 1.0 + tol;
    }
};

VerificationReport verify(const Channel &c);

enum class MomentMethod { superop, kraus };

/// Maximum number of Kraus products the kraus moment method will enumerate.
inline constexpr std::uint64_t kKrausMomentBudget = 1'000'000;

/// mu_1..mu_{k_max}, mu_k = tr(superop^k). The kraus method evaluates
/// sum over k-tuples of |tr(K_j1 ... K_jk)|^2 instead; it throws
/// PreconditionError("kraus_budget") if (#Kraus)^k_max exceeds the budget.
/// Both throw PreconditionError("complex_moment") if tr(superop^k) has an
/// imaginary part above 1e-9 * max(1, |mu_k|).
std::vector<double> moments(const Channel &c, int k_max, MomentMethod method = MomentMethod::superop);

struct TraceNormalization {
    Channel channel;                     ///< trace-preserving T'
    double spectral_radius = 0.0;        ///< Richardson estimate of rho at epsilon -> 0
    double spectral_radius_eps = 0.0;    ///< rho_epsilon, spec(T_eps) = rho_eps * spec(T')
    double limit_error_estimate = 0.0;   ///< |rho_eps - rho_2eps|
    double epsilon = 0.0;
};

/// Given the superoperator of a positive map T with spectral radius rho > 0,
/// builds T_eps(X) = T(X) + eps tr(X) 1, its positive definite Perron fixed
/// point P, and the trace-preserving map T' = (X -> P^-1/2 T_eps(P^1/2 X
/// P^1/2) P^-1/2 / rho_eps)^*, similar to T_eps / rho_eps.
TraceNormalization normalize_trace_preserving(const ComplexMatrix &superop, double epsilon = 1e-8);

struct PrimitivityCertificate {
    bool primitive = false;
    bool spectral = false;            ///< unique peripheral eigenvalue and PD fixed point
    bool kraus_span = false;          ///< Kraus products of some length n span M_d
    int span_length = -1;             ///< smallest such n, -1 if never reached
    int wielandt_bound = 0;           ///< (d^2 - 2)(d^2 - 1)
    std::size_t peripheral_count = 0;
    double fixed_point_min_eigenvalue = 0.0;
};

/// Throws PreconditionError("not_cptp") for inputs failing verify at 1e-8 and
/// NumericalError if the two certificates disagree.
PrimitivityCertificate is_primitive(const Channel &c);

/// Largest-modulus eigenvalue simple (gap > 1e-8) with definite eigenvector.
bool is_irreducible(const Channel &c);

/// S(i, j) = <i| T(|j><j|) |i>; column-stochastic for a positive TP map.
RealMatrix stochastic_submatrix(const Channel &c);

/// m Kraus operators with i.i.d. complex Gaussian entries, right-normalised
/// by (sum G^dag G)^-1/2. Deterministic per seed.
Channel random_channel(int d, int m, std::uint64_t seed);

/// Eigenvector of the superoperator for `eigenvalue`, reshaped to a d x d
/// matrix, phase-fixed to positive trace, Hermitised and scaled to unit trace.
ComplexMatrix fixed_point_of(const ComplexMatrix &superop, int d, Complex eigenvalue);

}  // namespace chanspec
