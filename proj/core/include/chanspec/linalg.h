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

// Dense kernel for the small matrices that appear throughout the library:
// superoperators (d^2 x d^2), Choi matrices, Kraus operators, stochastic
// matrices and companion matrices. Dimensions here are at most a few dozen.

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace chanspec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Default tolerance ladder. Each consumer sits one decade looser than the
/// producer of the quantity it checks.
namespace tol {
inline constexpr double kHermiticity = 1e-10;
inline constexpr double kSpectral = 1e-8;
inline constexpr double kPsd = 1e-9;
}  // namespace tol

/// Throws PreconditionError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix &m, std::string_view what);
void require_finite(const RealMatrix &m, std::string_view what);

/// Unordered list of complex numbers counted with multiplicity.
class SpectrumMultiset {
   public:
    SpectrumMultiset() = default;
    explicit SpectrumMultiset(std::vector<Complex> values, double tolerance = tol::kSpectral);
    SpectrumMultiset(std::initializer_list<Complex> values);

    const std::vector<Complex> &values() const noexcept {
        return values_;
    }
    std::size_t size() const noexcept {
        return values_.size();
    }
    bool empty() const noexcept {
        return values_.empty();
    }
    double tolerance() const noexcept {
        return tolerance_;
    }
    const Complex &operator[](std::size_t i) const {
        return values_[i];
    }
    auto begin() const noexcept {
        return values_.begin();
    }
    auto end() const noexcept {
        return values_.end();
    }

    /// True iff the multiset coincides with its complex conjugate within
    /// tolerance(). Decided by an optimal matching, so the answer does not
    /// depend on element order.
    bool conjugation_closed() const;

    /// Power sum sum_j lambda_j^k.
    Complex power_sum(int k) const;

    /// max |lambda|, 0 for the empty multiset.
    double spectral_radius() const;

    /// Elements with |lambda| > cutoff.
    SpectrumMultiset nonzero_part(double cutoff = tol::kSpectral) const;

    /// The `count` elements of largest modulus (ties broken by position).
    SpectrumMultiset largest(std::size_t count) const;

    SpectrumMultiset scaled(Complex factor) const;
    SpectrumMultiset conjugated() const;
    SpectrumMultiset with_zeros(std::size_t count) const;
    SpectrumMultiset joined(const SpectrumMultiset &other) const;

   private:
    std::vector<Complex> values_;
    double tolerance_ = tol::kSpectral;
};

/// Eigenvalues with algebraic multiplicity via Hessenberg reduction and
/// shifted QR (complex Schur form). Throws NumericalError if the QR sweep
/// count exceeds 100 * dim, PreconditionError for non-square input.
SpectrumMultiset eig_multiset(const ComplexMatrix &a);

/// Real overload: uses the real Schur form so complex eigenvalues come out in
/// exact conjugate pairs.
SpectrumMultiset eig_multiset(const RealMatrix &a);

struct HermitianEigensystem {
    RealVector values;      ///< ascending
    ComplexMatrix vectors;  ///< orthonormal columns
};

/// Eigen-decomposition of a Hermitian matrix. `hermiticity_tol` bounds
/// ||H - H^dagger|| relative to max(1, ||H||); the Hermitian part is used.
HermitianEigensystem herm_eigensystem(const ComplexMatrix &h, double hermiticity_tol = tol::kHermiticity);

struct LeastSquaresResult {
    ComplexVector x;
    Eigen::Index rank = 0;
    bool rank_deficient = false;
    double residual_norm = 0.0;
};

/// Minimum-norm least-squares solution of A x = b (complete orthogonal
/// decomposition). `rcond` is the relative threshold below which singular
/// directions count as rank deficiency.
LeastSquaresResult least_squares(const ComplexMatrix &a, const ComplexVector &b, double rcond = 1e-12);

struct MatchResult {
    bool matched = false;
    double max_cost = 0.0;            ///< largest |a_i - b_pairing[i]|
    std::vector<std::size_t> pairing;  ///< a[i] <-> b[pairing[i]]
};

/// Decides multiset identity within `tolerance` with a Hungarian assignment.
/// Edges above tolerance are penalised lexicographically, so a within-
/// tolerance perfect matching is found whenever one exists; among those the
/// total distance is minimal.
MatchResult multiset_match(const SpectrumMultiset &a, const SpectrumMultiset &b, double tolerance);

/// Square Hungarian assignment minimising sum cost(i, assignment[i]).
std::vector<std::size_t> hungarian_assignment(const RealMatrix &cost);

/// Largest singular value.
double op_norm(const ComplexMatrix &m);
double op_norm(const RealMatrix &m);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Coefficients c_0..c_n (low to high) of prod_i (x - roots_i); c_n = 1.
std::vector<Complex> poly_from_roots(std::span<const Complex> roots);

/// Frobenius companion matrix of the monic polynomial
/// x^n + a_{n-1} x^{n-1} + ... + a_0 given `lower` = (a_0, ..., a_{n-1}):
/// ones on the subdiagonal, last column (-a_0, ..., -a_{n-1}).
ComplexMatrix companion_matrix(std::span<const Complex> lower);
RealMatrix companion_matrix(std::span<const double> lower);

/// Characteristic polynomial coefficients (low to high, monic) of a real
/// square matrix via Newton's identities on trace powers. Exact polynomial
/// in the matrix entries, which keeps it smooth for optimisation.
std::vector<double> charpoly_coefficients(const RealMatrix &m);

}  // namespace chanspec
