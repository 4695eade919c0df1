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

#include "chanspec/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "chanspec/errors.h"

namespace chanspec {

namespace {

// Penalty added to edges that exceed the matching tolerance. Costs here are
// distances between numbers of modulus <= a few units, far below this.
constexpr double kOverTolPenalty = 1e6;

void require_square(Eigen::Index rows, Eigen::Index cols, std::string_view what) {
    if (rows != cols || rows < 1) {
        throw PreconditionError("not_square", std::string(what) + ": expected a non-empty square matrix, got " +
                                                  std::to_string(rows) + "x" + std::to_string(cols));
    }
}

}  // namespace

void require_finite(const ComplexMatrix &m, std::string_view what) {
    if (!m.allFinite()) {
        throw PreconditionError("non_finite", std::string(what) + ": matrix has NaN or infinite entries");
    }
}

void require_finite(const RealMatrix &m, std::string_view what) {
    if (!m.allFinite()) {
        throw PreconditionError("non_finite", std::string(what) + ": matrix has NaN or infinite entries");
    }
}

SpectrumMultiset::SpectrumMultiset(std::vector<Complex> values, double tolerance)
    : values_(std::move(values)), tolerance_(tolerance) {
    if (!(tolerance_ >= 0.0)) {
        throw PreconditionError("bad_tolerance", "SpectrumMultiset: tolerance must be nonnegative");
    }
    for (const auto &v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw PreconditionError("non_finite", "SpectrumMultiset: non-finite value");
        }
    }
}

SpectrumMultiset::SpectrumMultiset(std::initializer_list<Complex> values)
    : SpectrumMultiset(std::vector<Complex>(values)) {
}

bool SpectrumMultiset::conjugation_closed() const {
    return multiset_match(*this, conjugated(), tolerance_).matched;
}

Complex SpectrumMultiset::power_sum(int k) const {
    Complex s = 0.0;
    for (const auto &v : values_) {
        s += std::pow(v, k);
    }
    return s;
}

double SpectrumMultiset::spectral_radius() const {
    double r = 0.0;
    for (const auto &v : values_) {
        r = std::max(r, std::abs(v));
    }
    return r;
}

SpectrumMultiset SpectrumMultiset::nonzero_part(double cutoff) const {
    std::vector<Complex> out;
    for (const auto &v : values_) {
        if (std::abs(v) > cutoff) {
            out.push_back(v);
        }
    }
    return SpectrumMultiset(std::move(out), tolerance_);
}

SpectrumMultiset SpectrumMultiset::largest(std::size_t count) const {
    std::vector<std::size_t> order(values_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return std::abs(values_[a]) > std::abs(values_[b]); });
    std::vector<Complex> out;
    for (std::size_t i = 0; i < std::min(count, order.size()); ++i) {
        out.push_back(values_[order[i]]);
    }
    return SpectrumMultiset(std::move(out), tolerance_);
}

SpectrumMultiset SpectrumMultiset::scaled(Complex factor) const {
    std::vector<Complex> out(values_);
    for (auto &v : out) {
        v *= factor;
    }
    return SpectrumMultiset(std::move(out), tolerance_);
}

SpectrumMultiset SpectrumMultiset::conjugated() const {
    std::vector<Complex> out(values_);
    for (auto &v : out) {
        v = std::conj(v);
    }
    return SpectrumMultiset(std::move(out), tolerance_);
}

SpectrumMultiset SpectrumMultiset::with_zeros(std::size_t count) const {
    std::vector<Complex> out(values_);
    out.insert(out.end(), count, Complex{0.0, 0.0});
    return SpectrumMultiset(std::move(out), tolerance_);
}

SpectrumMultiset SpectrumMultiset::joined(const SpectrumMultiset &other) const {
    std::vector<Complex> out(values_);
    out.insert(out.end(), other.values_.begin(), other.values_.end());
    return SpectrumMultiset(std::move(out), tolerance_);
}

SpectrumMultiset eig_multiset(const ComplexMatrix &a) {
    require_square(a.rows(), a.cols(), "eig_multiset");
    require_finite(a, "eig_multiset");
    const Eigen::Index n = a.rows();
    Eigen::ComplexSchur<ComplexMatrix> schur(n);
    schur.setMaxIterations(100 * n);
    schur.compute(a, /*computeU=*/false);
    if (schur.info() != Eigen::Success) {
        throw NumericalError("eig_multiset: QR iteration did not converge within " + std::to_string(100 * n) +
                             " sweeps");
    }
    const ComplexMatrix &t = schur.matrixT();
    std::vector<Complex> values(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = t(i, i);
    }
    return SpectrumMultiset(std::move(values));
}

SpectrumMultiset eig_multiset(const RealMatrix &a) {
    require_square(a.rows(), a.cols(), "eig_multiset");
    require_finite(a, "eig_multiset");
    const Eigen::Index n = a.rows();
    Eigen::EigenSolver<RealMatrix> solver(n);
    solver.setMaxIterations(100 * n);
    solver.compute(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eig_multiset: QR iteration did not converge within " + std::to_string(100 * n) +
                             " sweeps");
    }
    const auto &ev = solver.eigenvalues();
    return SpectrumMultiset(std::vector<Complex>(ev.data(), ev.data() + ev.size()));
}

HermitianEigensystem herm_eigensystem(const ComplexMatrix &h, double hermiticity_tol) {
    require_square(h.rows(), h.cols(), "herm_eigensystem");
    require_finite(h, "herm_eigensystem");
    const double scale = std::max(1.0, h.norm());
    const double asym = (h - h.adjoint()).norm();
    if (asym > hermiticity_tol * scale) {
        throw PreconditionError("not_hermitian", "herm_eigensystem: ||H - H^dagger|| = " + std::to_string(asym) +
                                                     " exceeds tolerance");
    }
    const ComplexMatrix sym = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("herm_eigensystem: tridiagonal QR did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

LeastSquaresResult least_squares(const ComplexMatrix &a, const ComplexVector &b, double rcond) {
    if (a.rows() < a.cols() || a.cols() < 1) {
        throw PreconditionError("underdetermined", "least_squares: need rows >= cols >= 1");
    }
    if (b.size() != a.rows()) {
        throw PreconditionError("dimension_mismatch", "least_squares: rhs length does not match rows");
    }
    require_finite(a, "least_squares");
    Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod;
    cod.setThreshold(rcond);
    cod.compute(a);
    LeastSquaresResult result;
    result.x = cod.solve(b);
    result.rank = cod.rank();
    result.rank_deficient = result.rank < a.cols();
    result.residual_norm = (a * result.x - b).norm();
    return result;
}

std::vector<std::size_t> hungarian_assignment(const RealMatrix &cost) {
    // Potential-based O(n^3) shortest augmenting path, 1-indexed internally.
    const auto n = static_cast<std::size_t>(cost.rows());
    if (cost.rows() != cost.cols()) {
        throw PreconditionError("not_square", "hungarian_assignment: cost matrix must be square");
    }
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) {
                    continue;
                }
                const double cur = cost(static_cast<Eigen::Index>(i0 - 1), static_cast<Eigen::Index>(j - 1)) -
                                   u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> assignment(n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        if (p[j] != 0) {
            assignment[p[j] - 1] = j - 1;
        }
    }
    return assignment;
}

MatchResult multiset_match(const SpectrumMultiset &a, const SpectrumMultiset &b, double tolerance) {
    MatchResult result;
    if (a.size() != b.size()) {
        return result;
    }
    const auto n = static_cast<Eigen::Index>(a.size());
    if (n == 0) {
        result.matched = true;
        return result;
    }
    RealMatrix cost(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double dist = std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(j)]);
            cost(i, j) = dist <= tolerance ? dist : dist + kOverTolPenalty;
        }
    }
    result.pairing = hungarian_assignment(cost);
    for (std::size_t i = 0; i < a.size(); ++i) {
        result.max_cost = std::max(result.max_cost, std::abs(a[i] - b[result.pairing[i]]));
    }
    result.matched = result.max_cost <= tolerance;
    return result;
}

double op_norm(const ComplexMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

double op_norm(const RealMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<RealMatrix> svd(m);
    return svd.singularValues()(0);
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::vector<Complex> poly_from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{Complex{1.0, 0.0}};
    for (const auto &r : roots) {
        std::vector<Complex> next(c.size() + 1, Complex{0.0, 0.0});
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return c;
}

ComplexMatrix companion_matrix(std::span<const Complex> lower) {
    const auto n = static_cast<Eigen::Index>(lower.size());
    ComplexMatrix c = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) {
        c(i, i - 1) = 1.0;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        c(i, n - 1) = -lower[static_cast<std::size_t>(i)];
    }
    return c;
}

RealMatrix companion_matrix(std::span<const double> lower) {
    const auto n = static_cast<Eigen::Index>(lower.size());
    RealMatrix c = RealMatrix::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) {
        c(i, i - 1) = 1.0;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        c(i, n - 1) = -lower[static_cast<std::size_t>(i)];
    }
    return c;
}

std::vector<double> charpoly_coefficients(const RealMatrix &m) {
    require_square(m.rows(), m.cols(), "charpoly_coefficients");
    const auto n = static_cast<std::size_t>(m.rows());
    std::vector<double> power_sums(n + 1, 0.0);
    RealMatrix power = RealMatrix::Identity(m.rows(), m.cols());
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * m;
        power_sums[k] = power.trace();
    }
    // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    std::vector<double> e(n + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (std::size_t i = 1; i <= k; ++i) {
            const double sign = (i % 2 == 1) ? 1.0 : -1.0;
            acc += sign * e[k - i] * power_sums[i];
        }
        e[k] = acc / static_cast<double>(k);
    }
    // det(xI - M) = sum_k (-1)^k e_k x^{n-k}
    std::vector<double> coeffs(n + 1, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
        coeffs[n - k] = (k % 2 == 0 ? 1.0 : -1.0) * e[k];
    }
    return coeffs;
}

}  // namespace chanspec
