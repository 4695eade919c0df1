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

#include "chanspec/qubit.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "chanspec/errors.h"

namespace chanspec {

namespace {

constexpr double kFacetTolerance = 1e-12;
constexpr double kPositivityTolerance = 1e-10;
constexpr int kBisectionCap = 200;

// Columns are vec(sigma_j), j = 0 (identity), x, y, z.
ComplexMatrix pauli_basis() {
    const Complex i(0.0, 1.0);
    ComplexMatrix b(4, 4);
    // vec order: (0,0), (0,1), (1,0), (1,1)
    b.col(0) << 1.0, 0.0, 0.0, 1.0;
    b.col(1) << 0.0, 1.0, 1.0, 0.0;
    b.col(2) << 0.0, -i, i, 0.0;
    b.col(3) << 1.0, 0.0, 0.0, -1.0;
    return b;
}

std::optional<ReducedQubitSpectrum> reduce(const SpectrumMultiset &spectrum, double tolerance, std::string &reason) {
    if (spectrum.size() != 4) {
        reason = "wrong_size";
        return std::nullopt;
    }
    // Remove the occurrence closest to 1; the verdict does not depend on which.
    std::size_t unit = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 4; ++i) {
        const double dist = std::abs(spectrum[i] - 1.0);
        if (dist < best) {
            best = dist;
            unit = i;
        }
    }
    if (best > tolerance) {
        reason = "no_unit_eigenvalue";
        return std::nullopt;
    }
    std::vector<Complex> real_values;
    std::vector<Complex> complex_values;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i == unit) {
            continue;
        }
        (std::abs(spectrum[i].imag()) <= kRealnessThreshold ? real_values : complex_values).push_back(spectrum[i]);
    }
    ReducedQubitSpectrum r;
    if (complex_values.empty()) {
        for (std::size_t i = 0; i < 3; ++i) {
            r.reals[i] = real_values[i].real();
            r.s(static_cast<Eigen::Index>(i)) = r.reals[i];
        }
        return r;
    }
    if (complex_values.size() != 2 || std::abs(complex_values[0] - std::conj(complex_values[1])) > tolerance) {
        reason = "not_conjugation_closed";
        return std::nullopt;
    }
    r.complex_pair = true;
    r.real_value = real_values[0].real();
    r.pair = Complex((complex_values[0].real() + complex_values[1].real()) / 2.0,
                     (std::abs(complex_values[0].imag()) + std::abs(complex_values[1].imag())) / 2.0);
    r.reals = {r.real_value, r.pair.real(), r.pair.real()};
    r.s = Eigen::Vector3d(r.real_value, std::abs(r.pair), std::abs(r.pair));
    return r;
}

}  // namespace

ComplexMatrix pauli_transfer_matrix(const Channel &c) {
    if (c.dim() != 2) {
        throw PreconditionError("not_qubit", "pauli_transfer_matrix: channel dimension is not 2");
    }
    const ComplexMatrix b = pauli_basis();
    return b.adjoint() * c.superop() * b / 2.0;
}

ComplexMatrix superop_from_pauli_transfer(const ComplexMatrix &ptm) {
    if (ptm.rows() != 4 || ptm.cols() != 4) {
        throw PreconditionError("not_qubit", "superop_from_pauli_transfer: expected a 4x4 matrix");
    }
    const ComplexMatrix b = pauli_basis();
    return b * ptm * b.adjoint() / 2.0;
}

QubitPauliRep pauli_rep(const Channel &c, double tolerance) {
    const ComplexMatrix ptm = pauli_transfer_matrix(c);
    double first_row = std::abs(ptm(0, 0) - 1.0);
    for (int j = 1; j < 4; ++j) {
        first_row = std::max(first_row, std::abs(ptm(0, j)));
    }
    if (first_row > tolerance) {
        throw PreconditionError("not_trace_preserving",
                                "pauli_rep: first Pauli row deviates from (1,0,0,0) by " + std::to_string(first_row));
    }
    if (ptm.imag().cwiseAbs().maxCoeff() > tolerance) {
        throw PreconditionError("not_hermiticity_preserving", "pauli_rep: Pauli transfer matrix is not real");
    }
    QubitPauliRep rep;
    for (int i = 0; i < 3; ++i) {
        rep.v(i) = ptm(i + 1, 0).real();
        for (int j = 0; j < 3; ++j) {
            rep.delta(i, j) = ptm(i + 1, j + 1).real();
        }
    }
    return rep;
}

Channel from_pauli_rep(const QubitPauliRep &rep) {
    ComplexMatrix ptm = ComplexMatrix::Zero(4, 4);
    ptm(0, 0) = 1.0;
    for (int i = 0; i < 3; ++i) {
        ptm(i + 1, 0) = rep.v(i);
        for (int j = 0; j < 3; ++j) {
            ptm(i + 1, j + 1) = rep.delta(i, j);
        }
    }
    return Channel::from_superop(superop_from_pauli_transfer(ptm));
}

double TetraPoint::min_margin() const noexcept {
    return *std::min_element(facet_margins.begin(), facet_margins.end());
}

TetraPoint tetra_membership(const Eigen::Vector3d &s) {
    TetraPoint p;
    p.s = s;
    p.facet_margins = {1.0 + s(0) + s(1) + s(2), 1.0 + s(0) - s(1) - s(2), 1.0 - s(0) + s(1) - s(2),
                       1.0 - s(0) - s(1) + s(2)};
    p.member = p.min_margin() >= -kFacetTolerance;
    return p;
}

QubitSpectrumVerdict check_qubit_cp_spectrum(const SpectrumMultiset &spectrum, double tolerance) {
    QubitSpectrumVerdict verdict;
    verdict.reduced = reduce(spectrum, tolerance, verdict.reason);
    if (!verdict.reduced) {
        return verdict;
    }
    verdict.point = tetra_membership(verdict.reduced->s);
    verdict.realizable = verdict.point->member;
    verdict.reason = verdict.realizable ? "ok" : "outside_tetrahedron";
    return verdict;
}

Eigen::Matrix3d canonical_delta(const ReducedQubitSpectrum &reduced) {
    Eigen::Matrix3d delta = Eigen::Matrix3d::Zero();
    if (!reduced.complex_pair) {
        for (int i = 0; i < 3; ++i) {
            delta(i, i) = reduced.reals[static_cast<std::size_t>(i)];
        }
        return delta;
    }
    const double a = reduced.pair.real();
    const double b = reduced.pair.imag();
    delta(0, 0) = reduced.real_value;
    delta(1, 1) = a;
    delta(1, 2) = b;
    delta(2, 1) = -b;
    delta(2, 2) = a;
    return delta;
}

Channel synth_qubit_channel(const SpectrumMultiset &spectrum, double tolerance) {
    const auto verdict = check_qubit_cp_spectrum(spectrum, tolerance);
    if (!verdict.realizable) {
        throw PreconditionError("not_realizable",
                                "synth_qubit_channel: spectrum is not that of a qubit channel (" + verdict.reason + ")");
    }
    QubitPauliRep rep;
    rep.delta = canonical_delta(*verdict.reduced);
    Channel c = from_pauli_rep(rep);
    const auto report = verify(c);
    if (report.cp_margin < -tol::kPsd || report.trace_preserving_error > tol::kPsd) {
        throw NumericalError("synth_qubit_channel: constructed map fails verification (cp_margin " +
                             std::to_string(report.cp_margin) + ")");
    }
    if (!multiset_match(eig_multiset(c.superop()), spectrum, std::max(tolerance, tol::kSpectral)).matched) {
        throw NumericalError("synth_qubit_channel: constructed spectrum does not match the target");
    }
    return c;
}

PositiveQubitVerdict check_and_synth_positive_qubit(const SpectrumMultiset &spectrum, double tolerance) {
    PositiveQubitVerdict verdict;
    const auto reduced = reduce(spectrum, tolerance, verdict.reason);
    if (!reduced) {
        return verdict;
    }
    for (const auto &lambda : spectrum) {
        if (std::abs(lambda) > 1.0 + kFacetTolerance) {
            verdict.reason = "modulus_exceeds_one";
            return verdict;
        }
    }
    QubitPauliRep rep;
    rep.delta = canonical_delta(*reduced);
    verdict.delta_norm = op_norm(RealMatrix(rep.delta));
    if (verdict.delta_norm > 1.0 + kPositivityTolerance) {
        throw NumericalError("check_and_synth_positive_qubit: constructed delta has norm above 1");
    }
    verdict.realizable = true;
    verdict.reason = "ok";
    verdict.superop = from_pauli_rep(rep).superop();
    verdict.rep = rep;
    return verdict;
}

QubitPositivity qubit_positivity(const QubitPauliRep &rep) {
    // max |v + D x|^2 = |v|^2 + max (x^T A x + 2 b^T x), A = D^T D, b = D^T v.
    const Eigen::Matrix3d a = rep.delta.transpose() * rep.delta;
    const Eigen::Vector3d b = rep.delta.transpose() * rep.v;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(a);
    const Eigen::Vector3d w = eig.eigenvalues();  // ascending
    const Eigen::Matrix3d q = eig.eigenvectors();
    const Eigen::Vector3d bt = q.transpose() * b;
    const double a_max = w(2);
    const double b_norm = b.norm();
    const double group_tol = 1e-12 * std::max(1.0, a_max);
    const double b_tol = 1e-14 * std::max(1.0, b_norm);

    auto in_top = [&](int i) { return w(i) >= a_max - group_tol; };
    double top_b = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (in_top(i)) {
            top_b = std::hypot(top_b, bt(i));
        }
    }

    Eigen::Vector3d xt = Eigen::Vector3d::Zero();
    bool solved = false;
    if (top_b <= b_tol) {
        // Hard case candidate: nu = a_max if the partial solution fits in the ball.
        for (int i = 0; i < 3; ++i) {
            if (!in_top(i)) {
                xt(i) = bt(i) / (a_max - w(i));
            }
        }
        const double partial = xt.norm();
        if (partial <= 1.0) {
            xt(2) = std::sqrt(std::max(0.0, 1.0 - partial * partial));
            solved = true;
        }
    }
    if (!solved) {
        // phi(nu) = sum bt_i^2 / (nu - w_i)^2 - 1 decreases on (a_max, inf) and
        // is <= 0 at a_max + |b|.
        auto x_at = [&](double nu) {
            Eigen::Vector3d x;
            for (int i = 0; i < 3; ++i) {
                x(i) = bt(i) / (nu - w(i));
            }
            return x;
        };
        double lo = a_max;
        double hi = a_max + b_norm;
        for (int it = 0; it < kBisectionCap && hi - lo > 1e-16 * std::max(1.0, hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) {
                break;
            }
            (x_at(mid).norm() > 1.0 ? lo : hi) = mid;
        }
        xt = x_at(hi);
        if (std::abs(xt.norm() - 1.0) > 1e-8) {
            throw NumericalError("qubit_positivity: secular equation bisection did not converge");
        }
        xt.normalize();
    }
    QubitPositivity out;
    out.maximizer = q * xt;
    out.max_norm = (rep.v + rep.delta * out.maximizer).norm();
    out.positive = out.max_norm <= 1.0 + kPositivityTolerance;
    return out;
}

Channel reduce_to_unital(const Channel &c) {
    QubitPauliRep rep = pauli_rep(c);
    rep.v.setZero();
    Channel out = from_pauli_rep(rep);
    const auto before = verify(c);
    const auto after = verify(out);
    if (before.cp_margin >= -tol::kPsd && after.cp_margin < -tol::kPsd) {
        throw NumericalError("reduce_to_unital: output lost complete positivity");
    }
    return out;
}

}  // namespace chanspec
