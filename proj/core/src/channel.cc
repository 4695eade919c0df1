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

#include "chanspec/channel.h"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "chanspec/errors.h"

namespace chanspec {

namespace {

constexpr double kKrausCutoff = 1e-10;

int square_root_dim(Eigen::Index n, std::string_view what) {
    const auto d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (d < 1 || static_cast<Eigen::Index>(d) * d != n) {
        throw PreconditionError("bad_dimension",
                                std::string(what) + ": size " + std::to_string(n) + " is not a perfect square");
    }
    return d;
}

std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix &choi, int d) {
    const double scale = std::max(1.0, std::abs(choi.trace()));
    const double asym = op_norm(ComplexMatrix(choi - choi.adjoint()));
    if (asym > tol::kPsd * scale) {
        throw PreconditionError("not_cp", "Kraus extraction: Choi matrix is not Hermitian (map is not "
                                          "Hermiticity-preserving)");
    }
    const auto eig = herm_eigensystem(choi, tol::kPsd);
    if (eig.values(0) < -tol::kPsd * scale) {
        throw PreconditionError("not_cp", "Kraus extraction: Choi matrix has eigenvalue " +
                                              std::to_string(eig.values(0)) + " < 0, map is not completely positive");
    }
    std::vector<ComplexMatrix> kraus;
    for (Eigen::Index n = eig.values.size() - 1; n >= 0; --n) {
        const double w = eig.values(n);
        if (w <= kKrausCutoff * scale) {
            continue;
        }
        ComplexMatrix k(d, d);
        const double root = std::sqrt(w);
        for (int a = 0; a < d; ++a) {
            for (int i = 0; i < d; ++i) {
                k(a, i) = root * eig.vectors(a * d + i, n);
            }
        }
        kraus.push_back(std::move(k));
    }
    if (kraus.empty()) {
        kraus.push_back(ComplexMatrix::Zero(d, d));
    }
    return kraus;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &p, bool inverse) {
    const auto eig = herm_eigensystem(p, 1e-8);
    RealVector w = eig.values;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w(i) <= 0.0) {
            throw NumericalError("matrix square root: fixed point is not positive definite");
        }
        w(i) = inverse ? 1.0 / std::sqrt(w(i)) : std::sqrt(w(i));
    }
    return eig.vectors * w.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

}  // namespace

std::string_view to_string(Repr repr) noexcept {
    switch (repr) {
        case Repr::kraus:
            return "kraus";
        case Repr::superop:
            return "superop";
        case Repr::choi:
            return "choi";
    }
    return "unknown";
}

std::optional<Repr> parse_repr(std::string_view name) noexcept {
    if (name == "kraus") {
        return Repr::kraus;
    }
    if (name == "superop") {
        return Repr::superop;
    }
    if (name == "choi") {
        return Repr::choi;
    }
    return std::nullopt;
}

ComplexVector vec(const ComplexMatrix &x) {
    ComplexVector v(x.size());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            v(i * x.cols() + j) = x(i, j);
        }
    }
    return v;
}

ComplexMatrix unvec(const ComplexVector &v, int d) {
    if (v.size() != static_cast<Eigen::Index>(d) * d) {
        throw PreconditionError("dimension_mismatch", "unvec: vector length is not d^2");
    }
    ComplexMatrix x(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            x(i, j) = v(i * d + j);
        }
    }
    return x;
}

ComplexMatrix superop_to_choi(const ComplexMatrix &superop, int d) {
    ComplexMatrix choi(d * d, d * d);
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    choi(k * d + i, l * d + j) = superop(k * d + l, i * d + j);
                }
            }
        }
    }
    return choi;
}

ComplexMatrix choi_to_superop(const ComplexMatrix &choi, int d) {
    ComplexMatrix superop(d * d, d * d);
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    superop(k * d + l, i * d + j) = choi(k * d + i, l * d + j);
                }
            }
        }
    }
    return superop;
}

ComplexMatrix superop_from_kraus(std::span<const ComplexMatrix> kraus) {
    if (kraus.empty()) {
        throw PreconditionError("empty_kraus", "superop_from_kraus: no Kraus operators");
    }
    const Eigen::Index d = kraus.front().rows();
    ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
    for (const auto &k : kraus) {
        out += kron(k, k.conjugate());
    }
    return out;
}

struct Channel::State {
    int d = 0;
    Repr native = Repr::superop;

    std::once_flag superop_once;
    std::once_flag choi_once;
    std::once_flag kraus_once;
    ComplexMatrix superop;
    ComplexMatrix choi;
    std::vector<ComplexMatrix> kraus;
};

Channel::Channel(std::shared_ptr<State> state) : state_(std::move(state)) {
}

Channel Channel::from_kraus(std::vector<ComplexMatrix> kraus) {
    if (kraus.empty()) {
        throw PreconditionError("empty_kraus", "Channel: Kraus list is empty");
    }
    const Eigen::Index d = kraus.front().rows();
    for (const auto &k : kraus) {
        if (k.rows() != d || k.cols() != d || d < 1) {
            throw PreconditionError("bad_dimension", "Channel: Kraus operators must all be d x d");
        }
        require_finite(k, "Channel::from_kraus");
    }
    auto state = std::make_shared<State>();
    state->d = static_cast<int>(d);
    state->native = Repr::kraus;
    state->kraus = std::move(kraus);
    std::call_once(state->kraus_once, [] {});
    return Channel(std::move(state));
}

Channel Channel::from_superop(ComplexMatrix superop) {
    if (superop.rows() != superop.cols()) {
        throw PreconditionError("not_square", "Channel: superoperator must be square");
    }
    require_finite(superop, "Channel::from_superop");
    auto state = std::make_shared<State>();
    state->d = square_root_dim(superop.rows(), "Channel::from_superop");
    state->native = Repr::superop;
    state->superop = std::move(superop);
    std::call_once(state->superop_once, [] {});
    return Channel(std::move(state));
}

Channel Channel::from_choi(ComplexMatrix choi) {
    if (choi.rows() != choi.cols()) {
        throw PreconditionError("not_square", "Channel: Choi matrix must be square");
    }
    require_finite(choi, "Channel::from_choi");
    auto state = std::make_shared<State>();
    state->d = square_root_dim(choi.rows(), "Channel::from_choi");
    state->native = Repr::choi;
    state->choi = std::move(choi);
    std::call_once(state->choi_once, [] {});
    return Channel(std::move(state));
}

int Channel::dim() const noexcept {
    return state_->d;
}

Repr Channel::native_repr() const noexcept {
    return state_->native;
}

const ComplexMatrix &Channel::superop() const {
    std::call_once(state_->superop_once, [this] {
        State &s = *state_;
        if (s.native == Repr::kraus) {
            s.superop = superop_from_kraus(s.kraus);
        } else {
            s.superop = choi_to_superop(s.choi, s.d);
        }
    });
    return state_->superop;
}

const ComplexMatrix &Channel::choi() const {
    std::call_once(state_->choi_once, [this] {
        State &s = *state_;
        s.choi = superop_to_choi(superop(), s.d);
    });
    return state_->choi;
}

const std::vector<ComplexMatrix> &Channel::kraus() const {
    std::call_once(state_->kraus_once, [this] {
        State &s = *state_;
        s.kraus = kraus_from_choi(choi(), s.d);
    });
    return state_->kraus;
}

ComplexMatrix Channel::apply(const ComplexMatrix &x) const {
    if (x.rows() != dim() || x.cols() != dim()) {
        throw PreconditionError("dimension_mismatch", "Channel::apply: operand must be d x d");
    }
    if (native_repr() == Repr::kraus) {
        ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
        for (const auto &k : kraus()) {
            out += k * x * k.adjoint();
        }
        return out;
    }
    return unvec(superop() * vec(x), dim());
}

Channel convert_repr(const Channel &c, Repr target) {
    switch (target) {
        case Repr::kraus:
            return Channel::from_kraus(c.kraus());
        case Repr::superop:
            return Channel::from_superop(c.superop());
        case Repr::choi:
            return Channel::from_choi(c.choi());
    }
    throw PreconditionError("bad_repr", "convert_repr: unknown representation");
}

Channel identity_channel(int d) {
    return Channel::from_kraus({ComplexMatrix::Identity(d, d)});
}

Channel unitary_channel(const ComplexMatrix &u) {
    return Channel::from_kraus({u});
}

VerificationReport verify(const Channel &c) {
    const int d = c.dim();
    const ComplexMatrix &t = c.superop();
    VerificationReport r;

    // G(j, i) = tr T(|i><j|) = (sum K^dag K)(j, i)
    ComplexMatrix g = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < d; ++k) {
                acc += t(k * d + k, i * d + j);
            }
            g(j, i) = acc;
        }
    }
    r.trace_preserving_error = op_norm(ComplexMatrix(g - ComplexMatrix::Identity(d, d)));

    const ComplexMatrix image_of_identity = unvec(t * vec(ComplexMatrix::Identity(d, d)), d);
    r.unital_error = op_norm(ComplexMatrix(image_of_identity - ComplexMatrix::Identity(d, d)));

    const ComplexMatrix &choi = c.choi();
    r.hermiticity_error = op_norm(ComplexMatrix(choi - choi.adjoint()));
    const ComplexMatrix herm = (choi + choi.adjoint()) / 2.0;
    if (herm.isDiagonal(0.0)) {
        // exact for diagonal Choi matrices (lifted stochastic maps)
        r.cp_margin = herm.diagonal().real().minCoeff();
    } else {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> choi_eig(herm, Eigen::EigenvaluesOnly);
        r.cp_margin = choi_eig.eigenvalues()(0);
    }

    const auto spectrum = eig_multiset(t);
    r.spectral_radius = spectrum.spectral_radius();
    r.contains_one_error = std::numeric_limits<double>::infinity();
    for (const auto &lambda : spectrum) {
        r.contains_one_error = std::min(r.contains_one_error, std::abs(lambda - 1.0));
    }
    return r;
}

std::vector<double> moments(const Channel &c, int k_max, MomentMethod method) {
    if (k_max < 1) {
        throw PreconditionError("bad_horizon", "moments: k_max must be >= 1");
    }
    std::vector<double> mu(static_cast<std::size_t>(k_max), 0.0);
    if (method == MomentMethod::superop) {
        const ComplexMatrix &t = c.superop();
        ComplexMatrix power = ComplexMatrix::Identity(t.rows(), t.cols());
        for (int k = 1; k <= k_max; ++k) {
            power = power * t;
            const Complex tr = power.trace();
            if (std::abs(tr.imag()) > 1e-9 * std::max(1.0, std::abs(tr))) {
                throw PreconditionError("complex_moment", "moments: tr(T^" + std::to_string(k) +
                                                              ") has imaginary part " + std::to_string(tr.imag()));
            }
            mu[static_cast<std::size_t>(k - 1)] = tr.real();
        }
        return mu;
    }

    const auto &kraus = c.kraus();
    const auto m = static_cast<std::uint64_t>(kraus.size());
    std::uint64_t count = 1;
    for (int k = 0; k < k_max; ++k) {
        if (count > kKrausMomentBudget / std::max<std::uint64_t>(m, 1)) {
            count = kKrausMomentBudget + 1;
            break;
        }
        count *= m;
    }
    if (count > kKrausMomentBudget) {
        throw PreconditionError("kraus_budget", "moments: " + std::to_string(m) + "^" + std::to_string(k_max) +
                                                    " Kraus products exceed the budget; use the superop method");
    }
    // Depth-first over prefixes; each prefix of length k contributes to mu_k.
    const int d = c.dim();
    std::vector<ComplexMatrix> prefix(static_cast<std::size_t>(k_max) + 1);
    prefix[0] = ComplexMatrix::Identity(d, d);
    std::vector<std::size_t> index(static_cast<std::size_t>(k_max) + 1, 0);
    int depth = 1;
    index[1] = 0;
    while (depth >= 1) {
        const auto du = static_cast<std::size_t>(depth);
        if (index[du] >= kraus.size()) {
            --depth;
            if (depth >= 1) {
                ++index[static_cast<std::size_t>(depth)];
            }
            continue;
        }
        prefix[du] = prefix[du - 1] * kraus[index[du]];
        mu[du - 1] += std::norm(prefix[du].trace());
        if (depth < k_max) {
            ++depth;
            index[static_cast<std::size_t>(depth)] = 0;
        } else {
            ++index[du];
        }
    }
    return mu;
}

ComplexMatrix fixed_point_of(const ComplexMatrix &superop, int d, Complex eigenvalue) {
    const ComplexMatrix shifted = superop - eigenvalue * ComplexMatrix::Identity(superop.rows(), superop.cols());
    Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullV);
    const Eigen::Index last = svd.singularValues().size() - 1;
    ComplexMatrix x = unvec(svd.matrixV().col(last), d);
    Complex phase_ref = x.trace();
    if (std::abs(phase_ref) < 1e-12) {
        Eigen::Index row = 0, col = 0;
        x.cwiseAbs().maxCoeff(&row, &col);
        phase_ref = x(row, col);
    }
    x *= std::conj(phase_ref) / std::abs(phase_ref);
    x = (x + x.adjoint()).eval() / 2.0;
    const double tr = x.trace().real();
    if (std::abs(tr) > 1e-300) {
        x /= tr;
    }
    return x;
}

namespace {

struct EpsilonStep {
    ComplexMatrix normalized;  // trace-preserving T'
    double rho = 0.0;
    SpectrumMultiset spectrum_eps;
};

EpsilonStep normalize_at(const ComplexMatrix &t, int d, double epsilon) {
    const ComplexVector id = vec(ComplexMatrix::Identity(d, d));
    const ComplexMatrix t_eps = t + epsilon * id * id.transpose();

    Eigen::ComplexEigenSolver<ComplexMatrix> eig(t_eps, /*computeEigenvectors=*/true);
    if (eig.info() != Eigen::Success) {
        throw NumericalError("normalize_trace_preserving: eigen-decomposition failed");
    }
    // The Perron root is real and equals the spectral radius, so it has the
    // largest real part among all eigenvalues.
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < eig.eigenvalues().size(); ++i) {
        if (eig.eigenvalues()(i).real() > eig.eigenvalues()(best).real()) {
            best = i;
        }
    }
    double rho = eig.eigenvalues()(best).real();

    // Refine the fixed point by shifted inverse power iteration.
    ComplexVector x = eig.eigenvectors().col(best).normalized();
    const double shift = rho * (1.0 + 1e-12) + 1e-15;
    Eigen::PartialPivLU<ComplexMatrix> lu(t_eps - shift * ComplexMatrix::Identity(t.rows(), t.cols()));
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
        ComplexVector y = lu.solve(x);
        if (!y.allFinite() || y.norm() == 0.0) {
            break;
        }
        y.normalize();
        // Undo the arbitrary phase before measuring the increment.
        const Complex overlap = x.dot(y);
        if (std::abs(overlap) > 0.0) {
            y *= std::conj(overlap) / std::abs(overlap);
        }
        const double step = (y - x).norm();
        x = y;
        if (step < 1e-13) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw NumericalError("normalize_trace_preserving: fixed-point iteration did not converge");
    }
    const Complex rayleigh = x.dot(t_eps * x) / x.squaredNorm();
    rho = rayleigh.real();

    ComplexMatrix p = unvec(x, d);
    const Complex tr = p.trace();
    p *= std::conj(tr) / std::abs(tr);
    p = (p + p.adjoint()).eval() / 2.0;
    p /= p.trace().real();

    const ComplexMatrix root = matrix_sqrt_psd(p, false);
    const ComplexMatrix inv_root = matrix_sqrt_psd(p, true);
    // X -> Q T_eps(R X R) Q / rho, then the Hilbert-Schmidt adjoint.
    const ComplexMatrix unital = kron(inv_root, inv_root.conjugate()) * t_eps * kron(root, root.conjugate()) / rho;
    EpsilonStep out;
    out.normalized = unital.adjoint();
    out.rho = rho;
    const auto &ev = eig.eigenvalues();
    out.spectrum_eps = SpectrumMultiset(std::vector<Complex>(ev.data(), ev.data() + ev.size()));
    return out;
}

}  // namespace

TraceNormalization normalize_trace_preserving(const ComplexMatrix &superop, double epsilon) {
    if (superop.rows() != superop.cols()) {
        throw PreconditionError("not_square", "normalize_trace_preserving: superoperator must be square");
    }
    require_finite(superop, "normalize_trace_preserving");
    if (!(epsilon > 0.0)) {
        throw PreconditionError("bad_epsilon", "normalize_trace_preserving: epsilon must be positive");
    }
    const int d = square_root_dim(superop.rows(), "normalize_trace_preserving");
    const ComplexMatrix choi = superop_to_choi(superop, d);
    const double scale = std::max(1.0, choi.norm());
    if (op_norm(ComplexMatrix(choi - choi.adjoint())) > tol::kPsd * scale) {
        throw PreconditionError("not_hermiticity_preserving",
                                "normalize_trace_preserving: input map is not Hermiticity-preserving");
    }
    if (eig_multiset(superop).spectral_radius() < 1e-12) {
        throw PreconditionError("zero_spectral_radius", "normalize_trace_preserving: spectral radius below 1e-12");
    }

    const EpsilonStep at_eps = normalize_at(superop, d, epsilon);
    const EpsilonStep at_2eps = normalize_at(superop, d, 2.0 * epsilon);

    auto normalized_spec = eig_multiset(at_eps.normalized).scaled(at_eps.rho);
    if (!multiset_match(at_eps.spectrum_eps, normalized_spec, 1e-6 * std::max(1.0, at_eps.rho)).matched) {
        throw NumericalError("normalize_trace_preserving: similarity check spec(T_eps) = rho * spec(T') failed");
    }

    TraceNormalization result{Channel::from_superop(at_eps.normalized), 0.0, 0.0, 0.0, epsilon};
    result.spectral_radius_eps = at_eps.rho;
    result.spectral_radius = 2.0 * at_eps.rho - at_2eps.rho;
    result.limit_error_estimate = std::abs(at_eps.rho - at_2eps.rho);
    return result;
}

namespace {

// Orthonormal basis (columns) of the span of the given columns.
ComplexMatrix orthonormal_span(const ComplexMatrix &columns, double rel_tol) {
    if (columns.cols() == 0) {
        return ComplexMatrix(columns.rows(), 0);
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(columns, Eigen::ComputeThinU);
    const auto &sv = svd.singularValues();
    const double cutoff = rel_tol * std::max(1.0, sv(0));
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) {
        ++rank;
    }
    return svd.matrixU().leftCols(rank);
}

// Smallest n with span{K_j1 ... K_jn} = M_d, or -1 if the span sequence
// becomes periodic or the bound is exceeded first.
int kraus_span_length(const std::vector<ComplexMatrix> &kraus, int d, int bound) {
    const Eigen::Index full = static_cast<Eigen::Index>(d) * d;
    ComplexMatrix gen(full, static_cast<Eigen::Index>(kraus.size()));
    for (std::size_t j = 0; j < kraus.size(); ++j) {
        gen.col(static_cast<Eigen::Index>(j)) = vec(kraus[j]);
    }
    std::vector<ComplexMatrix> left;  // K_j (x) 1 acting on vec
    for (const auto &k : kraus) {
        left.push_back(kron(k, ComplexMatrix::Identity(d, d)));
    }
    ComplexMatrix basis = orthonormal_span(gen, 1e-10);
    std::vector<ComplexMatrix> history;
    for (int n = 1; n <= std::max(bound, 1); ++n) {
        if (basis.cols() == full) {
            return n;
        }
        ComplexMatrix projector = basis * basis.adjoint();
        for (const auto &prev : history) {
            if ((prev - projector).norm() < 1e-8) {
                return -1;
            }
        }
        history.push_back(std::move(projector));
        ComplexMatrix next(full, basis.cols() * static_cast<Eigen::Index>(left.size()));
        for (std::size_t j = 0; j < left.size(); ++j) {
            next.middleCols(static_cast<Eigen::Index>(j) * basis.cols(), basis.cols()) = left[j] * basis;
        }
        basis = orthonormal_span(next, 1e-10);
    }
    return basis.cols() == full ? bound + 1 : -1;
}

}  // namespace

PrimitivityCertificate is_primitive(const Channel &c) {
    const auto report = verify(c);
    if (!report.cptp(1e-8)) {
        throw PreconditionError("not_cptp", "is_primitive: input is not a quantum channel");
    }
    const int d = c.dim();
    const ComplexMatrix &t = c.superop();
    PrimitivityCertificate cert;
    cert.wielandt_bound = (d * d - 2) * (d * d - 1);

    const auto spectrum = eig_multiset(t);
    for (const auto &lambda : spectrum) {
        if (std::abs(lambda) >= 1.0 - 1e-8) {
            ++cert.peripheral_count;
        }
    }
    const ComplexMatrix fp = fixed_point_of(t, d, 1.0);
    const auto fp_eig = herm_eigensystem(fp, 1e-6);
    cert.fixed_point_min_eigenvalue = fp_eig.values(0);
    cert.spectral = cert.peripheral_count == 1 && cert.fixed_point_min_eigenvalue > 1e-10;

    if (d == 1) {
        cert.span_length = 1;
    } else {
        cert.span_length = kraus_span_length(c.kraus(), d, cert.wielandt_bound);
    }
    cert.kraus_span = cert.span_length >= 1 && cert.span_length <= std::max(cert.wielandt_bound, 1);

    if (cert.spectral != cert.kraus_span) {
        throw NumericalError("is_primitive: spectral and Kraus-span certificates disagree (numerically degenerate "
                             "near the primitivity boundary)");
    }
    cert.primitive = cert.spectral;
    return cert;
}

bool is_irreducible(const Channel &c) {
    const int d = c.dim();
    const ComplexMatrix &t = c.superop();
    const auto spectrum = eig_multiset(t);
    const double radius = spectrum.spectral_radius();
    if (radius <= 0.0) {
        return false;
    }
    // Among peripheral eigenvalues, the Perron root has the largest real part.
    std::optional<Complex> top;
    for (const auto &lambda : spectrum) {
        if (std::abs(lambda) >= radius * (1.0 - 1e-8) && (!top || lambda.real() > top->real())) {
            top = lambda;
        }
    }
    std::size_t occurrences = 0;
    for (const auto &lambda : spectrum) {
        if (std::abs(lambda - *top) <= 1e-8) {
            ++occurrences;
        }
    }
    if (occurrences != 1) {
        return false;
    }
    const ComplexMatrix fp = fixed_point_of(t, d, *top);
    const auto eig = herm_eigensystem(fp, 1e-6);
    return eig.values(0) > 1e-10 || eig.values(eig.values.size() - 1) < -1e-10;
}

RealMatrix stochastic_submatrix(const Channel &c) {
    const int d = c.dim();
    const ComplexMatrix &t = c.superop();
    RealMatrix s(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            s(i, j) = t(i * d + i, j * d + j).real();
        }
    }
    return s;
}

Channel random_channel(int d, int m, std::uint64_t seed) {
    if (d < 2 || m < 1) {
        throw PreconditionError("bad_dimension", "random_channel: need d >= 2 and m >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
    std::vector<ComplexMatrix> g(static_cast<std::size_t>(m), ComplexMatrix(d, d));
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (auto &k : g) {
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                const double re = normal(rng);
                const double im = normal(rng);
                k(i, j) = Complex(re, im);
            }
        }
        h += k.adjoint() * k;
    }
    const ComplexMatrix inv_root = matrix_sqrt_psd(h, true);
    for (auto &k : g) {
        k = k * inv_root;
    }
    return Channel::from_kraus(std::move(g));
}

}  // namespace chanspec
