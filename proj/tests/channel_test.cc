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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "chanspec/errors.h"
#include "chanspec/nonneg.h"

namespace chanspec {
namespace {

ComplexMatrix pauli_x() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    return m;
}

Channel depolarizing() {
    std::vector<ComplexMatrix> kraus;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            ComplexMatrix k = ComplexMatrix::Zero(2, 2);
            k(i, j) = std::sqrt(0.5);
            kraus.push_back(k);
        }
    }
    return Channel::from_kraus(kraus);
}

Channel transpose_map() {
    ComplexMatrix t = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            t(j * 2 + i, i * 2 + j) = 1.0;
        }
    }
    return Channel::from_superop(t);
}

ComplexMatrix swap4() {
    ComplexMatrix s = ComplexMatrix::Zero(4, 4);
    s(0, 0) = s(3, 3) = 1.0;
    s(1, 2) = s(2, 1) = 1.0;
    return s;
}

TEST(Vec, RowMajor) {
    ComplexMatrix x(2, 2);
    x << 1.0, 2.0, 3.0, 4.0;
    const ComplexVector v = vec(x);
    EXPECT_EQ(v(1), Complex(2.0));
    EXPECT_EQ(v(2), Complex(3.0));
    EXPECT_EQ(unvec(v, 2), x);
}

TEST(ConvertRepr, IdentityChannel) {
    const Channel id = identity_channel(2);
    EXPECT_LE((id.superop() - ComplexMatrix::Identity(4, 4)).norm(), 1e-15);
    ComplexVector omega = ComplexVector::Zero(4);
    omega(0) = omega(3) = 1.0;
    EXPECT_LE((id.choi() - omega * omega.adjoint()).norm(), 1e-15);
}

TEST(ConvertRepr, DepolarizingChoi) {
    EXPECT_LE((depolarizing().choi() - ComplexMatrix::Identity(4, 4) / 2.0).norm(), 1e-15);
}

TEST(ConvertRepr, TransposeChoiIsSwap) {
    const Channel t = transpose_map();
    EXPECT_LE((t.choi() - swap4()).norm(), 1e-15);
    try {
        (void)t.kraus();
        FAIL() << "Kraus extraction of a non-CP map must fail";
    } catch (const PreconditionError &e) {
        EXPECT_EQ(e.reason(), "not_cp");
    }
}

TEST(ConvertRepr, RoundTripsRandomChannel) {
    const Channel c = random_channel(3, 3, 11);
    for (const Repr r : {Repr::kraus, Repr::superop, Repr::choi}) {
        const Channel converted = convert_repr(c, r);
        EXPECT_EQ(converted.native_repr(), r);
        EXPECT_LE((converted.superop() - c.superop()).norm(), 1e-12);
        EXPECT_LE((converted.choi() - c.choi()).norm(), 1e-12);
        EXPECT_LE((Channel::from_kraus(converted.kraus()).superop() - c.superop()).norm(), 1e-10);
    }
}

TEST(ConvertRepr, KrausConjugationFormula) {
    const Channel c = random_channel(2, 2, 5);
    ComplexMatrix x(2, 2);
    x << 0.3, Complex(0.1, 0.2), Complex(-0.4, 0.0), 0.7;
    ComplexMatrix direct = ComplexMatrix::Zero(2, 2);
    for (const auto &k : c.kraus()) {
        direct += k * x * k.adjoint();
    }
    EXPECT_LE((c.apply(x) - direct).norm(), 1e-14);
    EXPECT_LE((unvec(c.superop() * vec(x), 2) - direct).norm(), 1e-14);
}

TEST(Verify, IdentityChannel) {
    const auto r = verify(identity_channel(2));
    EXPECT_NEAR(r.trace_preserving_error, 0.0, 1e-15);
    EXPECT_NEAR(r.unital_error, 0.0, 1e-15);
    EXPECT_NEAR(r.cp_margin, 0.0, 1e-15);
    EXPECT_NEAR(r.spectral_radius, 1.0, 1e-15);
    EXPECT_TRUE(r.cptp(1e-9));
}

TEST(Verify, TransposeMap) {
    const auto r = verify(transpose_map());
    EXPECT_NEAR(r.cp_margin, -1.0, 1e-14);
    EXPECT_NEAR(r.trace_preserving_error, 0.0, 1e-15);
    EXPECT_FALSE(r.cptp(1e-9));
}

TEST(Verify, NonTracePreservingKraus) {
    ComplexMatrix k = ComplexMatrix::Zero(2, 2);
    k(0, 0) = 1.0;
    k(1, 1) = 0.5;
    EXPECT_NEAR(verify(Channel::from_kraus({k})).trace_preserving_error, 0.75, 1e-15);
}

TEST(Moments, IdentityIsDSquared) {
    for (int d = 2; d <= 3; ++d) {
        for (const double mu : moments(identity_channel(d), 5)) {
            EXPECT_NEAR(mu, d * d, 1e-12);
        }
    }
}

TEST(Moments, TransposeConjugatedByYIsNegative) {
    // rho -> Y^dag rho^T Y with Y = [[0, 1], [-1, 0]]
    ComplexMatrix y(2, 2);
    y << 0.0, 1.0, -1.0, 0.0;
    const ComplexMatrix conj_y = kron(y.adjoint(), y.transpose());
    const Channel c = Channel::from_superop(conj_y * transpose_map().superop());
    EXPECT_NEAR(moments(c, 1)[0], -2.0, 1e-14);
}

TEST(Moments, KrausAgreesWithSuperop) {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        const int d = 2 + static_cast<int>(seed % 2);
        const Channel c = random_channel(d, 1 + static_cast<int>(seed % 4), seed);
        const auto a = moments(c, 4);
        const auto b = moments(c, 4, MomentMethod::kraus);
        for (int k = 0; k < 4; ++k) {
            EXPECT_NEAR(a[k], b[k], 1e-8 * std::max(1.0, std::abs(a[k])));
        }
    }
}

TEST(Moments, NonnegativeForChannels) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        for (const double mu : moments(random_channel(3, 1 + static_cast<int>(seed % 5), 100 + seed), 12)) {
            EXPECT_GE(mu, -1e-8);
        }
    }
}

TEST(Moments, KrausBudget) {
    const Channel c = random_channel(3, 9, 1);
    EXPECT_THROW(moments(c, 8, MomentMethod::kraus), PreconditionError);
}

TEST(NormalizeTracePreserving, AlreadyChannel) {
    const Channel c = random_channel(2, 3, 3);
    const auto n = normalize_trace_preserving(c.superop());
    EXPECT_NEAR(n.spectral_radius, 1.0, 1e-6);
    EXPECT_TRUE(multiset_match(eig_multiset(n.channel.superop()), eig_multiset(c.superop()), 1e-6).matched);
}

TEST(NormalizeTracePreserving, Scaled) {
    const Channel c = random_channel(2, 2, 4);
    const auto n = normalize_trace_preserving(2.0 * c.superop());
    EXPECT_NEAR(n.spectral_radius, 2.0, 1e-6);
    EXPECT_TRUE(multiset_match(eig_multiset(n.channel.superop()), eig_multiset(c.superop()), 1e-6).matched);
    EXPECT_TRUE(verify(n.channel).trace_preserving(1e-8));
}

TEST(NormalizeTracePreserving, DiagonalConjugation) {
    ComplexMatrix k = ComplexMatrix::Zero(2, 2);
    k(0, 0) = 1.0;
    k(1, 1) = 0.5;
    const auto n = normalize_trace_preserving(Channel::from_kraus({k}).superop());
    EXPECT_NEAR(n.spectral_radius, 1.0, 1e-6);
    EXPECT_TRUE(multiset_match(eig_multiset(n.channel.superop()), {1.0, 0.5, 0.5, 0.25}, 1e-6).matched);
    EXPECT_LE(n.limit_error_estimate, 1e-6);
}

TEST(IsPrimitive, Depolarizing) {
    const auto cert = is_primitive(depolarizing());
    EXPECT_TRUE(cert.primitive);
    EXPECT_TRUE(cert.spectral);
    EXPECT_TRUE(cert.kraus_span);
    EXPECT_EQ(cert.wielandt_bound, 6);
}

TEST(IsPrimitive, PauliXConjugation) {
    const auto cert = is_primitive(unitary_channel(pauli_x()));
    EXPECT_FALSE(cert.primitive);
    EXPECT_FALSE(cert.kraus_span);
    EXPECT_EQ(cert.peripheral_count, 4u);
}

TEST(IsPrimitive, RejectsNonChannel) {
    EXPECT_THROW(is_primitive(transpose_map()), PreconditionError);
}

TEST(IsIrreducible, Cases) {
    EXPECT_TRUE(is_irreducible(depolarizing()));
    std::vector<ComplexMatrix> pinch(2, ComplexMatrix::Zero(2, 2));
    pinch[0](0, 0) = 1.0;
    pinch[1](1, 1) = 1.0;
    EXPECT_FALSE(is_irreducible(Channel::from_kraus(pinch)));
    RealMatrix flip(2, 2);
    flip << 0, 1, 1, 0;
    const Channel lifted = lift_to_channel(flip);
    EXPECT_TRUE(is_irreducible(lifted));
    EXPECT_FALSE(is_primitive(lifted).primitive);
}

TEST(StochasticSubmatrix, Cases) {
    EXPECT_LE((stochastic_submatrix(identity_channel(3)) - RealMatrix::Identity(3, 3)).norm(), 0.0);
    EXPECT_LE((stochastic_submatrix(depolarizing()) - RealMatrix::Constant(2, 2, 0.5)).norm(), 1e-15);
    RealMatrix s(3, 3);
    s << 0.2, 0.5, 0.0, 0.3, 0.5, 0.1, 0.5, 0.0, 0.9;
    EXPECT_EQ(stochastic_submatrix(lift_to_channel(s)), s);
}

TEST(StochasticSubmatrix, ColumnStochasticForChannels) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const RealMatrix s = stochastic_submatrix(random_channel(3, 2, 200 + seed));
        EXPECT_GE(s.minCoeff(), 0.0);
        EXPECT_LE((s.colwise().sum().array() - 1.0).abs().maxCoeff(), 1e-9);
    }
}

TEST(RandomChannel, Valid) {
    const auto r = verify(random_channel(2, 4, 42));
    EXPECT_GE(r.cp_margin, 0.0);
    EXPECT_TRUE(r.cptp(1e-9));
}

TEST(RandomChannel, SingleKrausIsUnitary) {
    const Channel c = random_channel(2, 1, 7);
    const auto &k = c.kraus();
    ASSERT_EQ(k.size(), 1u);
    EXPECT_LE((k[0] * k[0].adjoint() - ComplexMatrix::Identity(2, 2)).norm(), 1e-10);
}

TEST(RandomChannel, Deterministic) {
    EXPECT_EQ(random_channel(3, 2, 99).superop(), random_channel(3, 2, 99).superop());
    EXPECT_NE(random_channel(3, 2, 99).superop(), random_channel(3, 2, 100).superop());
}

TEST(RandomChannel, NecessarySpectralConditions) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Channel c = random_channel(2 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 4), 300 + seed);
        const auto spectrum = eig_multiset(c.superop());
        double to_one = 1e300;
        for (const auto &z : spectrum) {
            to_one = std::min(to_one, std::abs(z - 1.0));
        }
        EXPECT_LE(to_one, 1e-9);
        EXPECT_TRUE(spectrum.conjugation_closed());
        EXPECT_LE(spectrum.spectral_radius(), 1.0 + 1e-9);
    }
}

TEST(FixedPoint, DepolarizingIsMaximallyMixed) {
    const ComplexMatrix p = fixed_point_of(depolarizing().superop(), 2, 1.0);
    EXPECT_LE((p - ComplexMatrix::Identity(2, 2) / 2.0).norm(), 1e-12);
}

}  // namespace
}  // namespace chanspec
