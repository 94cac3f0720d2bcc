// Copyright 2026 The Dualis Authors
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


#include <gtest/gtest.h>

#include <cmath>

#include "dualis/error.hpp"
#include "dualis/opscore.hpp"
#include "oracles.hpp"

using namespace dualis;

namespace {

HermitianOperator diag(std::vector<double> v) { return HermitianOperator::diagonal(v); }

double max_diff(std::span<const double> a, std::span<const double> b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

TEST(Eig, IdentityHasUnitSpectrumAndVectors) {
    const auto e = eig_hermitian(diag({1, 1}));
    EXPECT_EQ(e.values[0], 1.0);
    EXPECT_EQ(e.values[1], 1.0);
    EXPECT_LE(max_abs_diff(e.vectors, ComplexMatrix::identity(2)), 1e-15);
}

TEST(Eig, PauliZSorted) {
    const auto s = spectrum(diag({1, -1}));
    EXPECT_EQ(s[0], -1.0);
    EXPECT_EQ(s[1], 1.0);
}

TEST(Eig, MatchesSturmBisection) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto a = random_hermitian(6, seed);
        const auto want = oracle::bisection_eigenvalues(a.matrix());
        EXPECT_LE(max_diff(spectrum(a).values(), want), 1e-8) << "seed " << seed;
    }
}

TEST(Eig, ReconstructsInput) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 16;
        const auto a = random_hermitian(n, rng);
        const auto e = eig_hermitian(a);
        const ComplexMatrix back = e.vectors * ComplexMatrix::diagonal(e.values.values()) * e.vectors.adjoint();
        EXPECT_LE(max_abs_diff(back, a.matrix()), 1e-9 * std::max(1.0, operator_norm(a))) << "n " << n;
    }
}

TEST(Eig, RejectsNonHermitian) {
    ComplexMatrix m(2, 2, {cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(0, 0)});
    try {
        HermitianOperator h(m);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
    }
}

TEST(Expm, ZeroTimeIsIdentity) {
    const auto a = random_hermitian(4, 3);
    EXPECT_LE(max_abs_diff(expm_hermitian(a, 0.0).matrix(), ComplexMatrix::identity(4)), 1e-14);
}

TEST(Expm, DiagonalExample) {
    const auto e = expm_hermitian(diag({0, 1}), -1.0);
    EXPECT_NEAR(e.matrix()(0, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(e.matrix()(1, 1).real(), std::exp(-1.0), 1e-15);
}

TEST(Expm, MatchesTaylorSeries) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto a = random_hermitian(4, seed);
        const auto want = oracle::taylor_expm(a.matrix(), 0.1);
        EXPECT_LE(max_abs_diff(expm_hermitian(a, 0.1).matrix(), want), 1e-10);
    }
}

TEST(Expm, GroupLawOnCommutingArguments) {
    const auto a = random_hermitian(5, 9);
    const ComplexMatrix lhs = expm_hermitian(a, 0.3).matrix() * expm_hermitian(a, -0.8).matrix();
    EXPECT_LE(max_abs_diff(lhs, expm_hermitian(a, -0.5).matrix()), 1e-9);
}

TEST(Entropy, Examples) {
    EXPECT_NEAR(von_neumann_entropy(DensityState(diag({1, 0}))), 0.0, 1e-15);
    EXPECT_NEAR(von_neumann_entropy(DensityState::maximally_mixed(2)), 0.693147, 1e-6);
    EXPECT_NEAR(von_neumann_entropy(DensityState(diag({0.25, 0.75}))), 0.562335, 1e-6);
    EXPECT_NEAR(von_neumann_entropy(DensityState(diag({0.25, 0.75}))), oracle::entropy_of({0.25, 0.75}), 1e-14);
}

TEST(Entropy, UnitaryInvariance) {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto rho = random_state(4, rng);
        const auto u = random_unitary(4, rng);
        const DensityState rotated(HermitianOperator::hermitian_part(u * rho.matrix() * u.adjoint()));
        EXPECT_NEAR(von_neumann_entropy(rotated), von_neumann_entropy(rho), 1e-10);
    }
}

TEST(Entropy, RejectsNonStates) {
    EXPECT_THROW(DensityState(diag({0.5, 0.6})), Error);
    EXPECT_THROW(DensityState(diag({1.5, -0.5})), Error);
}

TEST(Norms, Examples) {
    EXPECT_DOUBLE_EQ(operator_norm(diag({1, -3})), 3.0);
    EXPECT_DOUBLE_EQ(trace_norm(diag({1, -3})), 4.0);
    EXPECT_EQ(operator_norm(HermitianOperator::zero(3)), 0.0);
    EXPECT_EQ(trace_norm(HermitianOperator::zero(3)), 0.0);
}

TEST(Norms, TraceNormIsAbsoluteEigenvalueSum) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto a = random_hermitian(5, seed);
        double want = 0;
        for (double x : oracle::bisection_eigenvalues(a.matrix())) want += std::abs(x);
        EXPECT_NEAR(trace_norm(a), want, 1e-10 * std::max(1.0, want));
    }
}

TEST(Random, OneByOneIsAPhase) {
    const auto u = random_unitary(1, 42);
    EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-14);
}

TEST(Random, SameSeedSameMatrix) {
    EXPECT_EQ(random_unitary(4, 17), random_unitary(4, 17));
    EXPECT_EQ(random_hermitian(4, 17).matrix(), random_hermitian(4, 17).matrix());
    EXPECT_EQ(random_state(4, 17).matrix(), random_state(4, 17).matrix());
}

TEST(Random, HaarSecondMoment) {
    Rng rng(2026);
    double mean = 0;
    for (int i = 0; i < 1000; ++i) mean += std::norm(random_unitary(4, rng)(0, 0));
    mean /= 1000;
    EXPECT_NEAR(mean, 0.25, 0.02);
}

TEST(Random, UnitaryAndStateContracts) {
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        EXPECT_TRUE(is_unitary(random_unitary(5, rng), 1e-12));
        const auto rho = random_state(5, rng);
        EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
        EXPECT_GE(spectrum(rho.op()).min(), -1e-12);
    }
}

TEST(BlockEmbed, Examples) {
    const auto a = random_hermitian(3, 4);
    EXPECT_EQ(block_embed(a, 1, 0).matrix(), a.matrix());
    const auto d = block_embed(diag({1, 2}), 1, 1);
    const std::vector<double> want{1, 2, 1, 2};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(d.matrix()(i, i).real(), want[i]);
    ComplexMatrix sy(2, 2, {cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)});
    const auto c = block_embed(HermitianOperator(sy), 0, 1);
    EXPECT_LE(max_abs_diff(c.matrix(), sy * cplx(-1, 0)), 0.0);
    EXPECT_NEAR(spectrum(c)[0], -1.0, 1e-15);
}

TEST(BlockEmbed, SpectrumRepeats) {
    Rng rng(3);
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) {
            if (p + q == 0) continue;
            const auto a = random_hermitian(3, rng);
            const auto s = spectrum(a);
            std::vector<double> want;
            for (double x : s.values())
                for (int r = 0; r < p + q; ++r) want.push_back(x);
            EXPECT_LE(max_diff(spectrum(block_embed(a, p, q)).values(), want), 1e-10);
        }
}

TEST(BlockEmbed, RejectsEmptyArity) {
    try {
        block_embed(diag({1}), 0, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArity);
    }
}
