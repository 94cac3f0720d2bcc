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
#include <memory>

#include "dualis/approx.hpp"
#include "dualis/error.hpp"

using namespace dualis;

namespace {

HermitianOperator diag(std::vector<double> v) { return HermitianOperator::diagonal(v); }

AdditivePerturbation random_term(std::uint64_t seed, double s, double floor = 0.0) {
    return {AdditivePerturbation::Kind::Random, seed, s, floor};
}

AdditivePerturbation shift(double s) { return {AdditivePerturbation::Kind::Shift, 0, s, 0.0}; }

ApproxDuality plain(const DualityMap& phi, AdditivePerturbation pert, double eta = 0.0, std::size_t ancilla = 0) {
    return ApproxDuality::additive(phi, pert, ErrorWeight::constant(1.0), eta, 0.0, ancilla);
}

}  // namespace

TEST(Defect, ExactMapHasNoDefect) {
    Rng rng(1);
    const auto phi = DualityMap::random(3, 1, 1, rng, ScalingFunction::constant(1.4));
    EXPECT_LE(defect(plain(phi, random_term(2, 0.0)), random_hermitian(3, rng)), 1e-15);
}

TEST(Defect, EqualsInjectedNorm) {
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        const auto phi = DualityMap::random(2, 1, t % 2, rng, ScalingFunction::constant(1.0));
        EXPECT_NEAR(defect(plain(phi, random_term(rng.next(), 0.01)), random_hermitian(2, rng)), 0.01, 1e-12);
    }
}

TEST(Defect, JunkOffTheSubspaceIsInvisible) {
    Rng rng(3);
    const auto phi = DualityMap::random(2, 1, 1, rng, ScalingFunction::constant(1.0));
    const auto a = random_hermitian(2, rng);
    const auto bare = plain(phi, random_term(9, 0.02));
    const auto junked = ApproxDuality::additive(phi, random_term(9, 0.02, 5.0), ErrorWeight::constant(1.0), 0.0, 0.0, 3);
    EXPECT_EQ(junked.target_dim(), phi.m() + 3);
    EXPECT_NEAR(defect(junked, a), defect(bare, a), 1e-12);
    EXPECT_TRUE(defect_audit(junked, a).pass);
}

TEST(Weight, NormScaled) {
    const auto k = ErrorWeight::norm_scaled(2.0);
    EXPECT_EQ(k.evaluate(diag({0.5, -0.2})), 2.0);
    EXPECT_EQ(k.evaluate(diag({3, -1})), 6.0);
}

TEST(SimilarMaps, Examples) {
    Rng rng(4);
    const auto phi = DualityMap::random(2, 1, 1, rng, ScalingFunction::constant(1.5));
    const auto same = similar_map_bound(phi, phi, random_hermitian(2, rng));
    EXPECT_NEAR(same.lhs, 0.0, 1e-14);
    EXPECT_NEAR(same.rhs, 0.0, 1e-14);

    const DualityMap one(1, 1, 0, ComplexMatrix::identity(1), ScalingFunction::constant(1));
    const DualityMap four(1, 1, 0, ComplexMatrix::identity(1), ScalingFunction::constant(4));
    const auto r = similar_map_bound(one, four, diag({1}));
    EXPECT_DOUBLE_EQ(r.lhs, 3.0);
    EXPECT_DOUBLE_EQ(r.rhs, 3.0);
    EXPECT_TRUE(r.pass);
}

TEST(SimilarMaps, RandomPairsHoldAndNegativeScalingRejected) {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto a = DualityMap::random(2, 1, 1, rng, ScalingFunction::constant(0.2 + rng.uniform()));
        const auto b = DualityMap::random(2, 1, 1, rng, ScalingFunction::constant(0.2 + 3 * rng.uniform()));
        EXPECT_TRUE(similar_map_bound(a, b, random_hermitian(2, rng)).pass) << t;
    }
    const DualityMap neg(1, 1, 0, ComplexMatrix::identity(1), ScalingFunction::constant(-1));
    try {
        similar_map_bound(neg, neg, diag({1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NegativeScaling);
    }
}

TEST(TwoInputs, Example) {
    const auto r = same_map_two_inputs_bound(DualityMap::identity(2), diag({1, 0}), diag({0, 1}));
    EXPECT_DOUBLE_EQ(r.lhs, 1.0);
    EXPECT_DOUBLE_EQ(r.rhs, 1.0);
    EXPECT_TRUE(r.pass);
}

TEST(Compose, EpsilonAddsAndExactStaysExact) {
    const auto id = DualityMap::identity(2);
    auto e1 = std::make_shared<const ApproxDuality>(plain(id, random_term(1, 0.0)));
    auto e2 = std::make_shared<const ApproxDuality>(plain(id, random_term(2, 0.0)));
    const auto exact = compose_approx(e2, e1);
    EXPECT_EQ(exact.epsilon(), 0.0);
    EXPECT_EQ(exact.eta(), 0.0);

    auto a1 = std::make_shared<const ApproxDuality>(plain(id, random_term(3, 0.01)));
    auto a2 = std::make_shared<const ApproxDuality>(plain(id, random_term(4, 0.02)));
    const auto c = compose_approx(a2, a1);
    EXPECT_EQ(c.epsilon(), 0.01 + 0.02);
    EXPECT_TRUE(c.is_composed());
}

TEST(Compose, WeightFormulaExample) {
    const auto id = DualityMap::identity(2);
    AdditivePerturbation none = random_term(1, 0.0);
    auto p1 = std::make_shared<const ApproxDuality>(
        ApproxDuality::additive(id, none, ErrorWeight::constant(1), 0, 0, 0, std::nullopt, 0.01));
    auto p2 = std::make_shared<const ApproxDuality>(
        ApproxDuality::additive(id, none, ErrorWeight::constant(1), 0, 0, 0, std::nullopt, 0.02));
    EXPECT_DOUBLE_EQ(compose_approx(p2, p1).weight().evaluate(diag({1, -1})), 2.0);
}

TEST(Compose, DefectWithinComposedBound) {
    Rng rng(6);
    for (int t = 0; t < 40; ++t) {
        const auto inner_exact = DualityMap::random(2, 1, t % 2, rng, ScalingFunction::constant(0.5 + rng.uniform()));
        const auto outer_exact =
            DualityMap::random(inner_exact.m(), 1, 0, rng, ScalingFunction::constant(0.5 + rng.uniform()));
        const double s1 = t % 2 ? 0.01 : 0.05, s2 = 0.03;
        auto in = std::make_shared<const ApproxDuality>(ApproxDuality::additive(
            inner_exact, random_term(rng.next(), s1), ErrorWeight::norm_scaled(1), 0, 0));
        auto out = std::make_shared<const ApproxDuality>(
            ApproxDuality::additive(outer_exact, random_term(rng.next(), s2), ErrorWeight::constant(1), 0, 0));
        const auto c = compose_approx(out, in);
        const auto a = random_hermitian(2, rng);
        EXPECT_TRUE(defect_audit(c, a).pass) << t;
        EXPECT_LE(defect(c, a), c.weight().evaluate(a) * (s1 + s2) + 1e-12);
    }
}

TEST(Compose, ShapeMismatch) {
    auto a = std::make_shared<const ApproxDuality>(plain(DualityMap::identity(2), random_term(1, 0.01)));
    auto b = std::make_shared<const ApproxDuality>(plain(DualityMap::identity(3), random_term(1, 0.01)));
    try {
        compose_approx(a, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimMismatch);
    }
}

TEST(Eigenvalues, Examples) {
    Rng rng(7);
    const auto phi = DualityMap::random(2, 1, 1, rng, ScalingFunction::constant(1.0));
    const auto a = random_hermitian(2, rng);
    for (const auto& r : eigenvalue_bound(plain(phi, random_term(1, 0.0)), a)) EXPECT_LE(r.lhs, 1e-13);

    const auto up = eigenvalue_bound(plain(phi, shift(0.05)), a);
    for (const auto& r : up) {
        EXPECT_NEAR(r.lhs, 0.05, 1e-12);
        EXPECT_TRUE(r.pass);
    }
    for (int t = 0; t < 20; ++t)
        for (const auto& r : eigenvalue_bound(plain(phi, random_term(rng.next(), 0.03)), random_hermitian(2, rng))) {
            EXPECT_LE(r.lhs, 0.03 + 1e-12);
            EXPECT_TRUE(r.pass);
        }
}

TEST(Partition, Examples) {
    const auto id = DualityMap::identity(2);
    const auto h = diag({0.3, -0.5});
    EXPECT_NEAR(partition_bound(plain(id, random_term(1, 0.0)), h, 1.0, 100.0).lhs, 0.0, 1e-15);

    const auto down = partition_bound(plain(id, shift(-0.02)), h, 1.0, 100.0);
    EXPECT_NEAR(down.lhs, std::expm1(0.02), 1e-12);
    EXPECT_NEAR(down.lhs, 0.0202, 1e-4);
    EXPECT_TRUE(down.pass);

    const auto hot = partition_bound(plain(id, random_term(5, 0.03)), h, 1e-8, 100.0);
    EXPECT_LE(hot.lhs, 1e-7);
}

TEST(Partition, JunkAboveFloorStaysInsideTail) {
    Rng rng(8);
    for (int t = 0; t < 30; ++t) {
        const auto phi = DualityMap::random(2, 1, 1, rng, ScalingFunction::constant(1.0));
        const double floor = 2.0 + 3 * rng.uniform();
        const auto approx = ApproxDuality::additive(phi, random_term(rng.next(), 0.05, floor), ErrorWeight::constant(1),
                                                    0, 0, 2);
        const auto r = partition_bound(approx, random_hermitian(2, rng), 1.0, floor);
        EXPECT_TRUE(r.pass) << t;
    }
}

TEST(Dynamics, Examples) {
    Rng rng(9);
    const auto phi = DualityMap::random(2, 1, 0, rng, ScalingFunction::constant(1.0));
    const auto h = random_hermitian(2, rng);
    const auto rho = random_state(2, rng);
    const auto w = StateMap::uniform(1);
    EXPECT_NEAR(dynamics_bound(plain(phi, random_term(1, 0.01)), w, h, rho, 0.0).lhs, 0.0, 1e-15);

    const auto slack = dynamics_bound(plain(phi, random_term(1, 0.0), 0.1), w, h, rho, 1.0);
    EXPECT_LE(slack.lhs, 1e-12);
    EXPECT_TRUE(slack.pass);

    for (int t = 0; t < 20; ++t) {
        const auto r = dynamics_bound(plain(phi, random_term(rng.next(), 0.01)), w, h, rho, 2.0);
        EXPECT_LE(r.lhs, 0.04 + 1e-12);
        EXPECT_TRUE(r.pass);
    }
}

TEST(Dynamics, PassesAcrossTimeGrid) {
    Rng rng(10);
    const auto phi = DualityMap::random(2, 2, 1, rng, ScalingFunction::constant(1.3));
    const auto approx = plain(phi, random_term(3, 0.05));
    const auto h = random_hermitian(2, rng);
    const auto rho = random_state(2, rng);
    double prev_rhs = -1;
    for (int i = 0; i <= 8; ++i) {
        const auto r = dynamics_bound(approx, StateMap::uniform(2), h, rho, 0.5 * i);
        EXPECT_TRUE(r.pass) << i;
        EXPECT_GE(r.rhs, prev_rhs);
        prev_rhs = r.rhs;
    }
}

TEST(Dynamics, UnencodedTargetRejected) {
    const auto approx = ApproxDuality::additive(DualityMap::identity(2), random_term(1, 0.01),
                                                ErrorWeight::constant(1), 0, 0, 2);
    const DensityState outside(diag({0, 0, 1, 0}));
    try {
        dynamics_bound(approx, diag({1, 2}), outside, 1.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnencodedState);
    }
}
