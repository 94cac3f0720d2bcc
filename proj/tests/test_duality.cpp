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
#include <numbers>

#include "dualis/duality.hpp"
#include "dualis/error.hpp"
#include "oracles.hpp"

using namespace dualis;

namespace {

HermitianOperator diag(std::vector<double> v) { return HermitianOperator::diagonal(v); }

HermitianOperator sigma_y() {
    return HermitianOperator(ComplexMatrix(2, 2, {cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)}));
}

DualityMap trivial(std::size_t n, int p, int q, double f) {
    return DualityMap(n, p, q, ComplexMatrix::identity(n * (p + q)), ScalingFunction::constant(f));
}

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Io;  // sentinel: nothing thrown
}

}  // namespace

TEST(ApplyMap, IdentityDuality) {
    const auto a = random_hermitian(3, 1);
    EXPECT_LE(max_abs_diff(apply_map(DualityMap::identity(3), a).matrix(), a.matrix()), 1e-15);
}

TEST(ApplyMap, ConjugationFlipsSigmaY) {
    const auto img = apply_map(trivial(2, 0, 1, 1.0), sigma_y());
    EXPECT_LE(max_abs_diff(img.matrix(), sigma_y().matrix() * cplx(-1, 0)), 0.0);
}

TEST(ApplyMap, BlockEmbedThenScale) {
    const auto img = apply_map(trivial(2, 1, 1, 2.0), diag({1, 3}));
    const std::vector<double> want{2, 6, 2, 6};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(img.matrix()(i, i).real(), want[i]);
}

TEST(ApplyMap, ZeroMapsToZero) {
    Rng rng(1);
    const auto phi = DualityMap::random(3, 2, 1, rng, ScalingFunction::kramers_wannier(1.0, 0.7));
    EXPECT_TRUE(apply_map(phi, HermitianOperator::zero(3)).is_zero());
}

TEST(Spectral, IdentityHasZeroDeviation) {
    const auto r = verify_spectral_axiom(DualityMap::identity(4), random_hermitian(4, 2), 1e-12);
    EXPECT_TRUE(r.pass);
    EXPECT_LE(r.deviation, 1e-15);
}

TEST(Spectral, SignFlip) {
    const auto phi = trivial(2, 2, 0, -1.0);
    EXPECT_TRUE(verify_spectral_axiom(phi, diag({0, 1}), 1e-12).pass);
    const auto s = spectrum(apply_map(phi, diag({0, 1})));
    EXPECT_EQ(s[0], -1.0);
    EXPECT_EQ(s[1], -1.0);
    EXPECT_EQ(s[3], 0.0);
}

TEST(Spectral, NonUnitaryConjugatorIsCaught) {
    Rng rng(3);
    int caught = 0;
    for (int t = 0; t < 20; ++t) {
        const auto u = random_unitary(4, rng);
        const auto e = random_hermitian(4, rng);
        const ComplexMatrix w = u + e.matrix() * cplx(0.01 / operator_norm(e), 0);
        const auto a = random_hermitian(2, rng);
        if (!spectral_relation(spectrum(a), apply_with_conjugator(w, 1, 1, 1.0, a), 1.0, 2, 1e-9).pass) ++caught;
    }
    EXPECT_EQ(caught, 20);
}

TEST(Spectral, RandomMapsProperty) {
    Rng rng(100);
    for (int seed = 0; seed < 100; ++seed) {
        const std::size_t n = 1 + seed % 6;
        const int p = seed % 3, q = (seed / 3) % 2 + (p == 0 ? 1 : 0);
        const int qq = std::min(q, 3 - p);
        const auto phi = DualityMap::random(n, p, qq, rng, ScalingFunction::constant(0.5 + rng.uniform()));
        EXPECT_TRUE(verify_spectral_axiom(phi, random_hermitian(n, rng), 1e-9).pass) << seed;
    }
}

TEST(Spectral, SortedPairingConstantAlongPath) {
    Rng rng(44);
    const auto phi = DualityMap::random(3, 1, 1, rng, ScalingFunction::constant(1.7));
    const auto a0 = random_hermitian(3, rng), a1 = random_hermitian(3, rng);
    for (int i = 0; i < 20; ++i) {
        const double s = i / 19.0;
        const auto a = (1 - s) * a0 + s * a1;
        const auto src = spectrum(a);
        const auto img = spectrum(apply_map(phi, a));
        for (std::size_t k = 0; k < img.size(); ++k) EXPECT_NEAR(img[k] / 1.7, src[k / 2], 1e-9);
    }
}

TEST(Construction, Errors) {
    EXPECT_EQ(code_of([] { DualityMap(2, 0, 0, ComplexMatrix::identity(2), ScalingFunction::constant(1)); }),
              ErrorCode::InvalidArity);
    EXPECT_EQ(code_of([] { DualityMap(2, -1, 2, ComplexMatrix::identity(2), ScalingFunction::constant(1)); }),
              ErrorCode::InvalidArity);
    EXPECT_EQ(code_of([] { DualityMap(2, 1, 1, ComplexMatrix::identity(3), ScalingFunction::constant(1)); }),
              ErrorCode::DimMismatch);
    EXPECT_EQ(code_of([] {
                  ComplexMatrix u = ComplexMatrix::identity(2);
                  u(0, 1) = 0.01;
                  DualityMap(2, 1, 0, u, ScalingFunction::constant(1));
              }),
              ErrorCode::NotUnitary);
    EXPECT_EQ(code_of([] { ScalingFunction::kramers_wannier(-1.0, 1.0); }), ErrorCode::DomainError);
    EXPECT_EQ(code_of([] { StateMap({0.5, 0.6}); }), ErrorCode::InvalidDistribution);
    EXPECT_EQ(code_of([] { StateMap::uniform(0); }), ErrorCode::NoUnitaryBlocks);
}

TEST(Scaling, TableLookupAndMiss) {
    const auto f = ScalingFunction::table({{{1, 2}, 3.0}}, 0.5);
    EXPECT_EQ(f.evaluate(diag({2, 1})), 3.0);
    EXPECT_EQ(code_of([&] { f.evaluate(diag({1, 3})); }), ErrorCode::ScalingUndefined);
    EXPECT_EQ(f.lipschitz(), 0.5);
}

TEST(Scaling, KramersWannierValues) {
    const auto f = ScalingFunction::kramers_wannier(1.0, 0.5);
    EXPECT_NEAR(f.evaluate(diag({1, -1})), 0.771937, 1e-6);
    EXPECT_NEAR(f.evaluate(diag({1, -1})), -std::log(std::tanh(0.5)), 1e-15);
    const double kstar = 0.5 * std::log(1 + std::numbers::sqrt2);
    EXPECT_NEAR(ScalingFunction::kramers_wannier(1.0, kstar).evaluate(diag({1})), 1.0, 1e-12);
}

TEST(Convexity, SingleTerm) {
    const MixtureTerm t{1.0, random_hermitian(3, 5)};
    Rng rng(5);
    EXPECT_TRUE(verify_convexity_identity(DualityMap::random(3, 1, 1, rng, ScalingFunction::constant(2)), {&t, 1},
                                          1e-10)
                    .pass);
}

TEST(Convexity, RandomMixtures) {
    Rng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto phi = DualityMap::random(n, 1 + trial % 2, trial % 2, rng, ScalingFunction::constant(1.3));
        std::vector<MixtureTerm> terms;
        const int k = 1 + trial % 4;
        double total = 0;
        for (int i = 0; i < k; ++i) {
            const double w = 0.1 + rng.uniform();
            total += w;
            terms.push_back({w, random_hermitian(n, rng)});
        }
        for (auto& t : terms) t.weight /= total;
        EXPECT_TRUE(verify_convexity_identity(phi, terms, 1e-8).pass) << trial;
    }
}

TEST(Convexity, KramersWannierCommutingTerms) {
    const DualityMap phi(2, 1, 0, ComplexMatrix::identity(2), ScalingFunction::kramers_wannier(1.0, 0.5));
    const std::vector<MixtureTerm> terms{{0.3, diag({1, -2})}, {0.7, diag({0.5, 3})}};
    EXPECT_TRUE(verify_convexity_identity(phi, terms, 1e-8).pass);
}

TEST(Projectors, IdentityAndRandomMaps) {
    EXPECT_TRUE(verify_projector_lemmas(DualityMap::identity(2), 1).pass);
    Rng rng(9);
    EXPECT_TRUE(verify_projector_lemmas(DualityMap::random(6, 2, 1, rng, ScalingFunction::constant(0.7)), 2).pass);
    EXPECT_TRUE(verify_projector_lemmas(DualityMap::random(3, 0, 2, rng, ScalingFunction::constant(-2)), 3).pass);
}

TEST(StateMap, Examples) {
    const auto rho = random_state(3, 1);
    const auto same = apply_state_map(DualityMap::identity(3), StateMap::uniform(1), rho);
    EXPECT_LE(max_abs_diff(same.matrix(), rho.matrix()), 1e-15);

    const DensityState pure(diag({1, 0}));
    const auto doubled = apply_state_map(trivial(2, 2, 0, 1.0), StateMap::uniform(2), pure);
    EXPECT_NEAR(doubled.matrix()(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(doubled.matrix()(2, 2).real(), 0.5, 1e-15);
    EXPECT_NEAR(von_neumann_entropy(doubled), std::log(2.0), 1e-12);

    Rng rng(2);
    const auto phi = DualityMap::random(3, 1, 1, rng, ScalingFunction::constant(1));
    const auto out = apply_state_map(phi, StateMap::uniform(1), rho);
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(out), von_neumann_entropy(rho), 1e-10);
}

TEST(StateMap, EntropyOffsetIsWeightEntropy) {
    Rng rng(12);
    for (int t = 0; t < 30; ++t) {
        const int p = 1 + t % 3;
        const auto phi = DualityMap::random(2 + t % 2, p, t % 2, rng, ScalingFunction::constant(1));
        std::vector<double> w(p);
        double total = 0;
        for (auto& x : w) total += (x = 0.1 + rng.uniform());
        for (auto& x : w) x /= total;
        const auto rho = random_state(phi.n(), rng);
        const auto out = apply_state_map(phi, StateMap(w), rho);
        EXPECT_GE(spectrum(out.op()).min(), -1e-10);
        EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-10);
        EXPECT_NEAR(von_neumann_entropy(out), von_neumann_entropy(rho) + oracle::entropy_of(w), 1e-9);
    }
}

TEST(StateMap, Errors) {
    EXPECT_EQ(code_of([] { apply_state_map(trivial(2, 0, 1, 1), StateMap::uniform(1), DensityState::maximally_mixed(2)); }),
              ErrorCode::NoUnitaryBlocks);
    EXPECT_EQ(code_of([] { apply_state_map(trivial(2, 2, 0, 1), StateMap::uniform(1), DensityState::maximally_mixed(2)); }),
              ErrorCode::DimMismatch);
}

TEST(Born, Examples) {
    const auto a = random_hermitian(3, 3);
    const auto rho = random_state(3, 4);
    const auto id = verify_born_rule(DualityMap::identity(3), StateMap::uniform(1), a, rho, 1e-12);
    EXPECT_TRUE(id.pass);
    EXPECT_NEAR(id.lhs, (a.matrix() * rho.matrix()).trace().real(), 1e-12);

    Rng rng(4);
    EXPECT_TRUE(verify_born_rule(DualityMap::random(3, 2, 0, rng, ScalingFunction::constant(1)), StateMap::uniform(2),
                                 a, rho, 1e-10)
                    .pass);

    const DualityMap kw(2, 1, 0, ComplexMatrix::identity(2), ScalingFunction::kramers_wannier(1.0, 0.5));
    const auto d = diag({1, -1});
    const DensityState r(diag({0.3, 0.7}));
    const auto rep = verify_born_rule(kw, StateMap::uniform(1), d, r, 1e-10);
    EXPECT_TRUE(rep.pass);
    EXPECT_NEAR(rep.lhs, -std::log(std::tanh(0.5)) * (0.3 - 0.7), 1e-12);
}

TEST(TimeDynamics, Examples) {
    Rng rng(7);
    const auto h = random_hermitian(3, rng);
    const auto rho = random_state(3, rng);
    const auto phi = DualityMap::random(3, 2, 1, rng, ScalingFunction::constant(2));
    const auto zero = verify_time_dynamics(phi, StateMap::uniform(2), h, rho, 0.0, 1e-15);
    EXPECT_TRUE(zero.pass);
    EXPECT_EQ(zero.deviation, 0.0);
    EXPECT_TRUE(verify_time_dynamics(DualityMap::identity(3), StateMap::uniform(1), h, rho, 1.3, 1e-9).pass);
    EXPECT_TRUE(verify_time_dynamics(trivial(3, 2, 0, 2.0), StateMap::uniform(2), h, rho, 0.7, 1e-8).pass);
    EXPECT_TRUE(verify_time_dynamics(phi, StateMap({0.2, 0.8}), h, rho, 1.9, 1e-8).pass);
}

TEST(Compose, Examples) {
    const auto id = compose_exact(DualityMap::identity(2), DualityMap::identity(2));
    EXPECT_EQ(id.p(), 1);
    EXPECT_EQ(id.q(), 0);
    EXPECT_LE(max_abs_diff(id.unitary(), ComplexMatrix::identity(2)), 1e-15);

    const auto conj = trivial(2, 0, 1, 1.0);
    const auto cc = compose_exact(conj, conj);
    EXPECT_EQ(cc.p(), 1);
    EXPECT_EQ(cc.q(), 0);
    EXPECT_LE(max_abs_diff(apply_map(cc, sigma_y()).matrix(), sigma_y().matrix()), 1e-15);

    const auto six = compose_exact(trivial(2, 1, 0, 3.0), trivial(2, 1, 0, 2.0));
    EXPECT_EQ(six.scaling().evaluate(diag({1, 2})), 6.0);
}

TEST(Compose, ApplicationEquality) {
    Rng rng(21);
    for (int t = 0; t < 40; ++t) {
        const int p1 = t % 3, q1 = p1 == 0 ? 1 : t % 2;
        const int p2 = (t / 3) % 2, q2 = p2 == 0 ? 1 + t % 2 : (t / 2) % 2;
        const auto inner = DualityMap::random(2, p1, q1, rng, ScalingFunction::constant(0.5 + rng.uniform()));
        const auto outer = DualityMap::random(inner.m(), p2, q2, rng,
                                              t % 2 ? ScalingFunction::constant(2.0)
                                                    : ScalingFunction::kramers_wannier(1.0, 0.3 + rng.uniform()));
        const auto both = compose_exact(outer, inner);
        const auto a = random_hermitian(2, rng);
        const auto want = apply_map(outer, apply_map(inner, a));
        const auto got = apply_map(both, a);
        EXPECT_LE(max_abs_diff(got.matrix(), want.matrix()), 1e-9 * std::max(1.0, operator_norm(want))) << t;
        EXPECT_EQ(both.p() + both.q(), inner.arity() * outer.arity());
    }
}
