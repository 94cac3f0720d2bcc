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

#include <chrono>
#include <cmath>
#include <numbers>

#include "dualis/equivalence.hpp"
#include "dualis/error.hpp"
#include "dualis/ising.hpp"
#include "oracles.hpp"

using namespace dualis;

namespace {

const double kStar = 0.5 * std::log(1.0 + std::numbers::sqrt2);

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Io;
}

HermitianOperator two_by_two_hamiltonian() {
    // -J sum s_i s_j over the 8 torus bonds of a 2x2 lattice, as a diagonal operator
    const auto hist = enumerate_energies(IsingLattice(2, 2, 1.0));
    std::vector<double> e;
    for (std::uint64_t c = 0; c < 16; ++c) {
        auto s = [&](int i) { return ((c >> i) & 1) ? -1.0 : 1.0; };
        // right and down neighbours with wrap, each counted twice on a 2-wide torus
        const double bonds = 2 * (s(0) * s(1) + s(2) * s(3)) + 2 * (s(0) * s(2) + s(1) * s(3));
        e.push_back(-bonds);
    }
    return HermitianOperator::diagonal(e);
}

}  // namespace

TEST(Lattice, Contract) {
    EXPECT_EQ(code_of([] { IsingLattice(1, 2, 1.0, Boundary::Open); }), ErrorCode::Unsupported);
    EXPECT_EQ(code_of([] { IsingLattice(6, 5, 1.0); }), ErrorCode::TooLarge);
    EXPECT_EQ(code_of([] { IsingLattice(2, 2, 0.0); }), ErrorCode::DomainError);
    EXPECT_EQ(IsingLattice(3, 4, 1.0).bond_count(), 24);
}

TEST(Histogram, TwoByTwo) {
    const auto h = enumerate_energies(IsingLattice(2, 2, 1.0));
    std::map<double, std::uint64_t> got;
    for (std::size_t i = 0; i < h.energies.size(); ++i)
        if (h.counts[i]) got[h.energies[i]] = h.counts[i];
    EXPECT_EQ(got, (std::map<double, std::uint64_t>{{-8, 2}, {0, 12}, {8, 2}}));
}

TEST(Histogram, OneByTwoSumsToFour) {
    const auto h = enumerate_energies(IsingLattice(1, 2, 1.0));
    std::uint64_t total = 0;
    for (auto c : h.counts) total += c;
    EXPECT_EQ(total, 4u);
}

TEST(Histogram, SpinFlipSymmetricAndComplete) {
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c) {
            const auto h = enumerate_energies(IsingLattice(r, c, 1.0));
            std::uint64_t total = 0;
            for (auto x : h.counts) total += x;
            EXPECT_EQ(total, std::uint64_t{1} << (r * c));
            for (auto x : h.counts) EXPECT_EQ(x % 2, 0u);
        }
}

TEST(PartitionFunction, MatchesBruteForce) {
    for (int r = 1; r <= 3; ++r)
        for (int c = 2; c <= 4; ++c)
            for (double k : {0.1, 0.3, kStar, 0.9}) {
                const double want = oracle::brute_force_z(r, c, k);
                EXPECT_NEAR(partition_function(enumerate_energies(IsingLattice(r, c, 1.0)), k), want, 1e-10 * want)
                    << r << "x" << c << " K=" << k;
            }
}

TEST(PartitionFunction, Examples) {
    const auto h = enumerate_energies(IsingLattice(2, 2, 1.0));
    const double z = partition_function(h, 0.4406868);
    EXPECT_NEAR(z, 2 * std::exp(8 * 0.4406868) + 12 + 2 * std::exp(-8 * 0.4406868), 1e-10);
    // 2e^{3.5255} + 12 + 2e^{-3.5255} evaluates to 80.0000; the often-quoted 80.06 is an arithmetic slip
    EXPECT_NEAR(z, 80.0000035, 1e-6);
    EXPECT_NEAR(partition_function(h, 1e-12), 16.0, 1e-9);
    EXPECT_NEAR(partition_function(h, 3.0) / (2 * std::exp(8 * 3.0)), 1.0, 0.01);
    const IsingLattice lat(2, 2, 2.0);
    EXPECT_NEAR(partition_function(lat, ThermalPoint::from_beta(lat, 0.25)), partition_function(h, 0.5), 1e-12);
}

TEST(DualCoupling, ValuesAndInvolution) {
    EXPECT_NEAR(dual_coupling(0.5), 0.385968, 1e-6);
    EXPECT_NEAR(dual_coupling(0.5), -0.5 * std::log(std::tanh(0.5)), 1e-15);
    for (double k = 0.05; k < 3.0; k += 0.05) {
        EXPECT_NEAR(dual_coupling(dual_coupling(k)), k, 1e-12);
        EXPECT_LT(dual_coupling(k + 0.01), dual_coupling(k));
    }
}

TEST(DualCoupling, SelfDualPoint) {
    // fixed-point iteration on the averaged map, independent of the library's search
    double k = 0.3;
    for (int i = 0; i < 200; ++i) k = 0.5 * (k + -0.5 * std::log(std::tanh(k)));
    EXPECT_NEAR(self_dual_coupling(), k, 1e-10);
    EXPECT_NEAR(self_dual_coupling(), kStar, 1e-10);
    EXPECT_NEAR(self_dual_coupling(), 0.4406868, 1e-7);
    EXPECT_NEAR(std::sinh(2 * self_dual_coupling()), 1.0, 1e-12);
}

TEST(KwResidual, SelfDualCollapse) {
    for (int l = 2; l <= 4; ++l) {
        const auto r = kw_relation_residual(enumerate_energies(IsingLattice(l, l, 1.0)), self_dual_coupling());
        EXPECT_LE(r.residual_z, 1e-9);
        EXPECT_NEAR(r.residual_z, std::abs(std::pow(std::sinh(2 * self_dual_coupling()), l * l) - 1), 1e-9);
    }
}

TEST(KwResidual, FreeEnergyTrendAtPointThree) {
    double prev = INFINITY;
    for (int l = 2; l <= 5; ++l) {
        const auto r = kw_relation_residual(enumerate_energies(IsingLattice(l, l, 1.0)), 0.3);
        EXPECT_TRUE(std::isfinite(r.residual_f) && std::isfinite(r.residual_z));
        EXPECT_LT(r.residual_f, prev) << l;
        prev = r.residual_f;
    }
}

TEST(KwResidual, AgreesWithBruteForce) {
    const int n = 9;
    const double k = 0.3, kd = dual_coupling(k);
    // beta f = -ln Z / N on each side
    const double want = std::abs(-std::log(oracle::brute_force_z(3, 3, kd)) / n +
                                 std::log(oracle::brute_force_z(3, 3, k)) / n - std::log(std::sinh(2 * k)));
    EXPECT_NEAR(kw_relation_residual(enumerate_energies(IsingLattice(3, 3, 1.0)), k).residual_f, want, 1e-12);
}

TEST(KwMap, ScalingAndTemperature) {
    const auto self = kw_duality_map(4, 1.0, kStar);
    EXPECT_NEAR(self.map.scaling().evaluate(HermitianOperator::diagonal(std::vector<double>{1, 2, 3, 4})), 1.0, 1e-12);
    const auto half = kw_duality_map(4, 1.0, 0.5);
    EXPECT_NEAR(half.map.scaling().evaluate(HermitianOperator::diagonal(std::vector<double>{1, 2, 3, 4})), 0.771937,
                1e-6);
    EXPECT_NEAR(half.temperature(0.5), dual_coupling(0.5), 1e-15);
}

TEST(KwMap, PassesMapAxioms) {
    const auto h = two_by_two_hamiltonian();
    const auto kw = kw_duality_map(16, 1.0, 0.5);
    EXPECT_TRUE(verify_spectral_axiom(kw.map, h, 1e-8).pass);
    EXPECT_TRUE(verify_thermal_axiom(kw.map, h, default_charge_grid(), 1e-8).pass);
    const std::vector<MixtureTerm> terms{{0.4, h}, {0.6, HermitianOperator::diagonal(std::vector<double>(16, 1.0))}};
    EXPECT_TRUE(verify_convexity_identity(kw.map, terms, 1e-8).pass);
    EXPECT_TRUE(verify_born_rule(kw.map, StateMap::uniform(1), h, DensityState::maximally_mixed(16), 1e-10).pass);
}

TEST(Gibbs, BothSignsReported) {
    const auto two = HermitianOperator::diagonal(std::vector<double>{-1, 1});
    const auto g = gibbs_state_map_check(1.0, 0.5, two, 1);
    EXPECT_NEAR(g.exponent_plus, -g.exponent_minus, 1e-15);
    EXPECT_NEAR(g.exponent_plus, -dual_coupling(0.5) / 0.5, 1e-12);
    EXPECT_LE(g.distance_minus, 1e-12);
    EXPECT_GT(g.distance_plus, 0.1);
    EXPECT_EQ(g.chosen_distance, g.distance_plus);

    const auto self = gibbs_state_map_check(1.0, kStar, two_by_two_hamiltonian(), -1);
    EXPECT_LE(self.distance_minus, 1e-12);
    EXPECT_EQ(self.chosen_distance, self.distance_minus);
}

TEST(Expansion, Regimes) {
    const auto h3 = enumerate_energies(IsingLattice(3, 3, 1.0));
    EXPECT_NEAR(expansion_leading_terms(2.0, 9, ExpansionRegime::Low) / partition_function(h3, 2.0), 1.0, 0.01);
    EXPECT_NEAR(expansion_leading_terms(0.1, 9, ExpansionRegime::High) / partition_function(h3, 0.1), 1.0, 0.01);
    const auto h4 = enumerate_energies(IsingLattice(4, 4, 1.0));
    EXPECT_NEAR(expansion_leading_terms(2.0, 16, ExpansionRegime::Low) / partition_function(h4, 2.0), 1.0, 0.05);
    EXPECT_NEAR(expansion_leading_terms(0.1, 16, ExpansionRegime::High) / partition_function(h4, 0.1), 1.0, 0.05);
    EXPECT_EQ(code_of([] { expansion_leading_terms(0.44, 9, ExpansionRegime::Low); }), ErrorCode::RegimeViolation);
    EXPECT_EQ(code_of([] { expansion_leading_terms(0.44, 9, ExpansionRegime::High); }), ErrorCode::RegimeViolation);
}

TEST(Enumeration, FiveByFiveIsQuick) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto h = enumerate_energies(IsingLattice(5, 5, 1.0));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::uint64_t total = 0;
    for (auto c : h.counts) total += c;
    EXPECT_EQ(total, std::uint64_t{1} << 25);
    EXPECT_LT(secs, 30.0);
}
