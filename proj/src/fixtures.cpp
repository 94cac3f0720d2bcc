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


#include "dualis/fixtures.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "dualis/error.hpp"

namespace dualis {

namespace {

json spectrum_json(const Spectrum& s) { return std::vector<double>(s.values().begin(), s.values().end()); }

HermitianOperator diag(std::vector<double> v) { return HermitianOperator::diagonal(v); }

HermitianOperator sigma_y() {
    return HermitianOperator(ComplexMatrix(2, 2, {cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)}));
}

json opscore_fixture(std::uint64_t seed) {
    json j;
    j["seed"] = seed;
    j["eig_identity"] = spectrum_json(spectrum(diag({1, 1})));
    j["eig_pauli_z"] = spectrum_json(spectrum(diag({1, -1})));
    j["entropy_pure"] = von_neumann_entropy(DensityState(diag({1, 0})));
    j["entropy_half"] = von_neumann_entropy(DensityState::maximally_mixed(2));
    j["entropy_quarter"] = von_neumann_entropy(DensityState(diag({0.25, 0.75})));
    j["expm_diag01_minus1"] = spectrum_json(spectrum(expm_hermitian(diag({0, 1}), -1.0)));
    const HermitianOperator d13 = diag({1, -3});
    j["norms_diag_1_m3"] = {operator_norm(d13), trace_norm(d13)};
    j["block_embed_sigma_y_conj"] = to_json(block_embed(sigma_y(), 0, 1).matrix());
    j["random_unitary_3"] = to_json(random_unitary(3, seed));
    j["random_hermitian_4_spectrum"] = spectrum_json(spectrum(random_hermitian(4, seed + 1)));
    j["random_state_3_entropy"] = von_neumann_entropy(random_state(3, seed + 2));
    return j;
}

json duality_fixture(std::uint64_t seed) {
    json j;
    const DualityMap conj(2, 0, 1, ComplexMatrix::identity(2), ScalingFunction::constant(1.0));
    j["conj_sigma_y"] = to_json(apply_map(conj, sigma_y()).matrix());
    const DualityMap both(2, 1, 1, ComplexMatrix::identity(4), ScalingFunction::constant(2.0));
    j["block_scale_diag13"] = spectrum_json(spectrum(apply_map(both, diag({1, 3}))));
    const DualityMap flip(2, 1, 0, ComplexMatrix::identity(2), ScalingFunction::constant(-1.0));
    j["sign_flip_spectrum"] = spectrum_json(spectrum(apply_map(flip, diag({0, 1}))));

    Rng rng(seed);
    const DualityMap phi = DualityMap::random(3, 1, 1, rng, ScalingFunction::constant(1.5));
    j["random_map"] = to_json(phi);
    const HermitianOperator a = random_hermitian(3, rng);
    j["random_map_image_spectrum"] = spectrum_json(spectrum(apply_map(phi, a)));

    const DualityMap cc = compose_exact(conj, conj);
    j["compose_conj_conj_arity"] = {cc.p(), cc.q()};
    const DualityMap two(2, 1, 0, ComplexMatrix::identity(2), ScalingFunction::constant(2.0));
    const DualityMap three(2, 1, 0, ComplexMatrix::identity(2), ScalingFunction::constant(3.0));
    j["compose_constants_f"] = compose_exact(three, two).scaling().evaluate(diag({1, 0}));

    const DualityMap doubled(2, 2, 0, ComplexMatrix::identity(4), ScalingFunction::constant(1.0));
    const DensityState pure(diag({1, 0}));
    j["state_map_entropy_p2_pure"] = von_neumann_entropy(apply_state_map(doubled, StateMap::uniform(2), pure));
    j["kw_f_jbeta_0.5"] = ScalingFunction::kramers_wannier(1.0, 0.5).evaluate(diag({1, -1}));
    return j;
}

json equivalence_fixture(std::uint64_t seed) {
    json j;
    const std::vector<double> one{1.0};
    const HermitianOperator a = diag({0, 1});
    const DualityMap id = DualityMap::identity(2);
    const CheckReport t1 = verify_thermal_axiom(id, a, one, 1e-12);
    j["thermal_identity"] = {t1.lhs, t1.rhs};
    const DualityMap pq(2, 1, 1, ComplexMatrix::identity(4), ScalingFunction::constant(1.0));
    const CheckReport t2 = verify_thermal_axiom(pq, a, one, 1e-12);
    j["thermal_p1q1"] = {t2.lhs, t2.rhs};

    const Spectrum s123(std::vector<double>{1, 2, 3});
    j["power_sums_123"] = to_json(power_sums(s123, 3));
    j["power_sums_123_doubled"] = to_json(power_sums(spectrum(block_embed(diag({1, 2, 3}), 1, 1)), 3));
    PowerSumSequence ps;
    ps.sums = {6, 14, 36};
    j["reconstruct_6_14_36"] = spectrum_json(reconstruct_spectrum(ps, 3));
    ps.sums = {0, 2, 0, 2};
    j["reconstruct_0_2_0_2"] = spectrum_json(reconstruct_spectrum(ps, 2));

    j["peel_stages"] = {
        verify_peel_linf(Spectrum({1, 2}), Spectrum({1, 1, 2, 2}), 1.0, 2, 1, 16).stage,
        verify_peel_linf(Spectrum({1, 2}), Spectrum({1, 1, 2, -2}), 1.0, 2, 1, 16).stage,
        verify_peel_linf(Spectrum({2, 4}), Spectrum({1, 2}), 0.5, 1, 1, 16).stage,
    };

    const DualityMap e2(2, 2, 0, ComplexMatrix::identity(4), ScalingFunction::constant(0.5));
    const std::vector<DensityState> half{DensityState::maximally_mixed(2)};
    j["entropic_offset_alpha2_half"] =
        verify_entropic_axioms(e2, StateMap::uniform(2), half, 1e-10).states.at(0).offset_measured;
    const DualityMap e3(2, 3, 0, ComplexMatrix::identity(6), ScalingFunction::constant(1.0 / 3.0));
    const std::vector<DensityState> pure{DensityState(diag({1, 0}))};
    j["entropic_offset_alpha3_pure"] =
        verify_entropic_axioms(e3, StateMap::uniform(3), pure, 1e-10).states.at(0).offset_measured;

    const std::vector<MixtureState> ortho{{0.5, DensityState(diag({1, 0}))}, {0.5, DensityState(diag({0, 1}))}};
    j["mixture_orthogonal"] = mixture_entropy_residual(ortho);
    const std::vector<MixtureState> same{{0.5, DensityState::maximally_mixed(2)}, {0.5, DensityState::maximally_mixed(2)}};
    j["mixture_identical_half"] = mixture_entropy_residual(same);

    const WignerSample w = sample_wigner_extension(3, 1, 1, seed);
    j["wigner_p1q1_offset"] = w.report.offset_measured;
    return j;
}

json approx_fixture(std::uint64_t seed) {
    json j;
    const DualityMap id = DualityMap::identity(2);
    AdditivePerturbation shift{AdditivePerturbation::Kind::Shift, 0, 0.01, 0.0};
    const ApproxDuality sh = ApproxDuality::additive(id, shift, ErrorWeight::constant(1.0), 0.0, 0.0);
    j["defect_shift_0.01"] = defect(sh, diag({1, 2}));

    const DualityMap one(1, 1, 0, ComplexMatrix::identity(1), ScalingFunction::constant(1.0));
    const DualityMap four(1, 1, 0, ComplexMatrix::identity(1), ScalingFunction::constant(4.0));
    const BoundReport sim = similar_map_bound(one, four, diag({1}));
    j["similar_scalar"] = {sim.lhs, sim.rhs};
    const BoundReport two = same_map_two_inputs_bound(id, diag({1, 0}), diag({0, 1}));
    j["two_inputs"] = {two.lhs, two.rhs};

    AdditivePerturbation none{AdditivePerturbation::Kind::Random, 1, 0.0, 0.0};
    auto p1 = std::make_shared<const ApproxDuality>(
        ApproxDuality::additive(id, none, ErrorWeight::constant(1.0), 0.0, 0.0, 0, std::nullopt, 0.01));
    auto p2 = std::make_shared<const ApproxDuality>(
        ApproxDuality::additive(id, none, ErrorWeight::constant(1.0), 0.0, 0.0, 0, std::nullopt, 0.02));
    const ApproxDuality c = compose_approx(p2, p1);
    j["composed_epsilon"] = c.epsilon();
    j["composed_k_unit_norm"] = c.weight().evaluate(diag({1, -1}));

    AdditivePerturbation down{AdditivePerturbation::Kind::Shift, 0, -0.02, 0.0};
    const ApproxDuality dn = ApproxDuality::additive(id, down, ErrorWeight::constant(1.0), 0.0, 0.0);
    j["partition_uniform_shift"] = partition_bound(dn, diag({0.3, -0.5}), 1.0, 100.0).lhs;

    Rng rng(seed);
    const DualityMap phi = DualityMap::random(2, 1, 1, rng, ScalingFunction::constant(1.2));
    AdditivePerturbation rnd{AdditivePerturbation::Kind::Random, rng.next(), 0.03, 0.0};
    const ApproxDuality ar = ApproxDuality::additive(phi, rnd, ErrorWeight::constant(1.0), 0.0, 0.0);
    const HermitianOperator h = random_hermitian(2, rng);
    j["random_defect"] = defect(ar, h);
    j["random_dynamics_t2"] = dynamics_bound(ar, StateMap::uniform(1), h, random_state(2, rng), 2.0).lhs;
    return j;
}

json ising_fixture(std::uint64_t seed) {
    json j;
    j["seed"] = seed;
    const EnergyHistogram h22 = enumerate_energies(IsingLattice(2, 2, 1.0));
    j["hist_2x2"] = to_json(h22);
    j["hist_1x2"] = to_json(enumerate_energies(IsingLattice(1, 2, 1.0)));
    j["z_2x2_K0.4406868"] = partition_function(h22, 0.4406868);
    j["dual_coupling_0.5"] = dual_coupling(0.5);
    j["self_dual"] = self_dual_coupling();
    std::vector<double> trend;
    for (int l = 2; l <= 5; ++l) trend.push_back(kw_relation_residual(enumerate_energies(IsingLattice(l, l, 1.0)), 0.3).residual_f);
    j["residual_f_K0.3_2to5"] = trend;
    const EnergyHistogram h44 = enumerate_energies(IsingLattice(4, 4, 1.0));
    j["residual_z_4x4_kstar"] = kw_relation_residual(h44, 0.5 * std::log(1.0 + std::numbers::sqrt2)).residual_z;
    j["residual_z_4x4_K0.4406868"] = kw_relation_residual(h44, 0.4406868).residual_z;
    j["kw_temperature_J1_beta0.5"] = kw_duality_map(2, 1.0, 0.5).temperature(0.5);

    const HermitianOperator two = diag({-1, 1});
    const GibbsMapReport g = gibbs_state_map_check(1.0, 0.5, two, 1);
    j["gibbs_two_level_K0.5"] = {{"plus", g.distance_plus}, {"minus", g.distance_minus}};
    const GibbsMapReport gs = gibbs_state_map_check(1.0, 0.5 * std::log(1.0 + std::numbers::sqrt2), two, -1);
    j["gibbs_two_level_kstar"] = {{"plus", gs.distance_plus}, {"minus", gs.distance_minus}};

    const EnergyHistogram h33 = enumerate_energies(IsingLattice(3, 3, 1.0));
    j["expansion_3x3_low_K2"] = {expansion_leading_terms(2.0, 9, ExpansionRegime::Low), partition_function(h33, 2.0)};
    j["expansion_3x3_high_K0.1"] = {expansion_leading_terms(0.1, 9, ExpansionRegime::High),
                                    partition_function(h33, 0.1)};
    return j;
}

void compare(const json& want, const json& got, const std::string& path, std::vector<std::string>& out) {
    if (want.is_number() && got.is_number()) {
        const double a = want.get<double>(), b = got.get<double>();
        if (!(std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}))) {
            std::ostringstream s;
            s.precision(17);
            s << path << ": expected " << a << ", got " << b;
            out.push_back(s.str());
        }
        return;
    }
    if (want.type() != got.type()) {
        out.push_back(path + ": expected " + want.dump() + ", got " + got.dump());
        return;
    }
    if (want.is_object()) {
        for (auto it = want.begin(); it != want.end(); ++it) {
            if (!got.contains(it.key())) {
                out.push_back(path + "/" + it.key() + ": missing from recomputation");
                continue;
            }
            compare(it.value(), got.at(it.key()), path + "/" + it.key(), out);
        }
        for (auto it = got.begin(); it != got.end(); ++it)
            if (!want.contains(it.key())) out.push_back(path + "/" + it.key() + ": not in fixture");
        return;
    }
    if (want.is_array()) {
        if (want.size() != got.size()) {
            out.push_back(path + ": expected " + std::to_string(want.size()) + " entries, got " +
                          std::to_string(got.size()));
            return;
        }
        for (std::size_t i = 0; i < want.size(); ++i) compare(want[i], got[i], path + "/" + std::to_string(i), out);
        return;
    }
    if (want != got) out.push_back(path + ": expected " + want.dump() + ", got " + got.dump());
}

}  // namespace

std::map<std::string, json> generate_fixtures(std::uint64_t seed) {
    return {{"opscore.json", opscore_fixture(seed)},
            {"duality.json", duality_fixture(seed)},
            {"equivalence.json", equivalence_fixture(seed)},
            {"approx.json", approx_fixture(seed)},
            {"ising.json", ising_fixture(seed)}};
}

void write_fixtures(const std::string& dir, std::uint64_t seed) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create " + dir + ": " + ec.message());
    for (const auto& [name, value] : generate_fixtures(seed)) {
        const auto path = std::filesystem::path(dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
        out << dump_json(value);
        if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
    }
}

std::vector<std::string> check_fixtures(const std::string& dir, std::uint64_t seed) {
    if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::Io, "fixtures directory " + dir + " not found");
    std::vector<std::string> out;
    for (const auto& [name, value] : generate_fixtures(seed)) {
        const auto path = std::filesystem::path(dir) / name;
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error(ErrorCode::Io, "missing fixture " + path.string());
        std::stringstream buf;
        buf << in.rdbuf();
        compare(parse_json(buf.str()), value, name, out);
    }
    return out;
}

}  // namespace dualis
