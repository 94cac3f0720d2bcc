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


#include "dualis/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "dualis/error.hpp"

namespace dualis {

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::size_t SuiteReport::passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

// ---------------------------------------------------------------------------
// Config

namespace {

[[noreturn]] void bad_config(const std::string& what) { throw Error(ErrorCode::Parse, "config: " + what); }

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t child_seed(std::uint64_t seed, const std::string& label) {
    return splitmix(seed ^ std::stoull(fnv1a_hex(label), nullptr, 16));
}

}  // namespace

SuiteConfig config_from_json(const json& j) {
    if (!j.is_object()) bad_config("must be a JSON object");
    SuiteConfig c;
    try {
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("dims")) {
            for (const auto& d : j.at("dims")) {
                const auto v = d.get<std::int64_t>();
                if (v < 1 || v > 16) bad_config("dims must lie in [1, 16]");
                c.dims.push_back(static_cast<std::size_t>(v));
            }
        }
        if (j.contains("arities")) {
            for (const auto& a : j.at("arities")) {
                if (!a.is_array() || a.size() != 2) bad_config("arities must be [p, q] pairs");
                const int p = a[0].get<int>(), q = a[1].get<int>();
                if (p < 0 || q < 0 || p + q < 1 || p + q > 4) bad_config("arity needs p, q >= 0 and 1 <= p + q <= 4");
                c.arities.emplace_back(p, q);
            }
        }
        if (j.contains("tol")) {
            const double t = j.at("tol").get<double>();
            if (!(t > 0.0) || !std::isfinite(t)) bad_config("tol must be positive");
            c.tol = t;
        }
        if (j.contains("trials")) {
            c.trials = j.at("trials").get<int>();
            if (c.trials < 1 || c.trials > 10000) bad_config("trials must lie in [1, 10000]");
        }
        if (j.contains("K")) {
            for (const auto& k : j.at("K")) {
                const double v = k.get<double>();
                if (!(v > 0.0) || !std::isfinite(v)) bad_config("K values must be positive");
                c.couplings.push_back(v);
            }
        }
        if (j.contains("self_dual")) c.self_dual = j.at("self_dual").get<bool>();
        if (j.contains("lattice")) {
            const auto& l = j.at("lattice");
            if (!l.is_array() || l.size() != 2) bad_config("lattice must be [rows, cols]");
            c.rows = l[0].get<int>();
            c.cols = l[1].get<int>();
            if (c.rows < 1 || c.cols < 1) bad_config("lattice sides must be positive");
        }
        if (j.contains("moments")) c.moments = j.at("moments").get<std::vector<double>>();
        if (j.contains("d")) c.d = j.at("d").get<int>();
        if (j.contains("alpha")) {
            const auto& a = j.at("alpha");
            if (!a.is_array() || a.size() != 2) bad_config("alpha must be [x, y]");
            c.alpha_num = a[0].get<std::int64_t>();
            c.alpha_den = a[1].get<std::int64_t>();
        }
        if (j.contains("map")) c.map = j.at("map");
    } catch (const json::exception& e) {
        bad_config(e.what());
    }
    return c;
}

json to_json(const SuiteConfig& c) {
    json j{{"seed", c.seed}};
    if (!c.dims.empty()) j["dims"] = c.dims;
    if (!c.arities.empty()) {
        json a = json::array();
        for (const auto& [p, q] : c.arities) a.push_back({p, q});
        j["arities"] = a;
    }
    if (c.tol) j["tol"] = *c.tol;
    if (c.trials) j["trials"] = c.trials;
    if (!c.couplings.empty()) j["K"] = c.couplings;
    if (c.self_dual) j["self_dual"] = true;
    j["lattice"] = {c.rows, c.cols};
    if (!c.moments.empty()) {
        j["moments"] = c.moments;
        j["d"] = c.d;
        j["alpha"] = {c.alpha_num, c.alpha_den};
    }
    if (c.map) j["map"] = *c.map;
    return j;
}

// ---------------------------------------------------------------------------
// Helpers shared by the suites

namespace {

struct Outcome {
    double lhs;
    double rhs;
    bool pass;
};

Outcome from_check(const CheckReport& r) { return {r.deviation, r.bound, r.pass}; }
Outcome from_bound(const BoundReport& b) { return {b.lhs, b.rhs, b.pass}; }

class Recorder {
  public:
    explicit Recorder(std::vector<CheckRecord>& out) : out_(out) {}

    void run(const std::string& name, const std::string& inputs, const std::function<Outcome()>& f) {
        CheckRecord rec;
        rec.name = name;
        rec.inputs_digest = fnv1a_hex(inputs);
        try {
            const Outcome o = f();
            rec.lhs = o.lhs;
            rec.rhs = o.rhs;
            rec.pass = o.pass;
        } catch (const std::exception& e) {
            rec.lhs = std::nan("");
            rec.rhs = std::nan("");
            rec.pass = false;
            rec.error = e.what();
        }
        out_.push_back(std::move(rec));
    }

  private:
    std::vector<CheckRecord>& out_;
};

std::string case_label(const std::string& suite, std::size_t n, int p, int q, int t) {
    return suite + "/n=" + std::to_string(n) + "/p=" + std::to_string(p) + "/q=" + std::to_string(q) +
           "/t=" + std::to_string(t);
}

HermitianOperator scaled_hermitian(std::size_t n, Rng& rng, double norm) {
    const HermitianOperator h = random_hermitian(n, rng);
    const double cur = operator_norm(h);
    return (norm / cur) * h;
}

std::vector<double> random_weights(std::size_t k, Rng& rng) {
    std::vector<double> w(k);
    double total = 0.0;
    for (auto& x : w) total += (x = 0.1 + rng.uniform());
    for (auto& x : w) x /= total;
    // absorb rounding so the weights sum to 1 as closely as doubles allow
    double rest = 1.0;
    for (std::size_t i = 0; i + 1 < k; ++i) rest -= w[i];
    w.back() = rest;
    return w;
}

ScalingFunction random_scaling(Rng& rng, int t) {
    if (t % 2 == 0) {
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        return ScalingFunction::constant(sign * (0.5 + 1.5 * rng.uniform()));
    }
    return ScalingFunction::kramers_wannier(0.5 + rng.uniform(), 0.3 + rng.uniform());
}

DensityState pure_state(std::size_t n, Rng& rng) {
    const ComplexMatrix u = random_unitary(n, rng);
    std::vector<cplx> psi(n);
    for (std::size_t i = 0; i < n; ++i) psi[i] = u(i, 0);
    return DensityState::pure(psi);
}

DensityState pad_state(const DensityState& rho, std::size_t total) {
    ComplexMatrix out(total, total);
    for (std::size_t i = 0; i < rho.dim(); ++i)
        for (std::size_t j = 0; j < rho.dim(); ++j) out(i, j) = rho.matrix()(i, j);
    return DensityState(HermitianOperator::hermitian_part(out));
}

std::vector<std::size_t> or_default(const std::vector<std::size_t>& v, std::vector<std::size_t> d) {
    return v.empty() ? d : v;
}

std::vector<std::pair<int, int>> or_default(const std::vector<std::pair<int, int>>& v,
                                            std::vector<std::pair<int, int>> d) {
    return v.empty() ? d : v;
}

// ---------------------------------------------------------------------------
// verify-map

void verify_map_case(Recorder& rec, const DualityMap& phi, std::uint64_t seed, double tol, const std::string& label,
                     int t) {
    Rng rng(seed);
    const std::size_t n = phi.n();
    const std::string in = label + "|seed=" + std::to_string(seed);
    const HermitianOperator a = scaled_hermitian(n, rng, 0.5 + 2.0 * rng.uniform());

    rec.run(label + "/spectral", in, [&] { return from_check(verify_spectral_axiom(phi, a, tol)); });

    std::vector<MixtureTerm> terms;
    const auto w3 = random_weights(3, rng);
    for (double w : w3) terms.push_back({w, scaled_hermitian(n, rng, 1.0 + rng.uniform())});
    rec.run(label + "/convexity", in, [&] { return from_check(verify_convexity_identity(phi, terms, tol)); });

    const std::uint64_t proj_seed = rng.next();
    rec.run(label + "/projector_lemmas", in,
            [&] { return from_check(verify_projector_lemmas(phi, proj_seed, std::min(tol, 1e-9))); });

    if (phi.p() >= 1) {
        const StateMap w(random_weights(static_cast<std::size_t>(phi.p()), rng));
        const DensityState rho = random_state(n, rng);
        const HermitianOperator obs = scaled_hermitian(n, rng, 1.5);
        rec.run(label + "/born_rule", in, [&] { return from_check(verify_born_rule(phi, w, obs, rho, tol)); });
        const HermitianOperator h = scaled_hermitian(n, rng, 1.0 + rng.uniform());
        const double time = 2.0 * rng.uniform();
        rec.run(label + "/time_dynamics", in,
                [&] { return from_check(verify_time_dynamics(phi, w, h, rho, time, tol)); });
        rec.run(label + "/state_entropy_offset", in, [&] {
            const DensityState s = apply_state_map(phi, w, rho);
            const double dev = std::abs(von_neumann_entropy(s) - von_neumann_entropy(rho) -
                                        entropy_of_probabilities(w.weights()));
            return Outcome{dev, std::max(tol, 1e-9), dev <= std::max(tol, 1e-9)};
        });
    }

    const int p2 = t % 2 == 0 ? 1 : 0;
    const DualityMap outer = DualityMap::random(phi.m(), p2, 1 - p2, rng, random_scaling(rng, 0));
    rec.run(label + "/compose_exact", in, [&] {
        const DualityMap c = compose_exact(outer, phi);
        const HermitianOperator direct = apply_map(outer, apply_map(phi, a));
        const double dev = operator_norm(apply_map(c, a) - direct);
        const double bound = tol * std::max(1.0, operator_norm(direct));
        return Outcome{dev, bound, dev <= bound};
    });
}

void suite_verify_map(const SuiteConfig& cfg, Recorder& rec, json&) {
    const double tol = cfg.tol.value_or(1e-8);
    const int trials = cfg.trials ? cfg.trials : 3;
    if (cfg.map) {
        const DualityMap phi = map_from_json(*cfg.map);
        for (int t = 0; t < trials; ++t) {
            const std::string label = case_label("verify-map/file", phi.n(), phi.p(), phi.q(), t);
            verify_map_case(rec, phi, child_seed(cfg.seed, label), tol, label, t);
        }
        return;
    }
    for (std::size_t n : or_default(cfg.dims, {2, 3})) {
        for (const auto& [p, q] : or_default(cfg.arities, {{1, 0}, {0, 1}, {1, 1}, {2, 1}})) {
            for (int t = 0; t < trials; ++t) {
                const std::string label = case_label("verify-map", n, p, q, t);
                const std::uint64_t seed = child_seed(cfg.seed, label);
                Rng rng(seed);
                const DualityMap phi = DualityMap::random(n, p, q, rng, random_scaling(rng, t));
                verify_map_case(rec, phi, rng.next(), tol, label, t);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// equivalence

Spectrum separated_spectrum(std::size_t d, Rng& rng) {
    for (;;) {
        std::vector<double> v(d);
        for (auto& x : v) x = -5.0 + 10.0 * rng.uniform();
        std::sort(v.begin(), v.end());
        bool ok = true;
        for (std::size_t i = 1; i < d; ++i) ok = ok && v[i] - v[i - 1] >= 0.05;
        if (ok) return Spectrum(v);
    }
}

std::vector<MixtureState> orthogonal_ensemble(std::size_t n, Rng& rng) {
    const std::size_t k = 2 + static_cast<std::size_t>(rng.next() % (n - 1));
    const ComplexMatrix u = random_unitary(n, rng);
    std::vector<std::vector<std::size_t>> groups(k);
    for (std::size_t c = 0; c < n; ++c) groups[c < k ? c : rng.next() % k].push_back(c);
    const auto probs = random_weights(k, rng);
    std::vector<MixtureState> out;
    for (std::size_t g = 0; g < k; ++g) {
        const auto w = random_weights(groups[g].size(), rng);
        ComplexMatrix rho(n, n);
        for (std::size_t idx = 0; idx < groups[g].size(); ++idx) {
            const std::size_t c = groups[g][idx];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) rho(i, j) += w[idx] * u(i, c) * std::conj(u(j, c));
        }
        out.push_back({probs[g], DensityState(HermitianOperator::hermitian_part(rho))});
    }
    return out;
}

std::vector<MixtureState> generic_ensemble(std::size_t n, Rng& rng) {
    const std::size_t k = 2 + static_cast<std::size_t>(rng.next() % 2);
    const auto probs = random_weights(k, rng);
    std::vector<MixtureState> out;
    for (std::size_t g = 0; g < k; ++g) out.push_back({probs[g], random_state(n, rng)});
    return out;
}

/// W diag(values) W^dagger for a random unitary W.
HermitianOperator rotated(const std::vector<double>& values, Rng& rng) {
    const ComplexMatrix w = random_unitary(values.size(), rng);
    return HermitianOperator::hermitian_part(w * ComplexMatrix::diagonal(std::span<const double>(values)) * w.adjoint());
}

void suite_equivalence(const SuiteConfig& cfg, Recorder& rec, json&) {
    const double tol = cfg.tol.value_or(1e-8);
    const int trials = cfg.trials ? cfg.trials : 2;
    const auto grid = default_charge_grid();
    for (std::size_t n : or_default(cfg.dims, {2, 3})) {
        for (const auto& [p, q] : or_default(cfg.arities, {{1, 0}, {0, 1}, {1, 1}, {2, 1}})) {
            for (int t = 0; t < trials; ++t) {
                const std::string label = case_label("equivalence", n, p, q, t);
                const std::uint64_t seed = child_seed(cfg.seed, label);
                const std::string in = label + "|seed=" + std::to_string(seed);
                Rng rng(seed);
                const DualityMap phi = DualityMap::random(n, p, q, rng, random_scaling(rng, t));
                const HermitianOperator a = scaled_hermitian(n, rng, 0.5 + 2.0 * rng.uniform());
                rec.run(label + "/thermal", in, [&] { return from_check(verify_thermal_axiom(phi, a, grid, tol)); });

                std::vector<DensityState> states{random_state(n, rng), pure_state(n, rng), random_state(n, rng)};
                std::optional<StateMap> w;
                if (p >= 1) w = StateMap::uniform(p);
                rec.run(label + "/entropic", in, [&] {
                    const EntropicAudit audit = verify_entropic_axioms(derive_entropic_map(phi), w, states, 1e-9);
                    double worst = 0.0;
                    for (const auto& s : audit.states) worst = std::max(worst, s.residual);
                    for (double r : audit.state_map_residuals) worst = std::max(worst, r);
                    return Outcome{worst, 1e-9, audit.pass};
                });

                // Synthesized dual spectra: proportional ones satisfy the
                // thermal relation, a 1e-3 shift of one level must not.
                const double f = phi.scaling().evaluate(a);
                std::vector<double> dual;
                const Spectrum spec_a = spectrum(a);
                for (double x : spec_a.values())
                    for (int k = 0; k < p + q; ++k) dual.push_back(f * x);
                const HermitianOperator good = rotated(dual, rng);
                rec.run(label + "/converse_consistent", in,
                        [&] { return from_check(thermal_relation(a, good, f, p + q, grid, tol)); });
                std::vector<double> shifted = dual;
                shifted[rng.next() % shifted.size()] += 1e-3;
                const HermitianOperator faulty = rotated(shifted, rng);
                rec.run(label + "/converse_detects", in, [&] {
                    const CheckReport r = thermal_relation(a, faulty, f, p + q, grid, tol);
                    return Outcome{r.deviation, r.bound, !r.pass};
                });
            }
        }
    }

    const int spectra = cfg.trials ? cfg.trials * 10 : 20;
    for (int i = 0; i < spectra; ++i) {
        const std::string label = "equivalence/power_sums/i=" + std::to_string(i);
        const std::uint64_t seed = child_seed(cfg.seed, label);
        Rng rng(seed);
        const Spectrum s = separated_spectrum(1 + static_cast<std::size_t>(rng.next() % 8), rng);
        rec.run(label + "/round_trip", label + "|seed=" + std::to_string(seed), [&] {
            const Spectrum back = reconstruct_spectrum(power_sums(s, static_cast<int>(s.size())), static_cast<int>(s.size()));
            double dev = 0.0;
            for (std::size_t k = 0; k < s.size(); ++k) dev = std::max(dev, std::abs(back[k] - s[k]));
            return Outcome{dev, 1e-6, dev <= 1e-6};
        });
    }

    struct PeelCase {
        std::vector<double> a, dual;
        double f;
        std::int64_t x, y;
        bool expect;
    };
    std::vector<PeelCase> peel_cases{
        {{1, 2}, {1, 1, 2, 2}, 1.0, 2, 1, true},
        {{1, 2}, {1, 1, 2, -2}, 1.0, 2, 1, false},
        {{2, 4}, {1, 2}, 0.5, 1, 1, true},
        {{-1, -1, 3, 3}, {-2, -2, -2, 6, 6, 6}, 2.0, 3, 2, true},
    };
    {
        Rng rng(child_seed(cfg.seed, "equivalence/peel"));
        for (int i = 0; i < 4; ++i) {
            const Spectrum s = separated_spectrum(2 + static_cast<std::size_t>(rng.next() % 4), rng);
            const double f = (rng.uniform() < 0.5 ? -1.0 : 1.0) * (0.3 + rng.uniform());
            const std::int64_t x = 1 + static_cast<std::int64_t>(rng.next() % 3);
            std::vector<double> dual;
            for (double v : s.values())
                for (std::int64_t k = 0; k < x; ++k) dual.push_back(f * v);
            peel_cases.push_back({{s.values().begin(), s.values().end()}, dual, f, x, 1, true});
            std::vector<double> flipped = dual;
            auto it = std::max_element(flipped.begin(), flipped.end(),
                                       [](double l, double r) { return std::abs(l) < std::abs(r); });
            *it = -*it;
            peel_cases.push_back({{s.values().begin(), s.values().end()}, flipped, f, x, 1, false});
        }
    }
    for (std::size_t i = 0; i < peel_cases.size(); ++i) {
        const auto& c = peel_cases[i];
        const std::string label = "equivalence/peel/i=" + std::to_string(i) + (c.expect ? "/matches" : "/sign_fault");
        rec.run(label, label, [&] {
            const PeelReport r = verify_peel_linf(Spectrum(c.a), Spectrum(c.dual), c.f, c.x, c.y, 16);
            return Outcome{r.deviation, 1e-4, r.pass == c.expect};
        });
    }

    const int ensembles = cfg.trials ? cfg.trials * 5 : 5;
    for (int i = 0; i < ensembles; ++i) {
        const std::string label = "equivalence/mixture/i=" + std::to_string(i);
        const std::uint64_t seed = child_seed(cfg.seed, label);
        Rng rng(seed);
        const auto ortho = orthogonal_ensemble(4, rng);
        const auto generic = generic_ensemble(4, rng);
        const std::string in = label + "|seed=" + std::to_string(seed);
        rec.run(label + "/orthogonal", in, [&] {
            const double r = std::abs(mixture_entropy_residual(ortho));
            return Outcome{r, 1e-9, r <= 1e-9 && supports_orthogonal(ortho)};
        });
        rec.run(label + "/generic", in, [&] {
            const double r = mixture_entropy_residual(generic);
            return Outcome{1e-6, r, r > 1e-6 && !supports_orthogonal(generic)};
        });
    }

    for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 3}}) {
        const std::string label = "equivalence/wigner/p=" + std::to_string(p) + "/q=" + std::to_string(q);
        const std::uint64_t seed = child_seed(cfg.seed, label);
        rec.run(label, label + "|seed=" + std::to_string(seed), [&] {
            const WignerSample s = sample_wigner_extension(3, p, q, seed);
            return Outcome{s.report.offset_residual, 1e-9, s.report.pass};
        });
    }
}

// ---------------------------------------------------------------------------
// approx-audit

void suite_approx(const SuiteConfig& cfg, Recorder& rec, json&) {
    const int trials = cfg.trials ? cfg.trials : 2;
    for (std::size_t n : or_default(cfg.dims, {2, 3})) {
        for (const auto& [p, q] : or_default(cfg.arities, {{1, 0}, {1, 1}})) {
            for (int t = 0; t < trials; ++t) {
                for (double s : {0.01, 0.05}) {
                    const std::string label = case_label("approx-audit", n, p, q, t) + "/s=" + (s == 0.01 ? "0.01" : "0.05");
                    const std::uint64_t seed = child_seed(cfg.seed, label);
                    const std::string in = label + "|seed=" + std::to_string(seed);
                    Rng rng(seed);
                    const DualityMap exact =
                        DualityMap::random(n, p, q, rng, ScalingFunction::constant(0.5 + 1.5 * rng.uniform()));
                    const HermitianOperator h = scaled_hermitian(n, rng, 1.0 + rng.uniform());
                    const double delta = operator_norm(apply_map(exact, h)) + 1.0;
                    const std::size_t ancilla = t % 2 == 0 ? 0 : 2;
                    const ErrorWeight k = t % 2 == 0 ? ErrorWeight::constant(1.0) : ErrorWeight::norm_scaled(0.5);
                    AdditivePerturbation pert{AdditivePerturbation::Kind::Random, rng.next(), s, delta};
                    const auto phi = std::make_shared<const ApproxDuality>(
                        ApproxDuality::additive(exact, pert, k, 0.0, 0.0, ancilla));

                    std::vector<HermitianOperator> inputs{h, scaled_hermitian(n, rng, 0.5), scaled_hermitian(n, rng, 3.0)};
                    for (std::size_t i = 0; i < inputs.size(); ++i) {
                        rec.run(label + "/defect/i=" + std::to_string(i), in,
                                [&] { return from_bound(defect_audit(*phi, inputs[i])); });
                    }
                    rec.run(label + "/eigenvalue", in, [&] {
                        Outcome worst{0.0, 0.0, true};
                        for (const auto& b : eigenvalue_bound(*phi, h)) {
                            if (b.lhs - b.rhs >= worst.lhs - worst.rhs || !b.pass) worst = {b.lhs, b.rhs, worst.pass && b.pass};
                        }
                        return worst;
                    });
                    for (double beta : {0.5, 1.0}) {
                        rec.run(label + "/partition/beta=" + (beta == 0.5 ? "0.5" : "1"), in,
                                [&] { return from_bound(partition_bound(*phi, h, beta, delta)); });
                    }
                    const DensityState target = pad_state(random_state(exact.m(), rng), phi->target_dim());
                    for (double time : {0.5, 2.0, 4.0}) {
                        char tl[16];
                        std::snprintf(tl, sizeof tl, "%g", time);
                        rec.run(label + "/dynamics/t=" + tl, in,
                                [&] { return from_bound(dynamics_bound(*phi, h, target, time)); });
                    }
                    if (p >= 1) {
                        const StateMap w(random_weights(static_cast<std::size_t>(p), rng));
                        const DensityState rho = random_state(n, rng);
                        rec.run(label + "/dynamics/encoded", in,
                                [&] { return from_bound(dynamics_bound(*phi, w, h, rho, 1.5)); });
                    }

                    const DualityMap exact2 = DualityMap::random(exact.m(), 1, 0, rng, ScalingFunction::constant(0.5 + rng.uniform()));
                    AdditivePerturbation pert2{AdditivePerturbation::Kind::Random, rng.next(), s / 2, delta};
                    const auto outer = std::make_shared<const ApproxDuality>(
                        ApproxDuality::additive(exact2, pert2, ErrorWeight::constant(1.0), 0.01, 0.0, ancilla));
                    const ApproxDuality composed = compose_approx(outer, phi);
                    rec.run(label + "/compose/epsilon_additive", in, [&] {
                        const double sum = phi->epsilon() + outer->epsilon();
                        return Outcome{composed.epsilon(), sum, composed.epsilon() == sum};
                    });
                    for (std::size_t i = 0; i < inputs.size(); ++i) {
                        rec.run(label + "/compose/defect/i=" + std::to_string(i), in,
                                [&] { return from_bound(defect_audit(composed, inputs[i])); });
                    }

                    const DualityMap similar(n, p, q, exact.unitary() * random_unitary(exact.m(), rng),
                                             ScalingFunction::constant(0.5 + rng.uniform()));
                    rec.run(label + "/similar_maps", in, [&] { return from_bound(similar_map_bound(exact, similar, h)); });
                    rec.run(label + "/same_map_two_inputs", in,
                            [&] { return from_bound(same_map_two_inputs_bound(exact, h, inputs[1])); });
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// kw

HermitianOperator ising_hamiltonian(const IsingLattice& lat) {
    const int n = lat.sites();
    std::vector<double> e(std::size_t{1} << n);
    for (std::size_t s = 0; s < e.size(); ++s) {
        double acc = 0.0;
        for (const auto& [a, b] : lat.bonds()) acc += (((s >> a) & 1u) == ((s >> b) & 1u)) ? 1.0 : -1.0;
        e[s] = -lat.coupling() * acc;
    }
    return HermitianOperator::diagonal(e);
}

std::string k_label(double k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", k);
    return buf;
}

void suite_kw(const SuiteConfig& cfg, Recorder& rec, json& data, SuiteReport& report) {
    const double kstar = 0.5 * std::log(1.0 + std::numbers::sqrt2);
    std::vector<double> ks = cfg.couplings;
    if (cfg.self_dual || ks.empty()) ks.push_back(kstar);
    if (cfg.couplings.empty()) {
        ks.push_back(0.3);
        ks.push_back(0.6);
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    const IsingLattice lat(cfg.rows, cfg.cols, 1.0);
    const EnergyHistogram hist = enumerate_energies(lat);
    const std::string lname = std::to_string(cfg.rows) + "x" + std::to_string(cfg.cols);
    data["histogram"] = to_json(hist);

    rec.run("kw/histogram_total/" + lname, lname, [&] {
        double total = 0.0;
        for (auto c : hist.counts) total += static_cast<double>(c);
        const double want = std::ldexp(1.0, hist.sites);
        return Outcome{total, want, total == want};
    });

    report.csv_header = {"K", "K_dual", "Z", "Z_dual", "residual_f", "residual_Z"};
    json rows = json::array();
    for (double k : ks) {
        const std::string kl = k_label(k);
        rec.run("kw/involution/K=" + kl, kl, [&] {
            const double dev = std::abs(dual_coupling(dual_coupling(k)) - k);
            return Outcome{dev, 1e-12 * std::max(1.0, k), dev <= 1e-12 * std::max(1.0, k)};
        });
        KwResidual r;
        double z = std::nan(""), zd = std::nan("");
        try {
            r = kw_relation_residual(hist, k);
            z = partition_function(hist, k);
            zd = partition_function(hist, r.k_dual);
        } catch (const Error&) {
        }
        rec.run("kw/residuals_finite/" + lname + "/K=" + kl, lname + kl, [&] {
            const KwResidual rr = kw_relation_residual(hist, k);
            const bool ok = std::isfinite(rr.residual_f) && std::isfinite(rr.residual_z);
            return Outcome{rr.residual_z, 0.0, ok};
        });
        report.csv_rows.push_back({k, r.k_dual, z, zd, r.residual_f, r.residual_z});
        rows.push_back(json{{"K", k}, {"K_dual", r.k_dual}, {"Z", z}, {"Z_dual", zd}, {"residual_f", r.residual_f},
                            {"residual_Z", r.residual_z}});
        if (k == kstar) {
            rec.run("kw/self_dual_collapse/" + lname, lname, [&] {
                const double res = kw_relation_residual(hist, k).residual_z;
                return Outcome{res, 1e-9, res <= 1e-9};
            });
        }
    }
    data["sweep"] = rows;

    rec.run("kw/self_dual_location", "kstar", [&] {
        const double found = self_dual_coupling();
        const double dev = std::abs(found - kstar);
        return Outcome{dev, 1e-10, dev <= 1e-10 && std::abs(found - 0.4406868) <= 1e-7};
    });

    // Finite-size trend at K = 0.3 and the self-dual collapse on each square.
    std::vector<double> trend;
    for (int l = 2; l <= 5; ++l) {
        const EnergyHistogram h = enumerate_energies(IsingLattice(l, l, 1.0));
        trend.push_back(kw_relation_residual(h, 0.3).residual_f);
        const std::string sq = std::to_string(l) + "x" + std::to_string(l);
        rec.run("kw/self_dual_collapse/square/" + sq, sq, [&] {
            const double res = kw_relation_residual(h, kstar).residual_z;
            return Outcome{res, 1e-9, res <= 1e-9};
        });
    }
    data["trend_K0.3"] = trend;
    for (std::size_t i = 1; i < trend.size(); ++i) {
        const std::string nm = std::to_string(i + 2) + "x" + std::to_string(i + 2);
        rec.run("kw/trend_f/K=0.3/" + nm, nm, [&] { return Outcome{trend[i], trend[i - 1], trend[i] < trend[i - 1]}; });
    }

    const EnergyHistogram h44 = enumerate_energies(IsingLattice(4, 4, 1.0));
    for (const auto& [k, regime, nm] : std::vector<std::tuple<double, ExpansionRegime, std::string>>{
             {2.0, ExpansionRegime::Low, "low/K=2"}, {0.1, ExpansionRegime::High, "high/K=0.1"}}) {
        rec.run("kw/expansion/4x4/" + nm, nm, [&, k = k, regime = regime] {
            const double exact = partition_function(h44, k);
            const double rel = std::abs(expansion_leading_terms(k, 16, regime) / exact - 1.0);
            return Outcome{rel, 0.05, rel <= 0.05};
        });
    }

    // The KW map inside the duality framework, on the 2x2 Ising Hamiltonian.
    const double coupling = 1.0, beta = 0.5;
    const KwDuality kw = kw_duality_map(16, coupling, beta);
    const HermitianOperator h = ising_hamiltonian(IsingLattice(2, 2, coupling));
    const auto grid = default_charge_grid();
    rec.run("kw/map/spectral", "2x2", [&] { return from_check(verify_spectral_axiom(kw.map, h, 1e-8)); });
    rec.run("kw/map/thermal", "2x2", [&] { return from_check(verify_thermal_axiom(kw.map, h, grid, 1e-8)); });
    rec.run("kw/map/convexity", "2x2", [&] {
        std::vector<double> other(16);
        for (std::size_t i = 0; i < other.size(); ++i) other[i] = 1.0 + static_cast<double>(i % 5);
        const std::vector<MixtureTerm> terms{{0.3, h}, {0.7, HermitianOperator::diagonal(other)}};
        return from_check(verify_convexity_identity(kw.map, terms, 1e-8));
    });
    rec.run("kw/map/born_rule", "2x2", [&] {
        const HermitianOperator g = expm_hermitian(h, -beta);
        const DensityState rho((1.0 / g.matrix().trace().real()) * g);
        return from_check(verify_born_rule(kw.map, StateMap({1.0}), h, rho, 1e-8));
    });
    rec.run("kw/map/temperature", "J=1,beta=0.5", [&] {
        const double dev = std::abs(coupling * kw.temperature(beta) - dual_coupling(coupling * beta));
        return Outcome{dev, 1e-12, dev <= 1e-12};
    });

    json gibbs = json::array();
    const HermitianOperator two = HermitianOperator::diagonal(std::vector<double>{-1.0, 1.0});
    for (const auto& [nm, op, b] : std::vector<std::tuple<std::string, HermitianOperator, double>>{
             {"two_level/K=0.5", two, 0.5}, {"2x2/K=0.5", h, 0.5}, {"2x2/K=K*", h, kstar}}) {
        const GibbsMapReport g = gibbs_state_map_check(coupling, b, op, 1);
        gibbs.push_back(json{{"case", nm},
                             {"exponent_plus", g.exponent_plus},
                             {"distance_plus", g.distance_plus},
                             {"exponent_minus", g.exponent_minus},
                             {"distance_minus", g.distance_minus}});
    }
    data["gibbs"] = gibbs;
}

// ---------------------------------------------------------------------------
// recover-spectrum

void suite_recover(const SuiteConfig& cfg, Recorder& rec, json& data) {
    if (!cfg.moments.empty()) {
        PowerSumSequence ps;
        ps.alpha_num = cfg.alpha_num;
        ps.alpha_den = cfg.alpha_den;
        ps.sums = cfg.moments;
        const int d = cfg.d ? cfg.d : static_cast<int>(cfg.moments.size());
        std::vector<double> roots;
        rec.run("recover-spectrum/input", dump_json(to_json(ps), -1), [&] {
            const Spectrum s = reconstruct_spectrum(ps, d);
            roots.assign(s.values().begin(), s.values().end());
            const PowerSumSequence back = power_sums(s, d);
            const double alpha = static_cast<double>(ps.alpha_num) / static_cast<double>(ps.alpha_den);
            double worst = 0.0;
            for (int k = 0; k < d; ++k) {
                const double m = ps.sums[static_cast<std::size_t>(k)];
                worst = std::max(worst, std::abs(alpha * back.sums[static_cast<std::size_t>(k)] - m) /
                                            std::max(1.0, std::abs(m)));
            }
            return Outcome{worst, 1e-6, worst <= 1e-6};
        });
        data["roots"] = roots;
        return;
    }
    const int count = cfg.trials ? cfg.trials : 50;
    for (int i = 0; i < count; ++i) {
        const std::string label = "recover-spectrum/random/i=" + std::to_string(i);
        const std::uint64_t seed = child_seed(cfg.seed, label);
        Rng rng(seed);
        const Spectrum s = separated_spectrum(1 + static_cast<std::size_t>(rng.next() % 8), rng);
        rec.run(label, label + "|seed=" + std::to_string(seed), [&] {
            const int d = static_cast<int>(s.size());
            const Spectrum back = reconstruct_spectrum(power_sums(s, d), d);
            double dev = 0.0;
            for (std::size_t k = 0; k < s.size(); ++k) dev = std::max(dev, std::abs(back[k] - s[k]));
            return Outcome{dev, 1e-6, dev <= 1e-6};
        });
    }
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
    SuiteReport report;
    report.suite = name;
    report.config = config;
    Recorder rec(report.checks);
    if (name == "verify-map") {
        suite_verify_map(config, rec, report.data);
    } else if (name == "equivalence") {
        suite_equivalence(config, rec, report.data);
    } else if (name == "approx-audit") {
        suite_approx(config, rec, report.data);
    } else if (name == "kw") {
        suite_kw(config, rec, report.data, report);
    } else if (name == "recover-spectrum") {
        suite_recover(config, rec, report.data);
    } else if (name == "all") {
        SuiteConfig plain = config;
        plain.moments.clear();
        plain.map.reset();
        for (const char* s : {"verify-map", "equivalence", "approx-audit", "kw", "recover-spectrum"}) {
            SuiteReport part = run_suite(s, plain);
            for (auto& c : part.checks) report.checks.push_back(std::move(c));
            report.data[s] = std::move(part.data);
        }
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
    }
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    return report;
}

std::string report_json(const SuiteReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j{{"name", c.name}, {"inputs_digest", c.inputs_digest}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
        if (!c.error.empty()) j["error"] = c.error;
        checks.push_back(std::move(j));
    }
    const json doc{{"schema", "dualis/1"},
                   {"suite", r.suite},
                   {"config", to_json(r.config)},
                   {"checks", checks},
                   {"summary", json{{"total", r.checks.size()}, {"passed", r.passed()}, {"failed", r.failed()}}},
                   {"data", r.data}};
    return dump_json(doc);
}

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string report_csv(const SuiteReport& r) {
    std::ostringstream out;
    if (!r.csv_header.empty()) {
        for (std::size_t i = 0; i < r.csv_header.size(); ++i) out << (i ? "," : "") << r.csv_header[i];
        out << '\n';
        for (const auto& row : r.csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << fmt17(row[i]);
            out << '\n';
        }
        return out.str();
    }
    out << "name,inputs_digest,lhs,rhs,pass\n";
    for (const auto& c : r.checks) {
        out << c.name << ',' << c.inputs_digest << ',' << fmt17(c.lhs) << ',' << fmt17(c.rhs) << ','
            << (c.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string report_text(const SuiteReport& r) {
    std::ostringstream out;
    if (r.data.contains("roots")) {
        bool first = true;
        for (const auto& v : r.data.at("roots")) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
            out << (first ? "" : " ") << buf;
            first = false;
        }
        out << '\n';
    }
    for (const auto& c : r.checks) {
        if (c.pass) continue;
        out << "FAIL " << c.name << " lhs=" << fmt17(c.lhs) << " rhs=" << fmt17(c.rhs);
        if (!c.error.empty()) out << " error=" << c.error;
        out << '\n';
    }
    out << r.suite << ": " << r.passed() << "/" << r.checks.size() << " checks passed (seed " << r.config.seed
        << ")\n";
    return out.str();
}

}  // namespace dualis
