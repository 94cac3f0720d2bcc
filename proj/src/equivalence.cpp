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


#include "dualis/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include "dualis/error.hpp"

namespace dualis {

std::vector<double> default_charge_grid() {
    std::vector<double> grid(12);
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 0.1 + (5.0 - 0.1) * static_cast<double>(i) / 11.0;
    return grid;
}

CheckReport thermal_relation(const HermitianOperator& a, const HermitianOperator& b, double f, double alpha,
                             std::span<const double> charges, double tol) {
    if (charges.empty()) throw Error(ErrorCode::InvalidArgument, "no charges given");
    CheckReport r;
    r.tolerance = tol;
    r.pass = true;
    for (double j : charges) {
        if (!(j > 0.0) || !std::isfinite(j)) throw Error(ErrorCode::InvalidArgument, "charges must be positive");
        const double lhs = alpha * trace_expm(a, -j * f);
        const double rhs = trace_expm(b, -j);
        const double rel = std::abs(lhs - rhs) / std::abs(rhs);
        if (rel >= r.deviation) {
            r.deviation = rel;
            r.lhs = lhs;
            r.rhs = rhs;
        }
    }
    r.bound = tol;
    r.pass = r.deviation <= tol;
    return r;
}

CheckReport verify_thermal_axiom(const DualityMap& phi, const HermitianOperator& a, std::span<const double> charges,
                                 double tol) {
    const HermitianOperator image = apply_map(phi, a);
    return thermal_relation(a, image, phi.scaling().evaluate(a), phi.arity(), charges, tol);
}

PowerSumSequence power_sums(const Spectrum& spec, int order) {
    if (order < 1) throw Error(ErrorCode::InvalidArgument, "power-sum order must be >= 1");
    PowerSumSequence ps;
    ps.sums.assign(static_cast<std::size_t>(order), 0.0);
    for (int k = 1; k <= order; ++k) {
        double s = 0.0;
        for (double x : spec.values()) s += std::pow(x, k);
        ps.sums[static_cast<std::size_t>(k - 1)] = s;
    }
    return ps;
}

Spectrum reconstruct_spectrum(const PowerSumSequence& ps, int d) {
    using real = long double;
    using zc = std::complex<long double>;
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
    if (ps.order() < static_cast<std::size_t>(d)) {
        throw Error(ErrorCode::InvalidArgument, "need at least d power sums");
    }
    if (ps.alpha_num < 1 || ps.alpha_den < 1) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
    const real scale = static_cast<real>(ps.alpha_den) / static_cast<real>(ps.alpha_num);
    std::vector<real> m(static_cast<std::size_t>(d) + 1);
    for (int k = 1; k <= d; ++k) {
        const double v = ps.sums[static_cast<std::size_t>(k - 1)];
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "power sums must be finite");
        m[static_cast<std::size_t>(k)] = static_cast<real>(v) * scale;
    }

    // Newton-Girard: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} m_i.
    std::vector<real> e(static_cast<std::size_t>(d) + 1, 0.0L);
    e[0] = 1.0L;
    for (int k = 1; k <= d; ++k) {
        real acc = 0.0L;
        for (int i = 1; i <= k; ++i) {
            const real term = e[static_cast<std::size_t>(k - i)] * m[static_cast<std::size_t>(i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<std::size_t>(k)] = acc / static_cast<real>(k);
    }
    // Monic z^d + c_1 z^{d-1} + ... + c_d with c_k = (-1)^k e_k.
    std::vector<real> c(static_cast<std::size_t>(d) + 1);
    c[0] = 1.0L;
    real radius = 0.0L;
    for (int k = 1; k <= d; ++k) {
        c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? e[static_cast<std::size_t>(k)] : -e[static_cast<std::size_t>(k)];
        radius = std::max(radius, std::abs(c[static_cast<std::size_t>(k)]));
    }
    radius += 1.0L;

    auto poly = [&](zc z) {
        zc v = 1.0L;
        for (int k = 1; k <= d; ++k) v = v * z + c[static_cast<std::size_t>(k)];
        return v;
    };

    std::vector<zc> z(static_cast<std::size_t>(d));
    const zc seed(0.4L, 0.9L);
    zc power = 1.0L;
    for (auto& zk : z) {
        zk = radius * power;
        power *= seed;
    }
    bool converged = false;
    for (int it = 0; it < 10000 && !converged; ++it) {
        real step = 0.0L;
        real mag = 1.0L;
        for (std::size_t k = 0; k < z.size(); ++k) {
            zc denom = 1.0L;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) denom *= (z[k] - z[j]);
            if (denom == zc(0.0L)) denom = zc(std::numeric_limits<real>::epsilon());
            const zc delta = poly(z[k]) / denom;
            z[k] -= delta;
            step = std::max(step, std::abs(delta));
            mag = std::max(mag, std::abs(z[k]));
        }
        converged = step <= 1e-14L * mag;
    }
    if (!converged) throw Error(ErrorCode::NonConvergence, "Durand-Kerner did not converge in 10000 iterations");

    std::vector<double> roots;
    roots.reserve(z.size());
    for (const zc& r : z) {
        if (std::abs(r.imag()) > 1e-7L * std::max(1.0L, std::abs(r))) {
            throw Error(ErrorCode::NonRealRoot, "power sums are not those of a real spectrum");
        }
        roots.push_back(static_cast<double>(r.real()));
    }
    return Spectrum(std::move(roots));
}

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

double norm_at(const std::vector<double>& v, int p, double scale) {
    double s = 0.0;
    for (double x : v) s += std::pow(std::abs(x) / scale, p);
    return std::pow(s, 1.0 / p);
}

double max_magnitude(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

void remove_largest(std::vector<double>& v) {
    auto it = std::max_element(v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    v.erase(it);
}

}  // namespace

PeelReport verify_peel_linf(const Spectrum& spec_a, const Spectrum& spec_dual, double f, std::int64_t x,
                            std::int64_t y, int p_even) {
    if (x < 1 || y < 1 || gcd64(x, y) != 1) {
        throw Error(ErrorCode::DimIncompatible, "alpha must be x/y in lowest terms with x, y >= 1");
    }
    if (static_cast<std::int64_t>(spec_a.size()) * x != static_cast<std::int64_t>(spec_dual.size()) * y) {
        throw Error(ErrorCode::DimIncompatible, "x dim(A) must equal y dim(dual)");
    }
    if (p_even < 8 || p_even % 2 != 0) throw Error(ErrorCode::InvalidArgument, "P_even must be even and >= 8");

    std::vector<double> lam, mu;
    for (double v : spec_a.values())
        for (std::int64_t i = 0; i < x; ++i) lam.push_back(f * v);
    for (double v : spec_dual.values())
        for (std::int64_t i = 0; i < y; ++i) mu.push_back(v);

    constexpr double kRel = 1e-4;
    PeelReport r;
    const std::vector<double> lam0 = lam, mu0 = mu;
    while (!lam.empty()) {
        const double scale = std::max(max_magnitude(lam), max_magnitude(mu));
        if (scale == 0.0) break;
        const double nl = norm_at(lam, p_even, scale);
        const double nm = norm_at(mu, p_even, scale);
        const double rel = std::abs(nl - nm) / std::max(nl, nm);
        r.deviation = std::max(r.deviation, rel);
        if (rel > kRel) {
            r.stage = "peel";
            return r;
        }
        remove_largest(lam);
        remove_largest(mu);
        ++r.peels;
    }

    // Magnitudes agree; odd moments fix the signs.
    const double scale = std::max({max_magnitude(lam0), max_magnitude(mu0), std::numeric_limits<double>::min()});
    for (int k = 1; k < p_even; k += 2) {
        double sl = 0.0, sm = 0.0, ref = 0.0;
        for (double v : lam0) {
            sl += std::pow(v / scale, k);
            ref += std::pow(std::abs(v) / scale, k);
        }
        for (double v : mu0) sm += std::pow(v / scale, k);
        const double rel = std::abs(sl - sm) / std::max(ref, std::numeric_limits<double>::min());
        r.deviation = std::max(r.deviation, rel);
        if (rel > kRel) {
            r.stage = "sign";
            return r;
        }
    }
    r.stage = "ok";
    r.pass = true;
    return r;
}

EntropicAudit verify_entropic_axioms(const DualityMap& phi, const std::optional<StateMap>& w,
                                     std::span<const DensityState> states, double tol) {
    const double alpha = phi.arity();
    const ScalingFunction& f = phi.scaling();
    if (f.kind() != ScalingFunction::Kind::Constant || std::abs(f.constant_value() * alpha - 1.0) > 1e-14) {
        throw Error(ErrorCode::WrongScaling, "entropic map needs f = 1/(p+q)");
    }
    EntropicAudit audit;
    audit.pass = true;
    for (const auto& rho : states) {
        const DensityState image(apply_map(phi, rho.op()));
        EntropicReport rep;
        rep.offset_measured = von_neumann_entropy(image) - von_neumann_entropy(rho);
        rep.offset_expected = std::log(alpha);
        rep.residual = std::abs(rep.offset_measured - rep.offset_expected);
        audit.pass = audit.pass && rep.residual <= tol;
        audit.states.push_back(rep);
        if (w && phi.p() >= 1) {
            const DensityState s = apply_state_map(phi, *w, rho);
            const double res =
                std::abs(von_neumann_entropy(s) - von_neumann_entropy(rho) - entropy_of_probabilities(w->weights()));
            audit.state_map_residuals.push_back(res);
            audit.pass = audit.pass && res <= tol;
        }
    }
    audit.zero_image_norm = apply_map(phi, HermitianOperator::zero(phi.n())).matrix().max_abs();
    audit.pass = audit.pass && audit.zero_image_norm == 0.0;

    if (states.size() >= 2) {
        std::vector<MixtureTerm> terms;
        for (const auto& rho : states) terms.push_back({1.0 / static_cast<double>(states.size()), rho.op()});
        audit.convexity = verify_convexity_identity(phi, terms, 1e-10);
    } else {
        audit.convexity.pass = true;
        audit.convexity.tolerance = 1e-10;
        audit.convexity.bound = 1e-10;
    }
    audit.pass = audit.pass && audit.convexity.pass;
    return audit;
}

DualityMap derive_entropic_map(const DualityMap& phi) {
    return DualityMap(phi.n(), phi.p(), phi.q(), phi.unitary(), ScalingFunction::constant(1.0 / phi.arity()));
}

namespace {

void validate_mixture(std::span<const MixtureState> components) {
    if (components.empty()) throw Error(ErrorCode::InvalidDistribution, "empty mixture");
    double total = 0.0;
    for (const auto& c : components) {
        if (!(c.weight >= 0.0 && c.weight <= 1.0)) {
            throw Error(ErrorCode::InvalidDistribution, "weights must lie in [0, 1]");
        }
        if (c.state.dim() != components.front().state.dim()) {
            throw Error(ErrorCode::DimMismatch, "mixture states differ in dimension");
        }
        total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::InvalidDistribution, "weights must sum to 1");
}

}  // namespace

double mixture_entropy_residual(std::span<const MixtureState> components) {
    validate_mixture(components);
    const std::size_t n = components.front().state.dim();
    ComplexMatrix mix(n, n);
    double avg_entropy = 0.0;
    std::vector<double> weights;
    for (const auto& c : components) {
        mix += c.state.matrix() * cplx(c.weight);
        avg_entropy += c.weight * von_neumann_entropy(c.state);
        weights.push_back(c.weight);
    }
    const DensityState rho(HermitianOperator::hermitian_part(mix));
    return avg_entropy + entropy_of_probabilities(weights) - von_neumann_entropy(rho);
}

bool supports_orthogonal(std::span<const MixtureState> components, double tol) {
    validate_mixture(components);
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j)
            if (std::abs((components[i].state.matrix() * components[j].state.matrix()).trace()) > tol) return false;
    return true;
}

WignerExtension::WignerExtension(std::size_t n, ComplexMatrix u, std::vector<ComplexMatrix> unitaries,
                                 std::vector<ComplexMatrix> antiunitary_parts)
    : n_(n), u_(std::move(u)), v_(std::move(unitaries)), w_(std::move(antiunitary_parts)) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
    if (v_.empty() && w_.empty()) throw Error(ErrorCode::InvalidArity, "need at least one block");
    const std::size_t m = n * (v_.size() + w_.size());
    if (u_.rows() != m || u_.cols() != m) throw Error(ErrorCode::DimMismatch, "outer unitary has wrong size");
    if (!is_unitary(u_, 1e-10)) throw Error(ErrorCode::NotUnitary, "outer matrix is not unitary");
    for (const auto* blocks : {&v_, &w_}) {
        for (const auto& b : *blocks) {
            if (b.rows() != n || b.cols() != n) throw Error(ErrorCode::DimMismatch, "block unitary has wrong size");
            if (!is_unitary(b, 1e-10)) throw Error(ErrorCode::NotUnitary, "block matrix is not unitary");
        }
    }
}

DensityState WignerExtension::apply(const DensityState& rho) const {
    if (rho.dim() != n_) throw Error(ErrorCode::DimMismatch, "state has wrong dimension");
    std::vector<ComplexMatrix> blocks;
    for (const auto& v : v_) blocks.push_back(v * rho.matrix() * v.adjoint());
    const ComplexMatrix bar = rho.matrix().conjugate();
    for (const auto& w : w_) blocks.push_back(w * bar * w.adjoint());
    ComplexMatrix out = u_ * direct_sum(blocks) * u_.adjoint();
    out *= cplx(1.0 / alpha());
    return DensityState(HermitianOperator::hermitian_part(out));
}

WignerReport verify_wigner_extension(const WignerExtension& ext, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = ext.n();
    const double alpha = ext.alpha();
    std::vector<DensityState> states;
    states.push_back(random_state(n, rng));
    const ComplexMatrix basis = random_unitary(n, rng);
    std::vector<cplx> psi(n);
    for (std::size_t i = 0; i < n; ++i) psi[i] = basis(i, 0);
    states.push_back(DensityState::pure(psi));
    states.push_back(random_state(n, rng));

    WignerReport r;
    r.offset_expected = std::log(alpha);
    for (const auto& rho : states) {
        const DensityState image = ext.apply(rho);
        const double offset = von_neumann_entropy(image) - von_neumann_entropy(rho);
        const double res = std::abs(offset - r.offset_expected);
        if (res >= r.offset_residual) {
            r.offset_residual = res;
            r.offset_measured = offset;
        }
        const CheckReport spec = spectral_relation(spectrum(rho.op()), image.op(), 1.0 / alpha, ext.alpha(), 1e-9);
        r.spectral_deviation = std::max(r.spectral_deviation, spec.deviation);
    }
    const double t = 0.5 + 0.4 * rng.uniform();
    const DensityState mix(HermitianOperator::hermitian_part(states[0].matrix() * cplx(t) +
                                                             states[2].matrix() * cplx(1.0 - t)));
    const ComplexMatrix lhs = ext.apply(mix).matrix();
    const ComplexMatrix rhs = ext.apply(states[0]).matrix() * cplx(t) + ext.apply(states[2]).matrix() * cplx(1.0 - t);
    r.convexity_deviation = max_abs_diff(lhs, rhs);
    r.pass = r.offset_residual <= 1e-9 && r.convexity_deviation <= 1e-10 && r.spectral_deviation <= 1e-9;
    return r;
}

WignerSample sample_wigner_extension(std::size_t n, int p, int q, std::uint64_t seed) {
    if (p < 0 || q < 0 || p + q < 1) throw Error(ErrorCode::InvalidArity, "need p, q >= 0 with p + q >= 1");
    Rng rng(seed);
    const std::size_t m = n * static_cast<std::size_t>(p + q);
    ComplexMatrix u = random_unitary(m, rng);
    std::vector<ComplexMatrix> vs, ws;
    for (int i = 0; i < p; ++i) vs.push_back(random_unitary(n, rng));
    for (int i = 0; i < q; ++i) ws.push_back(random_unitary(n, rng));
    WignerExtension ext(n, std::move(u), std::move(vs), std::move(ws));
    WignerReport report = verify_wigner_extension(ext, rng.next());
    return WignerSample{std::move(ext), report};
}

}  // namespace dualis
