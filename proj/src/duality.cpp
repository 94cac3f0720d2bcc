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

#include "dualis/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dualis/error.hpp"

namespace dualis {

struct ScalingFunction::Composition {
    ScalingFunction outer;
    std::shared_ptr<const DualityMap> inner;
};

// ---------------------------------------------------------------------------
// ScalingFunction

ScalingFunction ScalingFunction::constant(double c) {
    if (!std::isfinite(c) || c == 0.0) {
        throw Error(ErrorCode::InvalidArgument, "constant scaling must be finite and nonzero");
    }
    ScalingFunction f;
    f.kind_ = Kind::Constant;
    f.c_ = c;
    return f;
}

ScalingFunction ScalingFunction::kramers_wannier(double coupling, double beta) {
    if (!(coupling > 0.0) || !(beta > 0.0) || !std::isfinite(coupling) || !std::isfinite(beta)) {
        throw Error(ErrorCode::DomainError, "Kramers-Wannier scaling needs J > 0 and beta > 0");
    }
    ScalingFunction f;
    f.kind_ = Kind::KramersWannier;
    f.coupling_ = coupling;
    f.beta_ = beta;
    return f;
}

ScalingFunction ScalingFunction::table(std::vector<TableEntry> entries, double lipschitz) {
    if (!(lipschitz >= 0.0) || !std::isfinite(lipschitz)) {
        throw Error(ErrorCode::InvalidArgument, "table Lipschitz constant must be finite and >= 0");
    }
    for (auto& e : entries) {
        if (!std::isfinite(e.value) || e.value == 0.0) {
            throw Error(ErrorCode::InvalidArgument, "table values must be finite and nonzero");
        }
        std::sort(e.spectrum.begin(), e.spectrum.end());
    }
    ScalingFunction f;
    f.kind_ = Kind::Table;
    f.entries_ = std::move(entries);
    f.lipschitz_ = lipschitz;
    return f;
}

ScalingFunction ScalingFunction::composed(ScalingFunction outer, std::shared_ptr<const DualityMap> inner) {
    if (!inner) throw Error(ErrorCode::InvalidArgument, "composed scaling needs an inner map");
    ScalingFunction f;
    f.kind_ = Kind::Composed;
    f.composition_ = std::make_shared<const Composition>(Composition{std::move(outer), std::move(inner)});
    return f;
}

std::vector<std::int64_t> ScalingFunction::fingerprint(const HermitianOperator& a) {
    const Spectrum s = spectrum(a);
    std::vector<std::int64_t> fp;
    fp.reserve(s.size());
    for (double x : s.values()) fp.push_back(std::llround(x * 1e9));
    return fp;
}

double ScalingFunction::evaluate(const HermitianOperator& a) const {
    switch (kind_) {
        case Kind::Constant:
            return c_;
        case Kind::KramersWannier: {
            if (a.is_zero()) return 0.0;
            const double k = coupling_ * beta_;
            return -std::log(std::tanh(k)) / (2.0 * k);
        }
        case Kind::Table: {
            if (a.is_zero()) return 0.0;
            const auto fp = fingerprint(a);
            for (const auto& e : entries_) {
                if (e.spectrum.size() != fp.size()) continue;
                bool match = true;
                for (std::size_t i = 0; i < fp.size() && match; ++i) match = std::llround(e.spectrum[i] * 1e9) == fp[i];
                if (match) return e.value;
            }
            throw Error(ErrorCode::ScalingUndefined, "operator spectrum not present in scaling table");
        }
        case Kind::Composed: {
            const auto& comp = *composition_;
            const double inner_f = comp.inner->scaling().evaluate(a);
            return comp.outer.evaluate(apply_map(*comp.inner, a)) * inner_f;
        }
    }
    throw Error(ErrorCode::ScalingUndefined, "unknown scaling kind");
}

double ScalingFunction::lipschitz() const {
    switch (kind_) {
        case Kind::Constant:
        case Kind::KramersWannier:
            return 0.0;
        case Kind::Table:
            return lipschitz_;
        case Kind::Composed: {
            const double lo = composition_->outer.lipschitz();
            const double li = composition_->inner->scaling().lipschitz();
            if (lo == 0.0 && li == 0.0) return 0.0;
            return std::numeric_limits<double>::quiet_NaN();
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::optional<double> ScalingFunction::uniform_value() const {
    switch (kind_) {
        case Kind::Constant:
            return c_;
        case Kind::KramersWannier: {
            const double k = coupling_ * beta_;
            return -std::log(std::tanh(k)) / (2.0 * k);
        }
        case Kind::Table:
            return std::nullopt;
        case Kind::Composed: {
            const auto o = composition_->outer.uniform_value();
            const auto i = composition_->inner->scaling().uniform_value();
            if (o && i) return *o * *i;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

const ScalingFunction& ScalingFunction::outer() const {
    if (kind_ != Kind::Composed) throw Error(ErrorCode::InvalidArgument, "scaling is not composed");
    return composition_->outer;
}

const DualityMap& ScalingFunction::inner() const {
    if (kind_ != Kind::Composed) throw Error(ErrorCode::InvalidArgument, "scaling is not composed");
    return *composition_->inner;
}

// ---------------------------------------------------------------------------
// DualityMap and StateMap

DualityMap::DualityMap(std::size_t n, int p, int q, ComplexMatrix u, ScalingFunction f)
    : n_(n), p_(p), q_(q), u_(std::move(u)), f_(std::move(f)) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "source dimension must be positive");
    if (p < 0 || q < 0 || p + q < 1) {
        throw Error(ErrorCode::InvalidArity, "need p, q >= 0 with p + q >= 1");
    }
    if (u_.rows() != m() || u_.cols() != m()) {
        throw Error(ErrorCode::DimMismatch, "unitary must be " + std::to_string(m()) + "x" + std::to_string(m()));
    }
    if (!is_unitary(u_, kUnitaryTol)) throw Error(ErrorCode::NotUnitary, "U is not unitary within 1e-10");
}

DualityMap DualityMap::identity(std::size_t n) {
    return DualityMap(n, 1, 0, ComplexMatrix::identity(n), ScalingFunction::constant(1.0));
}

DualityMap DualityMap::random(std::size_t n, int p, int q, Rng& rng, ScalingFunction f) {
    if (p < 0 || q < 0 || p + q < 1) throw Error(ErrorCode::InvalidArity, "need p, q >= 0 with p + q >= 1");
    const std::size_t m = n * static_cast<std::size_t>(p + q);
    return DualityMap(n, p, q, random_unitary(m, rng), std::move(f));
}

StateMap::StateMap(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw Error(ErrorCode::InvalidDistribution, "state map needs at least one weight");
    double total = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0 && w <= 1.0)) throw Error(ErrorCode::InvalidDistribution, "weights must lie in [0, 1]");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::InvalidDistribution, "weights must sum to 1");
}

StateMap StateMap::uniform(int p) {
    if (p < 1) throw Error(ErrorCode::NoUnitaryBlocks, "uniform weights need p >= 1");
    return StateMap(std::vector<double>(static_cast<std::size_t>(p), 1.0 / p));
}

// ---------------------------------------------------------------------------
// Application and axiom checks

HermitianOperator apply_with_conjugator(const ComplexMatrix& w, int p, int q, double f, const HermitianOperator& a) {
    const HermitianOperator x = block_embed(a, p, q);
    ComplexMatrix out = w * x.matrix() * w.adjoint();
    out *= cplx(f);
    return HermitianOperator::hermitian_part(out);
}

HermitianOperator apply_map(const DualityMap& phi, const HermitianOperator& a) {
    if (a.dim() != phi.n()) {
        throw Error(ErrorCode::DimMismatch, "operator has dimension " + std::to_string(a.dim()) + ", map expects " +
                                                std::to_string(phi.n()));
    }
    const double f = phi.scaling().evaluate(a);
    return apply_with_conjugator(phi.unitary(), phi.p(), phi.q(), f, a);
}

CheckReport spectral_relation(const Spectrum& source, const HermitianOperator& image, double f, int arity,
                              double tol) {
    std::vector<double> expected;
    expected.reserve(source.size() * static_cast<std::size_t>(arity));
    for (double x : source.values())
        for (int k = 0; k < arity; ++k) expected.push_back(f * x);
    std::sort(expected.begin(), expected.end());
    const Spectrum actual = spectrum(image);

    CheckReport r;
    r.tolerance = tol;
    if (actual.size() != expected.size()) {
        r.deviation = std::numeric_limits<double>::infinity();
        r.bound = tol;
        r.pass = false;
        return r;
    }
    double scale = 1.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        r.deviation = std::max(r.deviation, std::abs(actual[i] - expected[i]));
        scale = std::max(scale, std::abs(expected[i]));
    }
    r.lhs = r.deviation;
    r.rhs = tol * scale;
    r.bound = r.rhs;
    r.pass = r.deviation <= r.bound;
    return r;
}

CheckReport verify_spectral_axiom(const DualityMap& phi, const HermitianOperator& a, double tol) {
    const HermitianOperator image = apply_map(phi, a);
    return spectral_relation(spectrum(a), image, phi.scaling().evaluate(a), phi.arity(), tol);
}

CheckReport verify_convexity_identity(const DualityMap& phi, std::span<const MixtureTerm> terms, double tol) {
    if (terms.empty()) throw Error(ErrorCode::InvalidDistribution, "empty mixture");
    double total = 0.0;
    for (const auto& t : terms) {
        if (!(t.weight >= 0.0 && t.weight <= 1.0)) {
            throw Error(ErrorCode::InvalidDistribution, "mixture weights must lie in [0, 1]");
        }
        if (t.op.dim() != phi.n()) throw Error(ErrorCode::DimMismatch, "mixture operand has wrong dimension");
        if (t.op.is_zero()) throw Error(ErrorCode::ZeroOperandInMixture, "f(0) = 0 cannot divide");
        total += t.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::InvalidDistribution, "mixture weights must sum to 1");

    HermitianOperator mix = HermitianOperator::zero(phi.n());
    for (const auto& t : terms) mix = mix + t.weight * t.op;
    const HermitianOperator lhs = apply_map(phi, mix);

    HermitianOperator acc = HermitianOperator::zero(phi.m());
    for (const auto& t : terms) acc = acc + (t.weight / phi.scaling().evaluate(t.op)) * apply_map(phi, t.op);
    const HermitianOperator rhs = phi.scaling().evaluate(mix) * acc;

    CheckReport r;
    r.tolerance = tol;
    r.deviation = operator_norm(lhs - rhs);
    r.lhs = operator_norm(lhs);
    r.rhs = operator_norm(rhs);
    r.bound = tol * std::max(1.0, r.lhs);
    r.pass = r.deviation <= r.bound;
    return r;
}

namespace {

HermitianOperator normalized_image(const DualityMap& phi, const HermitianOperator& proj, double c) {
    const HermitianOperator scaled = c * proj;
    const double f = phi.scaling().evaluate(scaled);
    return (1.0 / (c * f)) * apply_map(phi, scaled);
}

double idempotence_gap(const HermitianOperator& s) { return max_abs_diff(s.matrix() * s.matrix(), s.matrix()); }

// Writes `image` in the eigenbasis of its complement; the block on the
// complement's range must vanish, and then so must the off-diagonal blocks.
double offdiagonal_gap(const HermitianOperator& image, const HermitianOperator& complement) {
    const EigenDecomposition e = eig_hermitian(complement);
    const ComplexMatrix x = e.vectors.adjoint() * image.matrix() * e.vectors;
    const std::size_t m = x.rows();
    double gap = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const bool i_hi = e.values[i] > 0.5;
        for (std::size_t j = 0; j < m; ++j) {
            const bool j_hi = e.values[j] > 0.5;
            if (i_hi || j_hi) gap = std::max(gap, std::abs(x(i, j)));
        }
    }
    return gap;
}

}  // namespace

CheckReport verify_projector_lemmas(const DualityMap& phi, std::uint64_t seed, double tol) {
    Rng rng(seed);
    const std::size_t n = phi.n();
    const std::size_t m = phi.m();
    const double arity = phi.arity();
    const double scales[] = {1.0, -3.0, 0.5 + rng.uniform()};
    double dev = 0.0;

    if (n == 1) {
        const HermitianOperator one = HermitianOperator::diagonal(std::vector<double>{1.0});
        for (double c : scales) {
            const HermitianOperator s = normalized_image(phi, one, c);
            dev = std::max(dev, max_abs_diff(s.matrix(), ComplexMatrix::identity(m)));
        }
    } else {
        const std::size_t rank = 1 + static_cast<std::size_t>(rng.next() % (n - 1));
        const Projector q1 = random_projector(n, rank, rng);
        const HermitianOperator q2 = HermitianOperator::hermitian_part(ComplexMatrix::identity(n)) - q1.op();
        for (double c : scales) {
            const HermitianOperator s1 = normalized_image(phi, q1.op(), c);
            const HermitianOperator s2 = normalized_image(phi, q2, c);
            dev = std::max({dev, idempotence_gap(s1), idempotence_gap(s2)});
            dev = std::max(dev, (s1.matrix() * s2.matrix()).max_abs());
            dev = std::max(dev, max_abs_diff((s1 + s2).matrix(), ComplexMatrix::identity(m)));
            dev = std::max(dev, std::abs(s1.matrix().trace().real() - arity * static_cast<double>(rank)));
            dev = std::max(dev, offdiagonal_gap(s1, s2));
        }
    }

    if (n >= 3) {
        const ComplexMatrix u = random_unitary(n, rng);
        ComplexMatrix p1(n, n), p2(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                p1(i, j) = u(i, 0) * std::conj(u(j, 0));
                p2(i, j) = u(i, 1) * std::conj(u(j, 1));
            }
        }
        const auto h1 = HermitianOperator::hermitian_part(p1);
        const auto h2 = HermitianOperator::hermitian_part(p2);
        for (double c : scales) {
            const HermitianOperator s1 = normalized_image(phi, h1, c);
            const HermitianOperator s2 = normalized_image(phi, h2, c);
            const HermitianOperator s12 = normalized_image(phi, h1 + h2, c);
            dev = std::max({dev, idempotence_gap(s1), idempotence_gap(s2), idempotence_gap(s12)});
            dev = std::max(dev, (s1.matrix() * s2.matrix()).max_abs());
            dev = std::max(dev, max_abs_diff(s12.matrix(), (s1 + s2).matrix()));
        }
    }

    CheckReport r;
    r.tolerance = tol;
    r.deviation = dev;
    r.lhs = dev;
    r.rhs = tol;
    r.bound = tol;
    r.pass = dev <= tol;
    return r;
}

DensityState apply_state_map(const DualityMap& phi, const StateMap& w, const DensityState& rho) {
    if (phi.p() == 0) throw Error(ErrorCode::NoUnitaryBlocks, "no compatible state map exists for p = 0");
    if (w.size() != static_cast<std::size_t>(phi.p())) {
        throw Error(ErrorCode::DimMismatch, "state map has " + std::to_string(w.size()) + " weights, map has p = " +
                                                std::to_string(phi.p()));
    }
    if (rho.dim() != phi.n()) throw Error(ErrorCode::DimMismatch, "state dimension does not match map");
    std::vector<ComplexMatrix> blocks;
    for (double a : w.weights()) blocks.push_back(rho.matrix() * cplx(a));
    for (int i = 0; i < phi.q(); ++i) blocks.emplace_back(phi.n(), phi.n());
    const ComplexMatrix d = direct_sum(blocks);
    return DensityState(HermitianOperator::hermitian_part(phi.unitary() * d * phi.unitary().adjoint()));
}

CheckReport verify_born_rule(const DualityMap& phi, const StateMap& w, const HermitianOperator& a,
                             const DensityState& rho, double tol) {
    const HermitianOperator image = apply_map(phi, a);
    const DensityState state = apply_state_map(phi, w, rho);
    CheckReport r;
    r.tolerance = tol;
    r.lhs = (image.matrix() * state.matrix()).trace().real();
    r.rhs = phi.scaling().evaluate(a) * (a.matrix() * rho.matrix()).trace().real();
    r.deviation = std::abs(r.lhs - r.rhs);
    r.bound = tol * std::max(1.0, std::abs(r.rhs));
    r.pass = r.deviation <= r.bound;
    return r;
}

CheckReport verify_time_dynamics(const DualityMap& phi, const StateMap& w, const HermitianOperator& h,
                                 const DensityState& rho, double t, double tol) {
    const double fh = phi.scaling().evaluate(h);
    if (fh == 0.0) throw Error(ErrorCode::ScalingUndefined, "f(H) = 0, rescaled time undefined");

    const ComplexMatrix src = unitary_evolution(h, t);
    const DensityState evolved(HermitianOperator::hermitian_part(src * rho.matrix() * src.adjoint()));
    const DensityState lhs = apply_state_map(phi, w, evolved);

    const HermitianOperator rescaled = (1.0 / fh) * apply_map(phi, h);
    const ComplexMatrix dual = unitary_evolution(rescaled, t);
    const DensityState start = apply_state_map(phi, w, rho);
    const ComplexMatrix rhs = dual * start.matrix() * dual.adjoint();

    CheckReport r;
    r.tolerance = tol;
    r.deviation = trace_norm(HermitianOperator::hermitian_part(lhs.matrix() - rhs));
    r.lhs = r.deviation;
    r.rhs = tol;
    r.bound = tol;
    r.pass = r.deviation <= tol;
    return r;
}

DualityMap compose_exact(const DualityMap& outer, const DualityMap& inner) {
    if (outer.n() != inner.m()) {
        throw Error(ErrorCode::DimMismatch, "outer map expects dimension " + std::to_string(outer.n()) +
                                                ", inner map produces " + std::to_string(inner.m()));
    }
    const std::size_t n = inner.n();
    const int p1 = inner.p(), q1 = inner.q(), p2 = outer.p(), q2 = outer.q();

    // outer(inner(A)) = f V2 (+)_b [V1 X1 V1^dagger or its conjugate] V2^dagger, and
    // the conjugate of V1 X1 V1^dagger is conj(V1) conj(X1) conj(V1)^dagger.
    std::vector<ComplexMatrix> conjugators;
    std::vector<bool> is_plain;  // per n-block: A (true) or conj(A)
    const ComplexMatrix v1bar = inner.unitary().conjugate();
    for (int b = 0; b < p2 + q2; ++b) {
        const bool flipped = b >= p2;
        conjugators.push_back(flipped ? v1bar : inner.unitary());
        for (int k = 0; k < p1 + q1; ++k) is_plain.push_back((k < p1) != flipped);
    }
    const ComplexMatrix w = direct_sum(conjugators);

    // Permutation taking the canonical order (all A blocks, then all conj(A)) to
    // the order produced above.
    const std::size_t blocks = is_plain.size();
    const std::size_t m = blocks * n;
    ComplexMatrix perm(m, m);
    std::size_t next_plain = 0;
    const std::size_t plain_count =
        static_cast<std::size_t>(std::count(is_plain.begin(), is_plain.end(), true));
    std::size_t next_conj = plain_count;
    for (std::size_t pos = 0; pos < blocks; ++pos) {
        const std::size_t canon = is_plain[pos] ? next_plain++ : next_conj++;
        for (std::size_t i = 0; i < n; ++i) perm(pos * n + i, canon * n + i) = 1.0;
    }

    ComplexMatrix u = outer.unitary() * w * perm;
    const int p = p1 * p2 + q1 * q2;
    const int q = q1 * p2 + p1 * q2;

    const ScalingFunction& f1 = inner.scaling();
    const ScalingFunction& f2 = outer.scaling();
    ScalingFunction f = (f1.kind() == ScalingFunction::Kind::Constant && f2.kind() == ScalingFunction::Kind::Constant)
                            ? ScalingFunction::constant(f1.constant_value() * f2.constant_value())
                            : ScalingFunction::composed(f2, std::make_shared<const DualityMap>(inner));
    return DualityMap(n, p, q, std::move(u), std::move(f));
}

}  // namespace dualis
