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


#include "dualis/approx.hpp"

#include <cmath>
#include <string>

#include "dualis/error.hpp"

namespace dualis {

namespace {

ComplexMatrix pad(const ComplexMatrix& x, std::size_t total) {
    ComplexMatrix out(total, total);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j);
    return out;
}

ComplexMatrix pad_lower(const ComplexMatrix& x, std::size_t total) {
    ComplexMatrix out(total, total);
    const std::size_t off = total - x.rows();
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(off + i, off + j) = x(i, j);
    return out;
}

Projector encoded_projector(std::size_t m, std::size_t total) {
    std::vector<double> d(total, 0.0);
    for (std::size_t i = 0; i < m; ++i) d[i] = 1.0;
    return Projector(HermitianOperator::diagonal(d));
}

void require_nonnegative(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be finite and >= 0");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// ErrorWeight

ErrorWeight ErrorWeight::constant(double c) {
    require_nonnegative(c, "k");
    ErrorWeight k;
    k.kind_ = Kind::Constant;
    k.c_ = c;
    return k;
}

ErrorWeight ErrorWeight::norm_scaled(double c) {
    require_nonnegative(c, "k");
    ErrorWeight k;
    k.kind_ = Kind::NormScaled;
    k.c_ = c;
    return k;
}

ErrorWeight ErrorWeight::composed(std::shared_ptr<const ApproxDuality> outer,
                                  std::shared_ptr<const ApproxDuality> inner) {
    if (!outer || !inner) throw Error(ErrorCode::InvalidArgument, "composed weight needs both parts");
    ErrorWeight k;
    k.kind_ = Kind::Composed;
    k.outer_ = std::move(outer);
    k.inner_ = std::move(inner);
    return k;
}

double ErrorWeight::evaluate(const HermitianOperator& a) const {
    switch (kind_) {
        case Kind::Constant:
            return c_;
        case Kind::NormScaled:
            return c_ * std::max(1.0, operator_norm(a));
        case Kind::Composed: {
            const ApproxDuality& in = *inner_;
            const ApproxDuality& out = *outer_;
            const double k1 = in.weight().evaluate(a);
            const double k2 = out.weight().evaluate(in.restrict_encoded(in.perturbed(a)));
            const double l2 = out.lipschitz();
            const double f1 = std::abs(in.exact().scaling().evaluate(a));
            const double f2 = std::abs(out.exact().scaling().evaluate(apply_map(in.exact(), a)));
            return k2 + l2 * k1 * k1 * in.epsilon() + l2 * f1 * operator_norm(a) * k1 + f2 * k1;
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// ApproxDuality

ApproxDuality::ApproxDuality(DualityMap exact, std::size_t ancilla, Projector s, double epsilon, double eta,
                             ErrorWeight k, double lipschitz)
    : exact_(std::move(exact)),
      ancilla_(ancilla),
      s_(std::move(s)),
      epsilon_(epsilon),
      eta_(eta),
      k_(std::move(k)),
      lipschitz_(lipschitz) {
    require_nonnegative(epsilon_, "epsilon");
    require_nonnegative(eta_, "eta");
    require_nonnegative(lipschitz_, "Lipschitz constant");
    if (s_.dim() != target_dim()) {
        throw Error(ErrorCode::DimMismatch, "S must act on the " + std::to_string(target_dim()) + "-dim target");
    }
}

ApproxDuality ApproxDuality::additive(DualityMap exact, AdditivePerturbation perturbation, ErrorWeight k, double eta,
                                      double lipschitz, std::size_t ancilla, std::optional<Projector> s,
                                      std::optional<double> epsilon) {
    if (!std::isfinite(perturbation.scale) || !std::isfinite(perturbation.junk_floor)) {
        throw Error(ErrorCode::InvalidArgument, "perturbation parameters must be finite");
    }
    const std::size_t m = exact.m();
    const std::size_t total = m + ancilla;
    Projector proj = s ? std::move(*s) : encoded_projector(m, total);
    const double eps = epsilon ? *epsilon : std::abs(perturbation.scale);
    ApproxDuality out(std::move(exact), ancilla, std::move(proj), eps, eta, std::move(k), lipschitz);
    out.additive_ = perturbation;

    Rng rng(perturbation.seed);
    if (perturbation.kind == AdditivePerturbation::Kind::Shift) {
        out.term_ = HermitianOperator::hermitian_part(pad(ComplexMatrix::identity(m), total));
    } else {
        const HermitianOperator e = random_hermitian(m, rng);
        const double norm = operator_norm(e);
        out.term_ = HermitianOperator::hermitian_part(pad(e.matrix(), total) * cplx(1.0 / norm));
    }
    if (ancilla > 0) {
        ComplexMatrix g(ancilla, ancilla);
        for (std::size_t i = 0; i < ancilla; ++i)
            for (std::size_t j = 0; j < ancilla; ++j) g(i, j) = rng.complex_normal();
        const HermitianOperator pos = HermitianOperator::hermitian_part(g * g.adjoint());
        const HermitianOperator block =
            (1.0 / operator_norm(pos)) * pos +
            perturbation.junk_floor * HermitianOperator::hermitian_part(ComplexMatrix::identity(ancilla));
        out.junk_ = HermitianOperator::hermitian_part(pad_lower(block.matrix(), total));
    }
    return out;
}

const ApproxDuality& ApproxDuality::outer() const {
    if (!outer_) throw Error(ErrorCode::InvalidArgument, "not a composed approximate duality");
    return *outer_;
}

const ApproxDuality& ApproxDuality::inner() const {
    if (!inner_) throw Error(ErrorCode::InvalidArgument, "not a composed approximate duality");
    return *inner_;
}

HermitianOperator ApproxDuality::embedded_exact(const HermitianOperator& a) const {
    const HermitianOperator image = apply_map(exact_, a);
    if (ancilla_ == 0) return image;
    return HermitianOperator::hermitian_part(pad(image.matrix(), target_dim()));
}

HermitianOperator ApproxDuality::perturbed(const HermitianOperator& a) const {
    if (outer_) return outer_->perturbed(inner_->restrict_encoded(inner_->perturbed(a)));
    HermitianOperator out = embedded_exact(a);
    if (additive_.scale != 0.0) out = out + (additive_.scale * k_.evaluate(a)) * *term_;
    if (junk_) out = out + *junk_;
    return out;
}

HermitianOperator ApproxDuality::restrict_encoded(const HermitianOperator& x) const {
    if (x.dim() != target_dim()) throw Error(ErrorCode::DimMismatch, "operator is not on the target space");
    const std::size_t m = exact_.m();
    ComplexMatrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, j) = x.matrix()(i, j);
    return HermitianOperator::hermitian_part(out);
}

Projector ApproxDuality::encoded_subspace() const { return encoded_projector(exact_.m(), target_dim()); }

// ---------------------------------------------------------------------------
// Bounds

double defect(const ApproxDuality& phi, const HermitianOperator& a) {
    if (a.dim() != phi.exact().n()) throw Error(ErrorCode::DimMismatch, "operator has wrong dimension");
    const ComplexMatrix& s = phi.subspace().matrix();
    const ComplexMatrix compressed = s * phi.perturbed(a).matrix() * s;
    return operator_norm(HermitianOperator::hermitian_part(compressed - phi.embedded_exact(a).matrix()));
}

BoundReport defect_audit(const ApproxDuality& phi, const HermitianOperator& a) {
    return make_bound(defect(phi, a), phi.weight().evaluate(a) * phi.epsilon());
}

BoundReport similar_map_bound(const DualityMap& phi, const DualityMap& phi_prime, const HermitianOperator& m) {
    if (phi.n() != phi_prime.n() || phi.p() != phi_prime.p() || phi.q() != phi_prime.q()) {
        throw Error(ErrorCode::DimMismatch, "maps differ in shape");
    }
    const double f = phi.scaling().evaluate(m);
    const double fp = phi_prime.scaling().evaluate(m);
    if (!(f > 0.0) || !(fp > 0.0)) throw Error(ErrorCode::NegativeScaling, "square roots need f(M), f'(M) > 0");
    const double lhs = operator_norm(apply_map(phi, m) - apply_map(phi_prime, m));
    const ComplexMatrix diff = phi.unitary() * cplx(std::sqrt(f)) - phi_prime.unitary() * cplx(std::sqrt(fp));
    const double rhs = (std::sqrt(f) + std::sqrt(fp)) * spectral_norm(diff) * operator_norm(m);
    return make_bound(lhs, rhs);
}

BoundReport same_map_two_inputs_bound(const DualityMap& phi, const HermitianOperator& m,
                                      const HermitianOperator& m_prime) {
    const double lhs = operator_norm(apply_map(phi, m) - apply_map(phi, m_prime));
    const double rhs = operator_norm(phi.scaling().evaluate(m) * m - phi.scaling().evaluate(m_prime) * m_prime);
    return BoundReport{lhs, rhs, std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, rhs)};
}

ApproxDuality compose_approx(std::shared_ptr<const ApproxDuality> outer, std::shared_ptr<const ApproxDuality> inner,
                             std::optional<double> lipschitz) {
    if (!outer || !inner) throw Error(ErrorCode::InvalidArgument, "compose_approx needs both maps");
    if (outer->exact().n() != inner->exact().m()) {
        throw Error(ErrorCode::DimMismatch, "outer source dimension must equal inner encoded dimension");
    }
    if (max_abs_diff(inner->subspace().matrix(), inner->encoded_subspace().matrix()) > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "inner map must restrict to its encoded subspace");
    }
    DualityMap exact = compose_exact(outer->exact(), inner->exact());
    double l = lipschitz ? *lipschitz : exact.scaling().lipschitz();
    if (std::isnan(l)) throw Error(ErrorCode::InvalidArgument, "composite scaling needs a declared Lipschitz constant");
    ApproxDuality out(std::move(exact), outer->ancilla(), outer->subspace(), outer->epsilon() + inner->epsilon(),
                      outer->eta() + inner->eta(), ErrorWeight::composed(outer, inner), l);
    out.outer_ = std::move(outer);
    out.inner_ = std::move(inner);
    return out;
}

std::vector<BoundReport> eigenvalue_bound(const ApproxDuality& phi, const HermitianOperator& a) {
    const std::size_t m = phi.exact().m();
    if (phi.subspace().rank() != m) {
        throw Error(ErrorCode::RankMismatch, "S must have rank (p+q) n = " + std::to_string(m));
    }
    const ComplexMatrix basis = phi.subspace().range_basis();
    const HermitianOperator restricted =
        HermitianOperator::hermitian_part(basis.adjoint() * phi.perturbed(a).matrix() * basis);
    const Spectrum got = spectrum(restricted);
    const Spectrum want = spectrum(apply_map(phi.exact(), a));
    const double bound = phi.weight().evaluate(a) * phi.epsilon();
    std::vector<BoundReport> out;
    for (std::size_t j = 0; j < m; ++j) out.push_back(make_bound(std::abs(got[j] - want[j]), bound));
    return out;
}

BoundReport partition_bound(const ApproxDuality& phi, const HermitianOperator& h, double beta, double delta) {
    if (!(beta > 0.0) || !std::isfinite(beta) || !std::isfinite(delta)) {
        throw Error(ErrorCode::InvalidArgument, "need finite beta > 0 and finite Delta");
    }
    const DualityMap& exact = phi.exact();
    const double alpha = exact.arity();
    const double f = exact.scaling().evaluate(h);
    const double z_dual = trace_expm(phi.perturbed(h), -beta);
    const double z_src = trace_expm(h, -beta * f);
    const double lhs = std::abs(z_dual - alpha * z_src) / (alpha * z_src);

    const double log_tail = std::log(static_cast<double>(phi.target_dim())) - beta * delta -
                            std::log(alpha * static_cast<double>(exact.n())) + beta * f * operator_norm(h);
    const double weight = beta * phi.weight().evaluate(h) * phi.epsilon();
    if (log_tail > 700.0 || weight > 700.0) throw Error(ErrorCode::Overflow, "partition bound overflows");
    return make_bound(lhs, std::exp(log_tail) + std::expm1(weight));
}

BoundReport dynamics_bound(const ApproxDuality& phi, const HermitianOperator& h, const DensityState& rho, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "t must be finite and >= 0");
    if (rho.dim() != phi.target_dim()) throw Error(ErrorCode::DimMismatch, "state is not on the target space");
    const Projector enc_proj = phi.encoded_subspace();
    const ComplexMatrix& enc = enc_proj.matrix();
    if (max_abs_diff(enc * rho.matrix(), rho.matrix()) > 1e-9) {
        throw Error(ErrorCode::UnencodedState, "state has weight outside the encoded subspace");
    }
    const ComplexMatrix u1 = unitary_evolution(phi.perturbed(h), t);
    const ComplexMatrix u2 = unitary_evolution(phi.embedded_exact(h), t);
    const ComplexMatrix diff = u1 * rho.matrix() * u1.adjoint() - u2 * rho.matrix() * u2.adjoint();
    const double lhs = trace_norm(HermitianOperator::hermitian_part(diff));
    const double rhs = 2.0 * phi.epsilon() * phi.weight().evaluate(h) * t + phi.eta();
    return make_bound(lhs, rhs);
}

BoundReport dynamics_bound(const ApproxDuality& phi, const StateMap& w, const HermitianOperator& h,
                           const DensityState& rho, double t) {
    const DensityState encoded = apply_state_map(phi.exact(), w, rho);
    const DensityState full(HermitianOperator::hermitian_part(pad(encoded.matrix(), phi.target_dim())));
    return dynamics_bound(phi, h, full, t);
}

}  // namespace dualis
