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


#ifndef DUALIS_APPROX_HPP
#define DUALIS_APPROX_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dualis/duality.hpp"
#include "dualis/opscore.hpp"

namespace dualis {

class ApproxDuality;

/// Weight k(A) multiplying epsilon in the defect bound.
class ErrorWeight {
  public:
    enum class Kind { Constant, NormScaled, Composed };

    static ErrorWeight constant(double c);
    /// k(A) = c max(1, ||A||).
    static ErrorWeight norm_scaled(double c);
    /// k(A) = k2(restricted inner image) + L2 k1(A)^2 eps1 + L2 |f1(A)| ||A|| k1(A) + |f2(Phi1(A))| k1(A).
    static ErrorWeight composed(std::shared_ptr<const ApproxDuality> outer, std::shared_ptr<const ApproxDuality> inner);

    Kind kind() const noexcept { return kind_; }
    double coefficient() const noexcept { return c_; }
    double evaluate(const HermitianOperator& a) const;

  private:
    Kind kind_ = Kind::Constant;
    double c_ = 1.0;
    std::shared_ptr<const ApproxDuality> outer_;
    std::shared_ptr<const ApproxDuality> inner_;
};

/// Additive perturbation A -> Phi(A) (+) 0 + s k(A) E + J. E is a seeded
/// Hermitian term with operator norm 1 living on the encoded block (or the
/// identity there for Shift); J is a fixed positive block on the ancilla with
/// energies in [junk_floor, junk_floor + 1].
struct AdditivePerturbation {
    enum class Kind { Random, Shift };
    Kind kind = Kind::Random;
    std::uint64_t seed = 0;
    double scale = 0.0;
    double junk_floor = 0.0;
};

class ApproxDuality {
  public:
    /// epsilon defaults to |scale|, S to the encoded subspace I_m (+) 0.
    static ApproxDuality additive(DualityMap exact, AdditivePerturbation perturbation, ErrorWeight k, double eta,
                                  double lipschitz, std::size_t ancilla = 0, std::optional<Projector> s = std::nullopt,
                                  std::optional<double> epsilon = std::nullopt);

    const DualityMap& exact() const noexcept { return exact_; }
    std::size_t ancilla() const noexcept { return ancilla_; }
    std::size_t target_dim() const noexcept { return exact_.m() + ancilla_; }
    const Projector& subspace() const noexcept { return s_; }
    double epsilon() const noexcept { return epsilon_; }
    double eta() const noexcept { return eta_; }
    double lipschitz() const noexcept { return lipschitz_; }
    const ErrorWeight& weight() const noexcept { return k_; }
    bool is_composed() const noexcept { return static_cast<bool>(outer_); }
    const AdditivePerturbation& perturbation() const noexcept { return additive_; }
    const ApproxDuality& outer() const;
    const ApproxDuality& inner() const;

    /// The perturbed map evaluated on A, an operator on the full target space.
    HermitianOperator perturbed(const HermitianOperator& a) const;
    /// Phi(A) (+) 0 on the full target space.
    HermitianOperator embedded_exact(const HermitianOperator& a) const;
    /// Top-left m x m block of a target-space operator.
    HermitianOperator restrict_encoded(const HermitianOperator& x) const;
    /// I_m (+) 0.
    Projector encoded_subspace() const;

  private:
    friend ApproxDuality compose_approx(std::shared_ptr<const ApproxDuality>, std::shared_ptr<const ApproxDuality>,
                                        std::optional<double>);
    ApproxDuality(DualityMap exact, std::size_t ancilla, Projector s, double epsilon, double eta, ErrorWeight k,
                  double lipschitz);

    DualityMap exact_;
    std::size_t ancilla_;
    Projector s_;
    double epsilon_;
    double eta_;
    ErrorWeight k_;
    double lipschitz_;
    AdditivePerturbation additive_;
    std::optional<HermitianOperator> term_;  // E on the target space
    std::optional<HermitianOperator> junk_;  // J on the target space
    std::shared_ptr<const ApproxDuality> outer_;
    std::shared_ptr<const ApproxDuality> inner_;
};

struct BoundReport {
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

inline BoundReport make_bound(double lhs, double rhs) { return BoundReport{lhs, rhs, lhs <= rhs + 1e-12}; }

/// ||S Phi~(A) S - (Phi(A) (+) 0)|| in operator norm.
double defect(const ApproxDuality& phi, const HermitianOperator& a);

/// defect(A) against k(A) epsilon.
BoundReport defect_audit(const ApproxDuality& phi, const HermitianOperator& a);

/// ||Phi(M) - Phi'(M)|| against (sqrt f + sqrt f') ||sqrt f U - sqrt f' U'|| ||M||.
BoundReport similar_map_bound(const DualityMap& phi, const DualityMap& phi_prime, const HermitianOperator& m);

/// ||Phi(M) - Phi(M')|| against ||f(M) M - f(M') M'||; an equality, pass at 1e-9.
BoundReport same_map_two_inputs_bound(const DualityMap& phi, const HermitianOperator& m,
                                      const HermitianOperator& m_prime);

/// inner's S must be the encoded subspace so that its restricted image is an
/// operator on outer's source. The composite's Lipschitz constant is 0 when
/// both parts have constant scaling, otherwise it must be supplied.
ApproxDuality compose_approx(std::shared_ptr<const ApproxDuality> outer, std::shared_ptr<const ApproxDuality> inner,
                             std::optional<double> lipschitz = std::nullopt);

/// Weyl comparison of the spectrum of Phi~(A) compressed to S with the
/// spectrum of Phi(A), one report per eigenvalue index.
std::vector<BoundReport> eigenvalue_bound(const ApproxDuality& phi, const HermitianOperator& a);

/// Relative error of Tr exp(-beta Phi~(H)) against (p+q) Z_H(f(H) beta).
BoundReport partition_bound(const ApproxDuality& phi, const HermitianOperator& h, double beta, double delta);

/// Trace distance between evolutions of an encoded target-space state under
/// Phi~(H) and Phi(H) (+) 0, against 2 eps k(H) t + eta.
BoundReport dynamics_bound(const ApproxDuality& phi, const HermitianOperator& h, const DensityState& rho, double t);

/// Same, with the source state encoded through the state map first.
BoundReport dynamics_bound(const ApproxDuality& phi, const StateMap& w, const HermitianOperator& h,
                           const DensityState& rho, double t);

}  // namespace dualis

#endif
