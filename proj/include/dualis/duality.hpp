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

#ifndef DUALIS_DUALITY_HPP
#define DUALIS_DUALITY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualis/opscore.hpp"

namespace dualis {

class DualityMap;

/// Operator-dependent rescaling f of a duality map.
///
/// Constant returns c on every input, the zero operator included. The other
/// kinds return 0 on the zero operator. KramersWannier evaluates to
/// -ln tanh(J beta) / (2 J beta) on every nonzero input. Table looks up the
/// sorted spectrum of its input, rounded to a 1e-9 grid, so the value is
/// invariant under unitary conjugation. Composed evaluates
/// outer(inner(A)) * inner.f(A), the scaling of an exact composition.
class ScalingFunction {
  public:
    enum class Kind { Constant, KramersWannier, Table, Composed };

    struct TableEntry {
        std::vector<double> spectrum;
        double value;
    };

    static ScalingFunction constant(double c);
    static ScalingFunction kramers_wannier(double coupling, double beta);
    static ScalingFunction table(std::vector<TableEntry> entries, double lipschitz);
    static ScalingFunction composed(ScalingFunction outer, std::shared_ptr<const DualityMap> inner);

    Kind kind() const noexcept { return kind_; }
    double evaluate(const HermitianOperator& a) const;

    /// Declared Lipschitz constant on the working compact set; NaN when
    /// nothing was declared (composed scalings of non-constant parts).
    double lipschitz() const;

    /// Value on nonzero inputs when it does not depend on the operator.
    std::optional<double> uniform_value() const;

    double constant_value() const { return c_; }
    double coupling() const { return coupling_; }
    double beta() const { return beta_; }
    const std::vector<TableEntry>& entries() const { return entries_; }
    const ScalingFunction& outer() const;
    const DualityMap& inner() const;

    static std::vector<std::int64_t> fingerprint(const HermitianOperator& a);

  private:
    struct Composition;

    Kind kind_ = Kind::Constant;
    double c_ = 1.0;
    double coupling_ = 0.0;
    double beta_ = 0.0;
    double lipschitz_ = 0.0;
    std::vector<TableEntry> entries_;
    std::shared_ptr<const Composition> composition_;
};

/// Canonical duality map A -> f(A) U (A^{(+)p} (+) conj(A)^{(+)q}) U^dagger.
class DualityMap {
  public:
    static constexpr double kUnitaryTol = 1e-10;

    DualityMap(std::size_t n, int p, int q, ComplexMatrix u, ScalingFunction f);

    static DualityMap identity(std::size_t n);
    /// Haar-random U with the given arity and scaling.
    static DualityMap random(std::size_t n, int p, int q, Rng& rng, ScalingFunction f);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return n_ * static_cast<std::size_t>(p_ + q_); }
    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    int arity() const noexcept { return p_ + q_; }
    const ComplexMatrix& unitary() const noexcept { return u_; }
    const ScalingFunction& scaling() const noexcept { return f_; }

  private:
    std::size_t n_;
    int p_;
    int q_;
    ComplexMatrix u_;
    ScalingFunction f_;
};

/// Convex weights over the p unitary blocks of a duality map.
class StateMap {
  public:
    explicit StateMap(std::vector<double> weights);
    static StateMap uniform(int p);

    std::span<const double> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }

  private:
    std::vector<double> weights_;
};

/// Outcome of a numerical check. `deviation` is compared against `bound`,
/// which is `tolerance` possibly scaled by the size of the inputs; lhs/rhs
/// carry the two sides when the check is a single scalar identity.
struct CheckReport {
    bool pass = false;
    double deviation = 0.0;
    double tolerance = 0.0;
    double bound = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct MixtureTerm {
    double weight;
    HermitianOperator op;
};

HermitianOperator apply_map(const DualityMap& phi, const HermitianOperator& a);

/// f * W (A^{(+)p} (+) conj(A)^{(+)q}) W^dagger for an arbitrary square W.
/// Used to inject faults (non-unitary W) into otherwise canonical maps.
HermitianOperator apply_with_conjugator(const ComplexMatrix& w, int p, int q, double f, const HermitianOperator& a);

/// Compares spec[image] with f * spec[A] repeated `arity` times as sorted
/// multisets. Deviation is the largest pairwise gap; the tolerance scales
/// with max(1, largest expected magnitude).
CheckReport spectral_relation(const Spectrum& source, const HermitianOperator& image, double f, int arity,
                              double tol);

CheckReport verify_spectral_axiom(const DualityMap& phi, const HermitianOperator& a, double tol);

/// Phi(sum p_i a_i) = f(sum p_i a_i) sum (p_i / f(a_i)) Phi(a_i), in operator norm
/// relative to max(1, ||LHS||).
CheckReport verify_convexity_identity(const DualityMap& phi, std::span<const MixtureTerm> terms, double tol);

/// Images of complementary and of mutually orthogonal projectors, divided by
/// c f(cP), are projectors with the same orthogonality relations. Also checks
/// that an image projector written in the eigenbasis of its complement has
/// vanishing off-diagonal blocks.
CheckReport verify_projector_lemmas(const DualityMap& phi, std::uint64_t seed, double tol = 1e-9);

/// rho -> U (alpha_1 rho (+) ... (+) alpha_p rho (+) 0 ...) U^dagger.
DensityState apply_state_map(const DualityMap& phi, const StateMap& w, const DensityState& rho);

/// Tr[Phi(A) Phi_state(rho)] against f(A) Tr[A rho].
CheckReport verify_born_rule(const DualityMap& phi, const StateMap& w, const HermitianOperator& a,
                             const DensityState& rho, double tol);

/// State map commutes with evolution for time t in the source and t / f(H)
/// under Phi(H) in the target; deviation is the trace-norm distance.
CheckReport verify_time_dynamics(const DualityMap& phi, const StateMap& w, const HermitianOperator& h,
                                 const DensityState& rho, double t, double tol);

/// The duality map A -> outer(inner(A)).
DualityMap compose_exact(const DualityMap& outer, const DualityMap& inner);

}  // namespace dualis

#endif
