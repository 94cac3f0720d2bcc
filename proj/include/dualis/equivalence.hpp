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


#ifndef DUALIS_EQUIVALENCE_HPP
#define DUALIS_EQUIVALENCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualis/duality.hpp"
#include "dualis/opscore.hpp"

namespace dualis {

/// Power sums m_k = sum_j mu_j^k of a spectrum that is the alpha = x/y fold
/// duplication of the values to be recovered.
struct PowerSumSequence {
    std::int64_t alpha_num = 1;
    std::int64_t alpha_den = 1;
    std::vector<double> sums;

    std::size_t order() const noexcept { return sums.size(); }
};

/// Twelve charges evenly spaced on [0.1, 5].
std::vector<double> default_charge_grid();

/// alpha Tr exp(-J f A) against Tr exp(-J B) at every charge J; deviation is
/// the worst relative error, lhs/rhs are the two sides at that charge.
CheckReport thermal_relation(const HermitianOperator& a, const HermitianOperator& b, double f, double alpha,
                             std::span<const double> charges, double tol);

/// Thermal axiom for a canonical map with alpha = p + q.
CheckReport verify_thermal_axiom(const DualityMap& phi, const HermitianOperator& a, std::span<const double> charges,
                                 double tol);

PowerSumSequence power_sums(const Spectrum& spec, int order);

/// Recovers d real values from the first d power sums (after dividing out the
/// alpha-fold duplication). Newton-Girard to elementary symmetric
/// polynomials, then Durand-Kerner on the monic polynomial.
Spectrum reconstruct_spectrum(const PowerSumSequence& ps, int d);

struct PeelReport {
    bool pass = false;
    double deviation = 0.0;
    std::size_t peels = 0;
    std::string stage;  // "ok", "peel" or "sign"
};

/// Finite-order replay of the l-infinity peeling argument. The values of
/// f * specA are repeated x times, those of specDual y times; the largest
/// magnitudes are matched one at a time through P_even-norms, and odd power
/// sums then rule out sign flips.
PeelReport verify_peel_linf(const Spectrum& spec_a, const Spectrum& spec_dual, double f, std::int64_t x,
                            std::int64_t y, int p_even);

struct EntropicReport {
    double offset_measured = 0.0;
    double offset_expected = 0.0;
    double residual = 0.0;
};

struct EntropicAudit {
    std::vector<EntropicReport> states;
    /// S(state map(rho)) - S(rho) - H(w), per state; empty when p = 0.
    std::vector<double> state_map_residuals;
    double zero_image_norm = 0.0;
    CheckReport convexity;
    bool pass = false;
};

/// Entropic axioms for a map with f = 1/(p+q). Images of states are taken
/// through the operator map itself, which sends states to states here.
EntropicAudit verify_entropic_axioms(const DualityMap& phi, const std::optional<StateMap>& w,
                                     std::span<const DensityState> states, double tol);

/// A -> Phi(A) / ((p+q) f(A)).
DualityMap derive_entropic_map(const DualityMap& phi);

struct MixtureState {
    double weight;
    DensityState state;
};

/// sum p S(rho) - sum p ln p - S(sum p rho); zero exactly when the supports
/// are pairwise orthogonal.
double mixture_entropy_residual(std::span<const MixtureState> components);

/// True when Tr[rho_x rho_y] <= tol for every pair x != y.
bool supports_orthogonal(std::span<const MixtureState> components, double tol = 1e-9);

/// rho -> (1/alpha) U (V_1 rho V_1^dagger (+) ... (+) M_1 conj(rho) M_1^dagger (+) ...) U^dagger,
/// the antiunitary blocks written as M K with K entrywise conjugation.
class WignerExtension {
  public:
    WignerExtension(std::size_t n, ComplexMatrix u, std::vector<ComplexMatrix> unitaries,
                    std::vector<ComplexMatrix> antiunitary_parts);

    std::size_t n() const noexcept { return n_; }
    int p() const noexcept { return static_cast<int>(v_.size()); }
    int q() const noexcept { return static_cast<int>(w_.size()); }
    int alpha() const noexcept { return p() + q(); }
    const ComplexMatrix& unitary() const noexcept { return u_; }
    const std::vector<ComplexMatrix>& unitaries() const noexcept { return v_; }
    const std::vector<ComplexMatrix>& antiunitary_parts() const noexcept { return w_; }

    DensityState apply(const DensityState& rho) const;

  private:
    std::size_t n_;
    ComplexMatrix u_;
    std::vector<ComplexMatrix> v_;
    std::vector<ComplexMatrix> w_;
};

struct WignerReport {
    double offset_measured = 0.0;  // worst over the sampled states
    double offset_expected = 0.0;
    double offset_residual = 0.0;
    double convexity_deviation = 0.0;
    double spectral_deviation = 0.0;
    bool pass = false;
};

struct WignerSample {
    WignerExtension map;
    WignerReport report;
};

/// Entropy offset (1e-9), convexity (1e-10) and spectrum scaling (1e-9) on
/// random states drawn from `seed`.
WignerReport verify_wigner_extension(const WignerExtension& ext, std::uint64_t seed);

WignerSample sample_wigner_extension(std::size_t n, int p, int q, std::uint64_t seed);

}  // namespace dualis

#endif
