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


#ifndef DUALIS_ISING_HPP
#define DUALIS_ISING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dualis/duality.hpp"
#include "dualis/opscore.hpp"

namespace dualis {

enum class Boundary { Periodic, Open };

/// Square-lattice Ising model on a rows x cols torus, H = -J sum sigma_i sigma_j.
/// Every site owns a bond to its right and lower neighbour, so the torus has
/// 2N bonds; a 2-wide direction doubles bonds and a 1-wide one makes self
/// loops, both kept as they are.
class IsingLattice {
  public:
    static constexpr int kMaxSites = 25;

    IsingLattice(int rows, int cols, double coupling, Boundary boundary = Boundary::Periodic);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int sites() const noexcept { return rows_ * cols_; }
    int bond_count() const noexcept { return 2 * sites(); }
    double coupling() const noexcept { return coupling_; }
    const std::vector<std::pair<int, int>>& bonds() const noexcept { return bonds_; }

  private:
    int rows_;
    int cols_;
    double coupling_;
    std::vector<std::pair<int, int>> bonds_;
};

struct ThermalPoint {
    double beta;
    double k;  // J beta

    static ThermalPoint from_beta(const IsingLattice& lat, double beta);
};

/// Energy levels indexed by the number of anti-aligned bonds n, with energy
/// -J (N_b - 2 n).
struct EnergyHistogram {
    int sites = 0;
    int bond_count = 0;
    double coupling = 1.0;
    std::vector<int> antibonds;
    std::vector<double> energies;
    std::vector<std::uint64_t> counts;
};

EnergyHistogram enumerate_energies(const IsingLattice& lat);

/// ln Z at dimensionless coupling K, by log-sum-exp.
double log_partition_function(const EnergyHistogram& hist, double k);

/// Z itself; Overflow when it does not fit a double.
double partition_function(const EnergyHistogram& hist, double k);
double partition_function(const IsingLattice& lat, const ThermalPoint& pt);

/// K~ = -1/2 ln tanh K.
double dual_coupling(double k);

/// Fixed point of dual_coupling by bisection.
double self_dual_coupling();

struct KwResidual {
    double k = 0.0;
    double k_dual = 0.0;
    double log_z = 0.0;
    double log_z_dual = 0.0;
    double residual_f = 0.0;
    double residual_z = 0.0;
};

KwResidual kw_relation_residual(const EnergyHistogram& hist, double k);

struct KwDuality {
    DualityMap map;
    double coupling;

    /// beta -> -ln tanh(J beta) / (2 J).
    double temperature(double beta) const;
};

/// p = 1, q = 0, U = I, f = -ln tanh(J beta) / (2 J beta) on an n-dim space.
KwDuality kw_duality_map(std::size_t n, double coupling, double beta);

struct GibbsMapReport {
    double exponent_plus = 0.0;   // (1/(2 J beta)) ln tanh(J beta)
    double exponent_minus = 0.0;  // its negative
    double distance_plus = 0.0;
    double distance_minus = 0.0;
    int chosen_sign = 1;
    double chosen_distance = 0.0;
};

/// Maps Gibbs(H, beta) through rho -> rho^x / Tr rho^x for both signs of the
/// exponent and reports the trace distance of each to Gibbs(H, beta f).
GibbsMapReport gibbs_state_map_check(double coupling, double beta, const HermitianOperator& h, int exponent_sign);

enum class ExpansionRegime { Low, High };

/// low:  2 e^{2NK} (1 + N e^{-8K} + 2N e^{-12K}), K >= 1.
/// high: 2^N cosh^{2N} K (1 + N tanh^4 K),        K <= 0.2.
double expansion_leading_terms(double k, int sites, ExpansionRegime regime);

}  // namespace dualis

#endif
