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


#include "dualis/ising.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "dualis/error.hpp"

namespace dualis {

IsingLattice::IsingLattice(int rows, int cols, double coupling, Boundary boundary)
    : rows_(rows), cols_(cols), coupling_(coupling) {
    if (boundary != Boundary::Periodic) throw Error(ErrorCode::Unsupported, "only periodic boundaries are supported");
    if (rows < 1 || cols < 1) throw Error(ErrorCode::InvalidArgument, "lattice sides must be positive");
    if (rows * cols > kMaxSites) {
        throw Error(ErrorCode::TooLarge, std::to_string(rows) + "x" + std::to_string(cols) + " exceeds " +
                                             std::to_string(kMaxSites) + " sites");
    }
    if (!(coupling > 0.0) || !std::isfinite(coupling)) throw Error(ErrorCode::DomainError, "J must be > 0");
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int s = r * cols + c;
            bonds_.emplace_back(s, r * cols + (c + 1) % cols);
            bonds_.emplace_back(s, ((r + 1) % rows) * cols + c);
        }
    }
}

ThermalPoint ThermalPoint::from_beta(const IsingLattice& lat, double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(ErrorCode::DomainError, "beta must be > 0");
    return ThermalPoint{beta, lat.coupling() * beta};
}

EnergyHistogram enumerate_energies(const IsingLattice& lat) {
    const int n = lat.sites();
    const int nb = lat.bond_count();
    // Self loops never change; drop them from the flip bookkeeping.
    std::vector<std::array<int, 4>> adj(static_cast<std::size_t>(n));
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : lat.bonds()) {
        if (a == b) continue;
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(degree[static_cast<std::size_t>(a)]++)] = b;
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(degree[static_cast<std::size_t>(b)]++)] = a;
    }

    // The last spin stays up; the global flip doubles every count.
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(nb) + 1, 0);
    std::uint32_t state = 0;
    int anti = 0;
    hist[0] = 1;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t g = 1; g < steps; ++g) {
        const int site = std::countr_zero(g);
        const std::uint32_t mine = (state >> site) & 1u;
        const auto& nbrs = adj[static_cast<std::size_t>(site)];
        for (int k = 0; k < degree[static_cast<std::size_t>(site)]; ++k) {
            anti += (((state >> nbrs[static_cast<std::size_t>(k)]) & 1u) == mine) ? 1 : -1;
        }
        state ^= 1u << site;
        ++hist[static_cast<std::size_t>(anti)];
    }

    EnergyHistogram out;
    out.sites = n;
    out.bond_count = nb;
    out.coupling = lat.coupling();
    for (int a = 0; a <= nb; ++a) {
        if (hist[static_cast<std::size_t>(a)] == 0) continue;
        out.antibonds.push_back(a);
        out.energies.push_back(-lat.coupling() * static_cast<double>(nb - 2 * a));
        out.counts.push_back(2 * hist[static_cast<std::size_t>(a)]);
    }
    return out;
}

double log_partition_function(const EnergyHistogram& hist, double k) {
    if (!std::isfinite(k)) throw Error(ErrorCode::DomainError, "K must be finite");
    double top = -std::numeric_limits<double>::infinity();
    std::vector<double> terms;
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        const double t = k * static_cast<double>(hist.bond_count - 2 * hist.antibonds[i]) +
                         std::log(static_cast<double>(hist.counts[i]));
        terms.push_back(t);
        top = std::max(top, t);
    }
    double s = 0.0;
    for (double t : terms) s += std::exp(t - top);
    return top + std::log(s);
}

double partition_function(const EnergyHistogram& hist, double k) {
    if (!std::isfinite(k)) throw Error(ErrorCode::DomainError, "K must be finite");
    double z = 0.0;
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        const double x = k * static_cast<double>(hist.bond_count - 2 * hist.antibonds[i]);
        if (x > 700.0) throw Error(ErrorCode::Overflow, "Boltzmann weight exceeds double range");
        z += static_cast<double>(hist.counts[i]) * std::exp(x);
    }
    if (!std::isfinite(z)) throw Error(ErrorCode::Overflow, "partition function exceeds double range");
    return z;
}

double partition_function(const IsingLattice& lat, const ThermalPoint& pt) {
    return partition_function(enumerate_energies(lat), pt.k);
}

double dual_coupling(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) throw Error(ErrorCode::DomainError, "dual coupling needs K > 0");
    // ln tanh K = ln(1 - e^{-2K}) - ln(1 + e^{-2K}), stable for large K.
    const double e = std::exp(-2.0 * k);
    return -0.5 * (std::log1p(-e) - std::log1p(e));
}

double self_dual_coupling() {
    double lo = 0.1, hi = 2.0;  // D(K) - K changes sign once on this bracket
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (dual_coupling(mid) > mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

KwResidual kw_relation_residual(const EnergyHistogram& hist, double k) {
    KwResidual r;
    r.k = k;
    r.k_dual = dual_coupling(k);
    r.log_z = log_partition_function(hist, k);
    r.log_z_dual = log_partition_function(hist, r.k_dual);
    const double n = hist.sites;
    const double log_sinh = std::log(std::sinh(2.0 * k));
    r.residual_f = std::abs(-r.log_z_dual / n + r.log_z / n - log_sinh);
    r.residual_z = std::abs(std::expm1(r.log_z_dual + n * log_sinh - r.log_z));
    return r;
}

double KwDuality::temperature(double beta) const {
    if (!(beta > 0.0)) throw Error(ErrorCode::DomainError, "beta must be > 0");
    return dual_coupling(coupling * beta) / coupling;
}

KwDuality kw_duality_map(std::size_t n, double coupling, double beta) {
    DualityMap map(n, 1, 0, ComplexMatrix::identity(n), ScalingFunction::kramers_wannier(coupling, beta));
    return KwDuality{std::move(map), coupling};
}

namespace {

HermitianOperator gibbs(const HermitianOperator& h, double beta) {
    const HermitianOperator w = expm_hermitian(h, -beta);
    return (1.0 / w.matrix().trace().real()) * w;
}

}  // namespace

GibbsMapReport gibbs_state_map_check(double coupling, double beta, const HermitianOperator& h, int exponent_sign) {
    if (exponent_sign != 1 && exponent_sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
    if (!(coupling > 0.0) || !(beta > 0.0)) throw Error(ErrorCode::DomainError, "need J, beta > 0");
    const double k = coupling * beta;
    const double f = dual_coupling(k) / k;

    const HermitianOperator rho = gibbs(h, beta);
    if (!(spectrum(rho).min() > 0.0)) throw Error(ErrorCode::SingularState, "Gibbs state has a zero eigenvalue");
    const HermitianOperator target = gibbs(h, beta * f);

    GibbsMapReport r;
    r.exponent_plus = -f;
    r.exponent_minus = f;
    auto distance = [&](double x) {
        const HermitianOperator img = apply_function(rho, [x](double l) { return std::pow(l, x); });
        const HermitianOperator normed = (1.0 / img.matrix().trace().real()) * img;
        return 0.5 * trace_norm(normed - target);
    };
    r.distance_plus = distance(r.exponent_plus);
    r.distance_minus = distance(r.exponent_minus);
    r.chosen_sign = exponent_sign;
    r.chosen_distance = exponent_sign == 1 ? r.distance_plus : r.distance_minus;
    return r;
}

double expansion_leading_terms(double k, int sites, ExpansionRegime regime) {
    if (sites < 1) throw Error(ErrorCode::InvalidArgument, "need at least one site");
    const double n = sites;
    if (regime == ExpansionRegime::Low) {
        if (!(k >= 1.0)) throw Error(ErrorCode::RegimeViolation, "low-temperature series needs K >= 1");
        return 2.0 * std::exp(2.0 * n * k) * (1.0 + n * std::exp(-8.0 * k) + 2.0 * n * std::exp(-12.0 * k));
    }
    if (!(k > 0.0 && k <= 0.2)) throw Error(ErrorCode::RegimeViolation, "high-temperature series needs 0 < K <= 0.2");
    const double t = std::tanh(k);
    return std::pow(2.0, n) * std::pow(std::cosh(k), 2.0 * n) * (1.0 + n * t * t * t * t);
}

}  // namespace dualis
