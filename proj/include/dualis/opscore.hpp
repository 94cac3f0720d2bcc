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

#ifndef DUALIS_OPSCORE_HPP
#define DUALIS_OPSCORE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace dualis {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
  public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::span<const cplx> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const cplx> entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix transpose() const;
    cplx trace() const;
    double max_abs() const;
    bool is_zero() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> data_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block diagonal matrix with the given blocks in order.
ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_unitary(const ComplexMatrix& u, double tol);

/// Square Hermitian matrix. The validating constructor rejects inputs whose
/// anti-Hermitian part exceeds 1e-12 (max entry) and stores (A + A^dagger)/2.
class HermitianOperator {
  public:
    static constexpr double kConstructionTol = 1e-12;

    explicit HermitianOperator(ComplexMatrix m);

    /// Symmetrizes a computed result without the construction check; use for
    /// products such as U X U^dagger whose asymmetry is pure rounding.
    static HermitianOperator hermitian_part(const ComplexMatrix& m);
    static HermitianOperator diagonal(std::span<const double> values);
    static HermitianOperator zero(std::size_t n);

    std::size_t dim() const noexcept { return m_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    bool is_zero() const { return m_.is_zero(); }

    HermitianOperator conjugate() const;
    friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
    friend HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b);
    friend HermitianOperator operator*(double s, const HermitianOperator& a);

  private:
    struct Unchecked {};
    HermitianOperator(ComplexMatrix m, Unchecked);
    ComplexMatrix m_;
};

/// Eigenvalues in non-decreasing order, repeated according to multiplicity.
class Spectrum {
  public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    double min() const { return values_.front(); }
    double max() const { return values_.back(); }

  private:
    std::vector<double> values_;
};

/// Positive semidefinite, unit-trace Hermitian operator (tolerance 1e-10).
class DensityState {
  public:
    static constexpr double kTol = 1e-10;

    explicit DensityState(HermitianOperator rho);
    explicit DensityState(ComplexMatrix rho) : DensityState(HermitianOperator(std::move(rho))) {}
    static DensityState pure(std::span<const cplx> psi);
    static DensityState maximally_mixed(std::size_t n);

    std::size_t dim() const noexcept { return rho_.dim(); }
    const HermitianOperator& op() const noexcept { return rho_; }
    const ComplexMatrix& matrix() const noexcept { return rho_.matrix(); }

  private:
    HermitianOperator rho_;
};

/// Hermitian idempotent, P^2 = P within 1e-9.
class Projector {
  public:
    static constexpr double kTol = 1e-9;

    explicit Projector(HermitianOperator p);
    explicit Projector(ComplexMatrix p) : Projector(HermitianOperator(std::move(p))) {}

    std::size_t dim() const noexcept { return p_.dim(); }
    std::size_t rank() const;
    const HermitianOperator& op() const noexcept { return p_; }
    const ComplexMatrix& matrix() const noexcept { return p_.matrix(); }

    /// dim x rank matrix whose orthonormal columns span the range.
    ComplexMatrix range_basis() const;

  private:
    HermitianOperator p_;
};

struct EigenDecomposition {
    Spectrum values;
    ComplexMatrix vectors;  // columns are eigenvectors, ordered with values
};

/// Cyclic complex Jacobi. Throws NonConvergence after 100 sweeps.
EigenDecomposition eig_hermitian(const HermitianOperator& a);
Spectrum spectrum(const HermitianOperator& a);

/// V g(Lambda) V^dagger for a real-valued function g.
HermitianOperator apply_function(const HermitianOperator& a, const std::function<double(double)>& g);

/// e^{sA}. Throws Overflow if max |s lambda| > 700.
HermitianOperator expm_hermitian(const HermitianOperator& a, double s);

/// Tr e^{sA}, with the same overflow contract as expm_hermitian.
double trace_expm(const HermitianOperator& a, double s);

/// e^{-iHt} via the eigendecomposition of H.
ComplexMatrix unitary_evolution(const HermitianOperator& h, double t);

/// -sum lambda ln lambda in nats; eigenvalues below 1e-14 count as zero.
double von_neumann_entropy(const DensityState& rho);
double entropy_of_probabilities(std::span<const double> p);

double operator_norm(const HermitianOperator& a);
double trace_norm(const HermitianOperator& a);
/// Largest singular value of an arbitrary matrix.
double spectral_norm(const ComplexMatrix& m);

/// A^{(+)p} (+) conj(A)^{(+)q}.
HermitianOperator block_embed(const HermitianOperator& a, int p, int q);

/// Deterministic 64-bit stream for test-case generation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal();
    double uniform();  // [0, 1)
    cplx complex_normal();  // E|z|^2 = 1
    std::uint64_t next() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

ComplexMatrix random_unitary(std::size_t n, Rng& rng);
HermitianOperator random_hermitian(std::size_t n, Rng& rng);
DensityState random_state(std::size_t n, Rng& rng);
/// Rank-r orthogonal projector drawn from a Haar unitary.
Projector random_projector(std::size_t n, std::size_t rank, Rng& rng);

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);
HermitianOperator random_hermitian(std::size_t n, std::uint64_t seed);
DensityState random_state(std::size_t n, std::uint64_t seed);

}  // namespace dualis

#endif
