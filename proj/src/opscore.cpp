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

#include "dualis/opscore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dualis/error.hpp"

namespace dualis {

namespace {

constexpr std::size_t kMaxEigDim = 512;
constexpr int kMaxSweeps = 100;
constexpr double kExpLimit = 700.0;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimMismatch, "matrix shapes " + std::to_string(a.rows()) + "x" +
                                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                                "x" + std::to_string(b.cols()) + " differ");
    }
}

}  // namespace

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotDensityState: return "NotDensityState";
        case ErrorCode::NotProjector: return "NotProjector";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::InvalidArity: return "InvalidArity";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::ScalingUndefined: return "ScalingUndefined";
        case ErrorCode::ZeroOperandInMixture: return "ZeroOperandInMixture";
        case ErrorCode::NoUnitaryBlocks: return "NoUnitaryBlocks";
        case ErrorCode::WrongScaling: return "WrongScaling";
        case ErrorCode::InvalidDistribution: return "InvalidDistribution";
        case ErrorCode::NonRealRoot: return "NonRealRoot";
        case ErrorCode::DimIncompatible: return "DimIncompatible";
        case ErrorCode::NegativeScaling: return "NegativeScaling";
        case ErrorCode::RankMismatch: return "RankMismatch";
        case ErrorCode::UnencodedState: return "UnencodedState";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::SingularState: return "SingularState";
        case ErrorCode::RegimeViolation: return "RegimeViolation";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(rows * cols) + " entries, got " +
                                                    std::to_string(data_.size()));
    }
    for (const cplx& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::InvalidArgument, "matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (cplx& z : out.data_) z = std::conj(z);
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : data_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const cplx& z) { return z == cplx{0.0, 0.0}; });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (cplx& z : data_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw Error(ErrorCode::DimMismatch, "cannot multiply " + std::to_string(a.rows_) + "x" +
                                                std::to_string(a.cols_) + " by " + std::to_string(b.rows_) + "x" +
                                                std::to_string(b.cols_));
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b);
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks) {
    if (blocks.empty()) throw Error(ErrorCode::InvalidArgument, "direct sum of no blocks");
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    ComplexMatrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    if (!u.is_square()) return false;
    return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) <= tol;
}

// ---------------------------------------------------------------------------
// HermitianOperator and friends

HermitianOperator::HermitianOperator(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw Error(ErrorCode::NotHermitian, "matrix is not square");
    const std::size_t n = m_.rows();
    double asym = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) asym = std::max(asym, std::abs(m_(r, c) - std::conj(m_(c, r))));
    if (asym > kConstructionTol) {
        throw Error(ErrorCode::NotHermitian, "max |A - A^dagger| = " + std::to_string(asym));
    }
    *this = hermitian_part(m_);
}

HermitianOperator HermitianOperator::hermitian_part(const ComplexMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NotHermitian, "matrix is not square");
    ComplexMatrix h = m;
    const std::size_t n = m.rows();
    for (std::size_t r = 0; r < n; ++r) {
        h(r, r) = m(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const cplx v = 0.5 * (m(r, c) + std::conj(m(c, r)));
            h(r, c) = v;
            h(c, r) = std::conj(v);
        }
    }
    return HermitianOperator(std::move(h), Unchecked{});
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> values) {
    return HermitianOperator(ComplexMatrix::diagonal(values), Unchecked{});
}

HermitianOperator HermitianOperator::zero(std::size_t n) { return HermitianOperator(ComplexMatrix(n, n), Unchecked{}); }

HermitianOperator HermitianOperator::conjugate() const { return HermitianOperator(m_.conjugate(), Unchecked{}); }

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
    return HermitianOperator(a.m_ + b.m_, HermitianOperator::Unchecked{});
}

HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
    return HermitianOperator(a.m_ - b.m_, HermitianOperator::Unchecked{});
}

HermitianOperator operator*(double s, const HermitianOperator& a) {
    return HermitianOperator(a.m_ * cplx(s), HermitianOperator::Unchecked{});
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
}

DensityState::DensityState(HermitianOperator rho) : rho_(std::move(rho)) {
    const double tr = rho_.matrix().trace().real();
    if (std::abs(tr - 1.0) > kTol) {
        throw Error(ErrorCode::NotDensityState, "trace " + std::to_string(tr) + " differs from 1");
    }
    const Spectrum s = spectrum(rho_);
    if (s.min() < -kTol) {
        throw Error(ErrorCode::NotDensityState, "negative eigenvalue " + std::to_string(s.min()));
    }
}

DensityState DensityState::pure(std::span<const cplx> psi) {
    double norm2 = 0.0;
    for (const cplx& z : psi) norm2 += std::norm(z);
    if (norm2 == 0.0) throw Error(ErrorCode::InvalidArgument, "zero vector");
    ComplexMatrix m(psi.size(), psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i)
        for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]) / norm2;
    return DensityState(HermitianOperator::hermitian_part(m));
}

DensityState DensityState::maximally_mixed(std::size_t n) {
    std::vector<double> d(n, 1.0 / static_cast<double>(n));
    return DensityState(HermitianOperator::diagonal(d));
}

Projector::Projector(HermitianOperator p) : p_(std::move(p)) {
    const double err = max_abs_diff(p_.matrix() * p_.matrix(), p_.matrix());
    if (err > kTol) throw Error(ErrorCode::NotProjector, "max |P^2 - P| = " + std::to_string(err));
}

std::size_t Projector::rank() const { return static_cast<std::size_t>(std::llround(p_.matrix().trace().real())); }

ComplexMatrix Projector::range_basis() const {
    const EigenDecomposition e = eig_hermitian(p_);
    const std::size_t n = dim();
    const std::size_t r = rank();
    if (r == 0) throw Error(ErrorCode::RankMismatch, "projector has rank zero");
    ComplexMatrix b(n, r);
    // Eigenvalues are sorted ascending so the unit eigenvalues come last.
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < n; ++i) b(i, k) = e.vectors(i, n - r + k);
    return b;
}

// ---------------------------------------------------------------------------
// Eigensolver

EigenDecomposition eig_hermitian(const HermitianOperator& input) {
    const std::size_t n = input.dim();
    if (n > kMaxEigDim) {
        throw Error(ErrorCode::InvalidArgument, "dimension " + std::to_string(n) + " exceeds 512");
    }
    ComplexMatrix a = input.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    double frob2 = 0.0;
    for (const cplx& z : a.entries()) frob2 += std::norm(z);
    const double target = 1e-15 * std::sqrt(frob2);

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off2 = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off2 += 2.0 * std::norm(a(p, q));
        if (std::sqrt(off2) <= target) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx b = a(p, q);
                const double absb = std::abs(b);
                if (absb == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                if (sweep > 3 && std::abs(app) + 100.0 * absb == std::abs(app) &&
                    std::abs(aqq) + 100.0 * absb == std::abs(aqq)) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * absb);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx e = b / absb;  // phase of the pivot
                const cplx ce = std::conj(e);

                // A <- A G with G = [[c, s], [-s conj(e), c conj(e)]].
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * ce * akq;
                    a(k, q) = s * akp + c * ce * akq;
                }
                // A <- G^dagger A.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * e * aqk;
                    a(q, k) = s * apk + c * e * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * ce * vkq;
                    v(k, q) = s * vkp + c * ce * vkq;
                }
            }
        }
    }
    if (!converged) {
        throw Error(ErrorCode::NonConvergence, "Jacobi did not converge in 100 sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
    std::vector<double> values(n);
    ComplexMatrix vectors(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) vectors(i, k) = v(i, order[k]);
    }
    return EigenDecomposition{Spectrum(std::move(values)), std::move(vectors)};
}

Spectrum spectrum(const HermitianOperator& a) { return eig_hermitian(a).values; }

namespace {

ComplexMatrix reconstruct(const ComplexMatrix& v, std::span<const cplx> diag) {
    const std::size_t n = v.rows();
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += v(i, k) * diag[k] * std::conj(v(j, k));
            out(i, j) = acc;
        }
    }
    return out;
}

}  // namespace

HermitianOperator apply_function(const HermitianOperator& a, const std::function<double(double)>& g) {
    const EigenDecomposition e = eig_hermitian(a);
    std::vector<cplx> d(a.dim());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = g(e.values[k]);
    return HermitianOperator::hermitian_part(reconstruct(e.vectors, d));
}

HermitianOperator expm_hermitian(const HermitianOperator& a, double s) {
    if (!std::isfinite(s)) throw Error(ErrorCode::InvalidArgument, "exponent scale must be finite");
    if (s == 0.0) return HermitianOperator::hermitian_part(ComplexMatrix::identity(a.dim()));
    const EigenDecomposition e = eig_hermitian(a);
    const double worst = std::max(std::abs(s * e.values.min()), std::abs(s * e.values.max()));
    if (worst > kExpLimit) {
        throw Error(ErrorCode::Overflow, "max |s lambda| = " + std::to_string(worst) + " exceeds 700");
    }
    std::vector<cplx> d(a.dim());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::exp(s * e.values[k]);
    return HermitianOperator::hermitian_part(reconstruct(e.vectors, d));
}

double trace_expm(const HermitianOperator& a, double s) { return expm_hermitian(a, s).matrix().trace().real(); }

ComplexMatrix unitary_evolution(const HermitianOperator& h, double t) {
    if (t == 0.0) return ComplexMatrix::identity(h.dim());
    const EigenDecomposition e = eig_hermitian(h);
    std::vector<cplx> d(h.dim());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::polar(1.0, -e.values[k] * t);
    return reconstruct(e.vectors, d);
}

double entropy_of_probabilities(std::span<const double> p) {
    double s = 0.0;
    for (double x : p) {
        if (x > 1e-14) s -= x * std::log(x);
    }
    return s;
}

double von_neumann_entropy(const DensityState& rho) {
    const Spectrum s = spectrum(rho.op());
    return entropy_of_probabilities(s.values());
}

double operator_norm(const HermitianOperator& a) {
    const Spectrum s = spectrum(a);
    return std::max(std::abs(s.min()), std::abs(s.max()));
}

double trace_norm(const HermitianOperator& a) {
    const Spectrum s = spectrum(a);
    double acc = 0.0;
    for (double x : s.values()) acc += std::abs(x);
    return acc;
}

double spectral_norm(const ComplexMatrix& m) {
    const Spectrum s = spectrum(HermitianOperator::hermitian_part(m.adjoint() * m));
    return std::sqrt(std::max(0.0, s.max()));
}

HermitianOperator block_embed(const HermitianOperator& a, int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) {
        throw Error(ErrorCode::InvalidArity, "need p, q >= 0 and p + q >= 1, got p=" + std::to_string(p) +
                                                 " q=" + std::to_string(q));
    }
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(p + q));
    for (int i = 0; i < p; ++i) blocks.push_back(a.matrix());
    const ComplexMatrix abar = a.matrix().conjugate();
    for (int i = 0; i < q; ++i) blocks.push_back(abar);
    return HermitianOperator::hermitian_part(direct_sum(blocks));
}

// ---------------------------------------------------------------------------
// Random ensembles

double Rng::normal() { return normal_(engine_); }
double Rng::uniform() { return uniform_(engine_); }
cplx Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return cplx(re, im) / std::sqrt(2.0);
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    // Modified Gram-Schmidt, applied twice for orthogonality. R has a positive
    // real diagonal, so Q is Haar distributed without a separate phase fix.
    for (std::size_t k = 0; k < n; ++k) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                cplx dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(g(i, j)) * g(i, k);
                for (std::size_t i = 0; i < n; ++i) g(i, k) -= dot * g(i, j);
            }
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(g(i, k));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) g(i, k) /= norm;
    }
    return g;
}

HermitianOperator random_hermitian(std::size_t n, Rng& rng) {
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    return HermitianOperator::hermitian_part(g + g.adjoint());
}

DensityState random_state(std::size_t n, Rng& rng) {
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    ComplexMatrix rho = g * g.adjoint();
    rho *= cplx(1.0 / rho.trace().real());
    return DensityState(HermitianOperator::hermitian_part(rho));
}

Projector random_projector(std::size_t n, std::size_t rank, Rng& rng) {
    if (rank > n) throw Error(ErrorCode::InvalidArgument, "rank exceeds dimension");
    const ComplexMatrix u = random_unitary(n, rng);
    ComplexMatrix p(n, n);
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) += u(i, k) * std::conj(u(j, k));
    return Projector(HermitianOperator::hermitian_part(p));
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_unitary(n, rng);
}

HermitianOperator random_hermitian(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_hermitian(n, rng);
}

DensityState random_state(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_state(n, rng);
}

}  // namespace dualis
