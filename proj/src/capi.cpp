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


#include "dualis/dualis.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "dualis/error.hpp"
#include "dualis/fixtures.hpp"
#include "dualis/suites.hpp"

struct dualis_matrix {
    dualis::ComplexMatrix m;
};

struct dualis_map {
    dualis::DualityMap phi;
};

struct dualis_report {
    dualis::SuiteReport report;
};

namespace {

thread_local std::string g_last_error;

dualis_status to_status(dualis::ErrorCode code) {
    // enum order mirrors ErrorCode
    return static_cast<dualis_status>(static_cast<int>(code) + 1);
}
static_assert(static_cast<int>(dualis::ErrorCode::Io) + 1 == DUALIS_E_IO, "status table out of sync");

template <class F>
dualis_status guard(F&& body) {
    try {
        g_last_error.clear();
        body();
        return DUALIS_OK;
    } catch (const dualis::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return DUALIS_E_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DUALIS_E_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw dualis::Error(dualis::ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

dualis::HermitianOperator hermitian(const dualis_matrix* a) { return dualis::HermitianOperator(a->m); }

}  // namespace

extern "C" {

const char* dualis_version(void) { return "0.1.0"; }

const char* dualis_status_name(dualis_status status) {
    if (status == DUALIS_OK) return "Ok";
    if (status == DUALIS_E_INTERNAL) return "Internal";
    const int i = static_cast<int>(status) - 1;
    if (i < 0 || i > static_cast<int>(dualis::ErrorCode::Io)) return "Unknown";
    return dualis::error_code_name(static_cast<dualis::ErrorCode>(i));
}

const char* dualis_last_error(void) { return g_last_error.c_str(); }

void dualis_string_free(char* s) { std::free(s); }

dualis_status dualis_matrix_create(size_t rows, size_t cols, const double* re, const double* im,
                                   dualis_matrix** out) {
    return guard([&] {
        require(out && re && rows > 0 && cols > 0, "matrix_create: null pointer or empty shape");
        std::vector<dualis::cplx> v(rows * cols);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = {re[i], im ? im[i] : 0.0};
        *out = new dualis_matrix{dualis::ComplexMatrix(rows, cols, std::move(v))};
    });
}

dualis_status dualis_matrix_from_json(const char* text, dualis_matrix** out) {
    return guard([&] {
        require(text && out, "matrix_from_json: null pointer");
        *out = new dualis_matrix{dualis::matrix_from_json(dualis::parse_json(text))};
    });
}

dualis_status dualis_matrix_to_json(const dualis_matrix* m, char** out) {
    return guard([&] {
        require(m && out, "matrix_to_json: null pointer");
        *out = copy_string(dualis::dump_json(dualis::to_json(m->m), -1));
    });
}

dualis_status dualis_matrix_dims(const dualis_matrix* m, size_t* rows, size_t* cols) {
    return guard([&] {
        require(m && rows && cols, "matrix_dims: null pointer");
        *rows = m->m.rows();
        *cols = m->m.cols();
    });
}

dualis_status dualis_matrix_get(const dualis_matrix* m, size_t r, size_t c, double* re, double* im) {
    return guard([&] {
        require(m && re && im, "matrix_get: null pointer");
        if (r >= m->m.rows() || c >= m->m.cols())
            throw dualis::Error(dualis::ErrorCode::DimMismatch, "matrix_get: index out of range");
        *re = m->m(r, c).real();
        *im = m->m(r, c).imag();
    });
}

void dualis_matrix_destroy(dualis_matrix* m) { delete m; }

dualis_status dualis_map_from_json(const char* text, dualis_map** out) {
    return guard([&] {
        require(text && out, "map_from_json: null pointer");
        *out = new dualis_map{dualis::map_from_json(dualis::parse_json(text))};
    });
}

dualis_status dualis_map_to_json(const dualis_map* phi, char** out) {
    return guard([&] {
        require(phi && out, "map_to_json: null pointer");
        *out = copy_string(dualis::dump_json(dualis::to_json(phi->phi), -1));
    });
}

dualis_status dualis_map_random(size_t n, int p, int q, uint64_t seed, double f, dualis_map** out) {
    return guard([&] {
        require(out != nullptr, "map_random: null pointer");
        dualis::Rng rng(seed);
        *out = new dualis_map{dualis::DualityMap::random(n, p, q, rng, dualis::ScalingFunction::constant(f))};
    });
}

dualis_status dualis_map_kw(size_t n, double coupling, double beta, dualis_map** out) {
    return guard([&] {
        require(out != nullptr, "map_kw: null pointer");
        *out = new dualis_map{dualis::kw_duality_map(n, coupling, beta).map};
    });
}

dualis_status dualis_map_info(const dualis_map* phi, size_t* n, int* p, int* q) {
    return guard([&] {
        require(phi && n && p && q, "map_info: null pointer");
        *n = phi->phi.n();
        *p = phi->phi.p();
        *q = phi->phi.q();
    });
}

dualis_status dualis_map_apply(const dualis_map* phi, const dualis_matrix* a, dualis_matrix** out) {
    return guard([&] {
        require(phi && a && out, "map_apply: null pointer");
        *out = new dualis_matrix{dualis::apply_map(phi->phi, hermitian(a)).matrix()};
    });
}

dualis_status dualis_map_compose(const dualis_map* outer, const dualis_map* inner, dualis_map** out) {
    return guard([&] {
        require(outer && inner && out, "map_compose: null pointer");
        *out = new dualis_map{dualis::compose_exact(outer->phi, inner->phi)};
    });
}

dualis_status dualis_map_verify_spectral(const dualis_map* phi, const dualis_matrix* a, double tol, int* pass,
                                         double* deviation) {
    return guard([&] {
        require(phi && a && pass && deviation, "map_verify_spectral: null pointer");
        const dualis::CheckReport r = dualis::verify_spectral_axiom(phi->phi, hermitian(a), tol);
        *pass = r.pass ? 1 : 0;
        *deviation = r.deviation;
    });
}

void dualis_map_destroy(dualis_map* phi) { delete phi; }

dualis_status dualis_eigvalsh(const dualis_matrix* a, double* values, size_t cap) {
    return guard([&] {
        require(a && values, "eigvalsh: null pointer");
        const dualis::Spectrum s = dualis::spectrum(hermitian(a));
        if (cap < s.size()) throw dualis::Error(dualis::ErrorCode::DimMismatch, "eigvalsh: output too short");
        std::copy(s.values().begin(), s.values().end(), values);
    });
}

dualis_status dualis_entropy(const dualis_matrix* rho, double* out) {
    return guard([&] {
        require(rho && out, "entropy: null pointer");
        *out = dualis::von_neumann_entropy(dualis::DensityState(rho->m));
    });
}

dualis_status dualis_power_sums(const double* spectrum, size_t d, int order, double* out) {
    return guard([&] {
        require(spectrum && out && d > 0, "power_sums: null pointer or empty spectrum");
        const auto ps = dualis::power_sums(dualis::Spectrum(std::vector<double>(spectrum, spectrum + d)), order);
        std::copy(ps.sums.begin(), ps.sums.end(), out);
    });
}

dualis_status dualis_reconstruct_spectrum(const double* sums, size_t order, int64_t alpha_num, int64_t alpha_den,
                                          int d, double* out) {
    return guard([&] {
        require(sums && out && order > 0, "reconstruct_spectrum: null pointer or empty input");
        dualis::PowerSumSequence ps;
        ps.alpha_num = alpha_num;
        ps.alpha_den = alpha_den;
        ps.sums.assign(sums, sums + order);
        const dualis::Spectrum s = dualis::reconstruct_spectrum(ps, d);
        std::copy(s.values().begin(), s.values().end(), out);
    });
}

dualis_status dualis_dual_coupling(double k, double* out) {
    return guard([&] {
        require(out != nullptr, "dual_coupling: null pointer");
        *out = dualis::dual_coupling(k);
    });
}

dualis_status dualis_self_dual_coupling(double* out) {
    return guard([&] {
        require(out != nullptr, "self_dual_coupling: null pointer");
        *out = dualis::self_dual_coupling();
    });
}

dualis_status dualis_ising_log_partition(int rows, int cols, double k, double* out) {
    return guard([&] {
        require(out != nullptr, "ising_log_partition: null pointer");
        *out = dualis::log_partition_function(dualis::enumerate_energies(dualis::IsingLattice(rows, cols, 1.0)), k);
    });
}

dualis_status dualis_kw_residual(int rows, int cols, double k, double* residual_f, double* residual_z) {
    return guard([&] {
        require(residual_f && residual_z, "kw_residual: null pointer");
        const auto r = dualis::kw_relation_residual(dualis::enumerate_energies(dualis::IsingLattice(rows, cols, 1.0)), k);
        *residual_f = r.residual_f;
        *residual_z = r.residual_z;
    });
}

dualis_status dualis_suite_run(const char* suite, const char* config_json, dualis_report** out) {
    return guard([&] {
        require(suite && out, "suite_run: null pointer");
        const dualis::json cfg =
            (config_json && *config_json) ? dualis::parse_json(config_json) : dualis::json::object();
        auto r = std::make_unique<dualis_report>(dualis_report{dualis::run_suite(suite, dualis::config_from_json(cfg))});
        *out = r.release();
    });
}

dualis_status dualis_report_json(const dualis_report* r, char** out) {
    return guard([&] {
        require(r && out, "report_json: null pointer");
        *out = copy_string(dualis::report_json(r->report));
    });
}

dualis_status dualis_report_csv(const dualis_report* r, char** out) {
    return guard([&] {
        require(r && out, "report_csv: null pointer");
        *out = copy_string(dualis::report_csv(r->report));
    });
}

dualis_status dualis_report_text(const dualis_report* r, char** out) {
    return guard([&] {
        require(r && out, "report_text: null pointer");
        *out = copy_string(dualis::report_text(r->report));
    });
}

dualis_status dualis_report_counts(const dualis_report* r, size_t* total, size_t* passed, size_t* failed) {
    return guard([&] {
        require(r && total && passed && failed, "report_counts: null pointer");
        *total = r->report.checks.size();
        *passed = r->report.passed();
        *failed = r->report.failed();
    });
}

void dualis_report_destroy(dualis_report* r) { delete r; }

dualis_status dualis_fixtures_generate(const char* dir, uint64_t seed) {
    return guard([&] {
        require(dir != nullptr, "fixtures_generate: null pointer");
        dualis::write_fixtures(dir, seed);
    });
}

dualis_status dualis_fixtures_check(const char* dir, uint64_t seed, size_t* mismatches, char** details) {
    return guard([&] {
        require(dir && mismatches, "fixtures_check: null pointer");
        const auto diffs = dualis::check_fixtures(dir, seed);
        *mismatches = diffs.size();
        if (details) {
            std::string s;
            for (const auto& d : diffs) s += d + "\n";
            *details = copy_string(s);
        }
    });
}

}  // extern "C"
