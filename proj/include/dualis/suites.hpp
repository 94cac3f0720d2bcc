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


#ifndef DUALIS_SUITES_HPP
#define DUALIS_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dualis/serialize.hpp"

namespace dualis {

struct SuiteConfig {
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims;              // empty: suite default
    std::vector<std::pair<int, int>> arities;   // empty: suite default
    std::optional<double> tol;
    int trials = 0;                             // 0: suite default
    std::vector<double> couplings;              // kw: K values
    bool self_dual = false;                     // kw: include K* exactly
    int rows = 4;
    int cols = 4;
    std::vector<double> moments;                // recover-spectrum
    int d = 0;
    std::int64_t alpha_num = 1;
    std::int64_t alpha_den = 1;
    std::optional<json> map;                    // verify-map: fixed map
};

/// Throws Error(Parse) / Error(InvalidArgument) on malformed input.
SuiteConfig config_from_json(const json& j);
json to_json(const SuiteConfig& c);

struct CheckRecord {
    std::string name;
    std::string inputs_digest;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    std::string error;  // set when the check threw
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckRecord> checks;  // sorted by name
    json data = json::object();
    std::vector<std::string> csv_header;
    std::vector<std::vector<double>> csv_rows;

    std::size_t passed() const;
    std::size_t failed() const { return checks.size() - passed(); }
    bool ok() const { return !checks.empty() && failed() == 0; }
};

/// verify-map | equivalence | approx-audit | kw | recover-spectrum | all
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

std::string report_json(const SuiteReport& r);
/// kw: the sweep table; other suites: one line per check.
std::string report_csv(const SuiteReport& r);
std::string report_text(const SuiteReport& r);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& s);

}  // namespace dualis

#endif
