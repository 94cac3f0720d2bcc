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


#ifndef DUALIS_FIXTURES_HPP
#define DUALIS_FIXTURES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dualis/serialize.hpp"

namespace dualis {

/// Golden values per module, keyed by file name.
std::map<std::string, json> generate_fixtures(std::uint64_t seed);

/// Writes one JSON file per module into dir (created if absent). Io on failure.
void write_fixtures(const std::string& dir, std::uint64_t seed);

/// Recomputes with `seed` and compares against dir. Returns one line per
/// differing field; throws Error(Io) when the directory or a file is missing.
/// Numbers match within 1e-9 max(1, |a|, |b|).
std::vector<std::string> check_fixtures(const std::string& dir, std::uint64_t seed);

}  // namespace dualis

#endif
