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


#ifndef DUALIS_SERIALIZE_HPP
#define DUALIS_SERIALIZE_HPP

#include <string>

#include "dualis/approx.hpp"
#include "dualis/duality.hpp"
#include "dualis/equivalence.hpp"
#include "dualis/ising.hpp"
#include "dualis/opscore.hpp"
#include "json.hpp"

namespace dualis {

using json = nlohmann::json;

/// Floats with 17 significant digits, non-finite values as null, keys in
/// the order nlohmann stores them (sorted).
std::string dump_json(const json& value, int indent = 2);

/// Parses text, mapping parser failures to ErrorCode::Parse.
json parse_json(const std::string& text);

json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const ScalingFunction& f);
ScalingFunction scaling_from_json(const json& j);

json to_json(const DualityMap& phi);
DualityMap map_from_json(const json& j);

json to_json(const StateMap& w);
StateMap state_map_from_json(const json& j);

json to_json(const PowerSumSequence& ps);
PowerSumSequence power_sums_from_json(const json& j);

json to_json(const EnergyHistogram& h);

json to_json(const ApproxDuality& a);
ApproxDuality approx_from_json(const json& j);

}  // namespace dualis

#endif
