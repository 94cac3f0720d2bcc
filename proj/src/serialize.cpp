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


#include "dualis/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <memory>

#include "dualis/error.hpp"

namespace dualis {

namespace {

void emit(const json& v, int indent, int depth, std::string& out) {
    const auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                emit(it.value(), indent, depth + 1, out);
            }
            newline(depth);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const auto& e : v) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                emit(e, indent, depth + 1, out);
            }
            newline(depth);
            out += ']';
            return;
        }
        case json::value_t::number_float: {
            const double d = v.get<double>();
            if (!std::isfinite(d)) {
                out += "null";
                return;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", d);
            out += buf;
            // keep it a float on re-read
            if (std::string(buf).find_first_of(".eE") == std::string::npos) out += ".0";
            return;
        }
        default:
            out += v.dump();
    }
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

double number(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number()) bad(std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

std::int64_t integer(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
    return v.get<std::int64_t>();
}

std::vector<double> numbers(const json& v, const char* what) {
    if (!v.is_array()) bad(std::string(what) + " must be an array");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) bad(std::string(what) + " must hold numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

}  // namespace

std::string dump_json(const json& value, int indent) {
    std::string out;
    emit(value, indent, 0, out);
    if (indent >= 0) out += '\n';
    return out;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

json to_json(const ComplexMatrix& m) {
    json re = json::array(), im = json::array();
    for (const cplx& z : m.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json& j) {
    const std::int64_t rows = integer(j, "rows");
    const std::int64_t cols = integer(j, "cols");
    if (rows < 1 || cols < 1) bad("matrix dimensions must be positive");
    const auto re = numbers(field(j, "re"), "re");
    const auto im = j.contains("im") ? numbers(j.at("im"), "im") : std::vector<double>(re.size(), 0.0);
    if (re.size() != im.size()) bad("re and im differ in length");
    std::vector<cplx> entries(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) entries[i] = cplx(re[i], im[i]);
    return ComplexMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(entries));
}

json to_json(const ScalingFunction& f) {
    switch (f.kind()) {
        case ScalingFunction::Kind::Constant:
            return json{{"kind", "constant"}, {"c", f.constant_value()}};
        case ScalingFunction::Kind::KramersWannier:
            return json{{"kind", "kw"}, {"J", f.coupling()}, {"beta", f.beta()}};
        case ScalingFunction::Kind::Table: {
            json entries = json::array();
            for (const auto& e : f.entries()) entries.push_back(json{{"spectrum", e.spectrum}, {"value", e.value}});
            return json{{"kind", "table"}, {"L", f.lipschitz()}, {"entries", entries}};
        }
        case ScalingFunction::Kind::Composed:
            return json{{"kind", "composed"}, {"outer", to_json(f.outer())}, {"inner", to_json(f.inner())}};
    }
    return json();
}

ScalingFunction scaling_from_json(const json& j) {
    const json& kind = field(j, "kind");
    if (!kind.is_string()) bad("scaling kind must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "constant") return ScalingFunction::constant(number(j, "c"));
    if (k == "kw") return ScalingFunction::kramers_wannier(number(j, "J"), number(j, "beta"));
    if (k == "table") {
        std::vector<ScalingFunction::TableEntry> entries;
        const json& list = field(j, "entries");
        if (!list.is_array()) bad("table entries must be an array");
        for (const auto& e : list) entries.push_back({numbers(field(e, "spectrum"), "spectrum"), number(e, "value")});
        return ScalingFunction::table(std::move(entries), number(j, "L"));
    }
    if (k == "composed") {
        return ScalingFunction::composed(scaling_from_json(field(j, "outer")),
                                         std::make_shared<const DualityMap>(map_from_json(field(j, "inner"))));
    }
    bad("unknown scaling kind '" + k + "'");
}

json to_json(const DualityMap& phi) {
    return json{{"n", phi.n()}, {"p", phi.p()}, {"q", phi.q()}, {"U", to_json(phi.unitary())}, {"f", to_json(phi.scaling())}};
}

DualityMap map_from_json(const json& j) {
    const std::int64_t n = integer(j, "n");
    const std::int64_t p = integer(j, "p");
    const std::int64_t q = integer(j, "q");
    if (n < 1) bad("n must be positive");
    if (p < 0 || q < 0 || p > 64 || q > 64) bad("p and q must be small non-negative integers");
    return DualityMap(static_cast<std::size_t>(n), static_cast<int>(p), static_cast<int>(q),
                      matrix_from_json(field(j, "U")), scaling_from_json(field(j, "f")));
}

json to_json(const StateMap& w) {
    return json{{"alpha", std::vector<double>(w.weights().begin(), w.weights().end())}};
}

StateMap state_map_from_json(const json& j) { return StateMap(numbers(field(j, "alpha"), "alpha")); }

json to_json(const PowerSumSequence& ps) {
    return json{{"alpha", json::array({ps.alpha_num, ps.alpha_den})}, {"sums", ps.sums}};
}

PowerSumSequence power_sums_from_json(const json& j) {
    PowerSumSequence ps;
    const json& a = field(j, "alpha");
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
        bad("alpha must be [x, y]");
    }
    ps.alpha_num = a[0].get<std::int64_t>();
    ps.alpha_den = a[1].get<std::int64_t>();
    ps.sums = numbers(field(j, "sums"), "sums");
    return ps;
}

json to_json(const EnergyHistogram& h) {
    return json{{"energies", h.energies}, {"counts", h.counts}, {"antibonds", h.antibonds},
                {"sites", h.sites},       {"bonds", h.bond_count}, {"J", h.coupling}};
}

json to_json(const ApproxDuality& a) {
    if (a.is_composed()) {
        return json{{"composed", json{{"outer", to_json(a.outer())}, {"inner", to_json(a.inner())}}},
                    {"L", a.lipschitz()}};
    }
    const auto& pert = a.perturbation();
    json k{{"kind", a.weight().kind() == ErrorWeight::Kind::Constant ? "constant" : "norm_scaled"},
           {"c", a.weight().coefficient()}};
    json perturb{{"kind", pert.kind == AdditivePerturbation::Kind::Shift ? "shift" : "random"},
                 {"seed", pert.seed},
                 {"scale", pert.scale},
                 {"junk_floor", pert.junk_floor}};
    return json{{"exact", to_json(a.exact())}, {"epsilon", a.epsilon()}, {"eta", a.eta()},
                {"L", a.lipschitz()},          {"ancilla", a.ancilla()},  {"k", k},
                {"S", to_json(a.subspace().matrix())}, {"perturb", perturb}};
}

ApproxDuality approx_from_json(const json& j) {
    if (j.contains("composed")) {
        const json& c = j.at("composed");
        auto outer = std::make_shared<const ApproxDuality>(approx_from_json(field(c, "outer")));
        auto inner = std::make_shared<const ApproxDuality>(approx_from_json(field(c, "inner")));
        return compose_approx(outer, inner, number(j, "L"));
    }
    const json& kj = field(j, "k");
    const std::string kind = field(kj, "kind").is_string() ? kj.at("kind").get<std::string>() : "";
    ErrorWeight k = kind == "constant"      ? ErrorWeight::constant(number(kj, "c"))
                    : kind == "norm_scaled" ? ErrorWeight::norm_scaled(number(kj, "c"))
                                            : (bad("unknown k kind '" + kind + "'"), ErrorWeight::constant(0.0));
    const json& pj = field(j, "perturb");
    AdditivePerturbation pert;
    const std::string pk = pj.contains("kind") && pj.at("kind").is_string() ? pj.at("kind").get<std::string>() : "random";
    if (pk == "shift") {
        pert.kind = AdditivePerturbation::Kind::Shift;
    } else if (pk != "random") {
        bad("unknown perturbation kind '" + pk + "'");
    }
    const json& seed = field(pj, "seed");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) bad("seed must be an integer");
    pert.seed = seed.get<std::uint64_t>();
    pert.scale = number(pj, "scale");
    pert.junk_floor = pj.contains("junk_floor") ? number(pj, "junk_floor") : 0.0;
    const std::int64_t ancilla = j.contains("ancilla") ? integer(j, "ancilla") : 0;
    if (ancilla < 0) bad("ancilla must be >= 0");
    std::optional<Projector> s;
    if (j.contains("S")) s = Projector(HermitianOperator(matrix_from_json(j.at("S"))));
    std::optional<double> eps;
    if (j.contains("epsilon")) eps = number(j, "epsilon");
    return ApproxDuality::additive(map_from_json(field(j, "exact")), pert, std::move(k),
                                   j.contains("eta") ? number(j, "eta") : 0.0, j.contains("L") ? number(j, "L") : 0.0,
                                   static_cast<std::size_t>(ancilla), std::move(s), eps);
}

}  // namespace dualis
