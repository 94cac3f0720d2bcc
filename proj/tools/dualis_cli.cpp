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


// dualis-cli: batch verification over the C interface.
// Exit codes: 0 all checks pass, 1 some check failed, 2 bad input.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dualis/dualis.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t seed = 0;
    std::string json_path;
    std::string csv_path;
    std::string dims;
    std::string arities;
    std::string map_path;
    std::string couplings;
    std::string lattice;
    std::string moments;
    std::string alpha;
    std::string dir = "fixtures";
    double tol = 0.0;
    int trials = 0;
    int d = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

double to_double(const std::string& s, const char* flag) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string(flag) + ": not a number: '" + s + "'");
}

long long to_int(const std::string& s, const char* flag) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string(flag) + ": not an integer: '" + s + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    out << body;
    if (!out) throw InputError("cannot write " + path);
}

json build_config(const Options& o) {
    json c = json::object();
    c["seed"] = o.seed;
    if (!o.dims.empty()) {
        json dims = json::array();
        for (const auto& d : split(o.dims, ',')) dims.push_back(to_int(d, "--dims"));
        c["dims"] = dims;
    }
    if (!o.arities.empty()) {
        json ar = json::array();
        for (const auto& a : split(o.arities, ',')) {
            const auto pq = split(a, ':');
            if (pq.size() != 2) throw InputError("--arities: expected p:q, got '" + a + "'");
            ar.push_back({to_int(pq[0], "--arities"), to_int(pq[1], "--arities")});
        }
        c["arities"] = ar;
    }
    if (o.tol != 0.0) c["tol"] = o.tol;
    if (o.trials != 0) c["trials"] = o.trials;
    if (!o.couplings.empty()) {
        json ks = json::array();
        for (const auto& k : split(o.couplings, ',')) {
            if (k == "self-dual")
                c["self_dual"] = true;
            else
                ks.push_back(to_double(k, "--K"));
        }
        if (!ks.empty()) c["K"] = ks;
    }
    if (!o.lattice.empty()) {
        const auto rc = split(o.lattice, 'x');
        if (rc.size() != 2) throw InputError("--lattice: expected RxC, got '" + o.lattice + "'");
        c["lattice"] = {to_int(rc[0], "--lattice"), to_int(rc[1], "--lattice")};
    }
    if (!o.moments.empty()) {
        json ms = json::array();
        for (const auto& m : split(o.moments, ',')) ms.push_back(to_double(m, "--moments"));
        c["moments"] = ms;
    }
    if (o.d != 0) c["d"] = o.d;
    if (!o.alpha.empty()) {
        const auto xy = split(o.alpha, '/');
        if (xy.size() == 1)
            c["alpha"] = {to_int(xy[0], "--alpha"), 1};
        else if (xy.size() == 2)
            c["alpha"] = {to_int(xy[0], "--alpha"), to_int(xy[1], "--alpha")};
        else
            throw InputError("--alpha: expected x or x/y");
    }
    if (!o.map_path.empty()) {
        try {
            c["map"] = json::parse(read_file(o.map_path));
        } catch (const json::parse_error& e) {
            throw InputError(o.map_path + ": malformed JSON: " + e.what());
        }
    }
    return c;
}

// Takes ownership of a char* from the C API.
std::string take(char* s) {
    std::string out = s ? s : "";
    dualis_string_free(s);
    return out;
}

int fail_status(dualis_status) {
    std::cerr << "dualis-cli: " << dualis_last_error() << "\n";
    return kExitInput;
}

int run_suite(const std::string& suite, const Options& o) {
    const json cfg = build_config(o);
    const auto t0 = std::chrono::steady_clock::now();
    dualis_report* rep = nullptr;
    dualis_status st = dualis_suite_run(suite.c_str(), cfg.dump().c_str(), &rep);
    if (st != DUALIS_OK) return fail_status(st);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::unique_ptr<dualis_report, decltype(&dualis_report_destroy)> guard(rep, dualis_report_destroy);

    char* text = nullptr;
    if ((st = dualis_report_text(rep, &text)) != DUALIS_OK) return fail_status(st);
    std::cout << take(text);

    if (!o.json_path.empty()) {
        char* js = nullptr;
        if ((st = dualis_report_json(rep, &js)) != DUALIS_OK) return fail_status(st);
        write_file(o.json_path, take(js));
        // wall time lives outside the report so reports stay byte-identical
        json meta = {{"suite", suite}, {"seed", o.seed}, {"wall_time_s", wall}, {"version", dualis_version()}};
        write_file(o.json_path + ".meta.json", meta.dump(2) + "\n");
    }
    if (!o.csv_path.empty()) {
        char* csv = nullptr;
        if ((st = dualis_report_csv(rep, &csv)) != DUALIS_OK) return fail_status(st);
        write_file(o.csv_path, take(csv));
    }
    std::size_t total = 0, passed = 0, failed = 0;
    if ((st = dualis_report_counts(rep, &total, &passed, &failed)) != DUALIS_OK) return fail_status(st);
    return (total > 0 && failed == 0) ? kExitOk : kExitFail;
}

int run_fixtures(const std::string& action, const Options& o) {
    if (action == "generate") {
        const dualis_status st = dualis_fixtures_generate(o.dir.c_str(), o.seed);
        if (st != DUALIS_OK) return fail_status(st);
        std::cout << "fixtures written to " << o.dir << " (seed " << o.seed << ")\n";
        return kExitOk;
    }
    std::size_t n = 0;
    char* details = nullptr;
    const dualis_status st = dualis_fixtures_check(o.dir.c_str(), o.seed, &n, &details);
    if (st != DUALIS_OK) return fail_status(st);
    const std::string listing = take(details);
    if (n == 0) {
        std::cout << "fixtures match (" << o.dir << ", seed " << o.seed << ")\n";
        return kExitOk;
    }
    std::cout << listing << n << " field(s) differ\n";
    return kExitFail;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("DUALIS_SEED");
    if (!env || !*env) return 0;
    const long long v = to_int(env, "DUALIS_SEED");
    if (v < 0) throw InputError("DUALIS_SEED must be non-negative");
    return static_cast<std::uint64_t>(v);
}

void common_flags(CLI::App* sub, Options& o) {
    sub->add_option("--seed", o.seed, "RNG seed (default: $DUALIS_SEED or 0)");
    sub->add_option("--json", o.json_path, "write the JSON report here");
    sub->add_option("--csv", o.csv_path, "write the CSV report here");
    sub->add_option("--tol", o.tol, "tolerance override")->check(CLI::PositiveNumber);
    sub->add_option("--dims", o.dims, "comma-separated source dimensions");
    sub->add_option("--arities", o.arities, "comma-separated p:q pairs");
    sub->add_option("--trials", o.trials, "trials per (dim, arity)");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    try {
        o.seed = default_seed();
    } catch (const InputError& e) {
        std::cerr << "dualis-cli: " << e.what() << "\n";
        return kExitInput;
    }

    CLI::App app{"dualis-cli: verify and compose finite-dimensional duality maps"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify-map", "spectral, convexity, projector and state-map checks");
    common_flags(verify, o);
    verify->add_option("--map", o.map_path, "JSON file holding a fixed duality map");

    auto* equiv = app.add_subcommand("equivalence", "thermal and entropic axioms, converse, peel, Wigner");
    common_flags(equiv, o);

    auto* approx = app.add_subcommand("approx-audit", "approximate-duality bounds and composition");
    common_flags(approx, o);

    auto* kw = app.add_subcommand("kw", "Kramers-Wannier checks on the periodic square lattice");
    common_flags(kw, o);
    kw->add_option("--K", o.couplings, "comma-separated couplings; 'self-dual' adds K* exactly");
    kw->add_option("--lattice", o.lattice, "RxC torus, at most 25 sites");

    auto* rec = app.add_subcommand("recover-spectrum", "rebuild a spectrum from power sums");
    common_flags(rec, o);
    rec->add_option("--moments", o.moments, "comma-separated power sums m_1, m_2, ...");
    rec->add_option("--d", o.d, "number of eigenvalues");
    rec->add_option("--alpha", o.alpha, "multiplicity x or x/y");

    auto* all = app.add_subcommand("all", "every suite");
    common_flags(all, o);

    std::string action;
    auto* fix = app.add_subcommand("fixtures", "golden-file generation and checking");
    fix->add_option("action", action, "generate | check")->required()->check(CLI::IsMember({"generate", "check"}));
    fix->add_option("--dir", o.dir, "fixtures directory");
    fix->add_option("--seed", o.seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (fix->parsed()) return run_fixtures(action, o);
        for (auto* sub : app.get_subcommands()) return run_suite(sub->get_name(), o);
    } catch (const InputError& e) {
        std::cerr << "dualis-cli: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "dualis-cli: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
