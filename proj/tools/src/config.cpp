// Copyright 2026 The MBVQE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "mbvqe/errors.hpp"
#include "mbvqe/vqe/experiments.hpp"

namespace mbvqe::cli {
namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class T>
std::string join(const std::vector<T> &v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        if constexpr (std::is_floating_point_v<T>)
            s += fmt(v[i]);
        else
            s += std::to_string(v[i]);
    }
    return s;
}

double to_double(const std::string &key, const std::string &text) {
    size_t used = 0;
    double x = 0;
    try {
        x = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(x)) throw ArgumentError(key + ": not a finite number: '" + text + "'");
    return x;
}

long long to_integer(const std::string &key, const std::string &text) {
    size_t used = 0;
    long long x = 0;
    try {
        x = std::stoll(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw ArgumentError(key + ": not an integer: '" + text + "'");
    return x;
}

size_t to_count(const std::string &key, const std::string &text) {
    const long long x = to_integer(key, text);
    if (x < 0) throw ArgumentError(key + ": must be non-negative");
    return size_t(x);
}

bool to_bool(const std::string &key, const std::string &text) {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ArgumentError(key + ": expected true or false, got '" + text + "'");
}

struct Field {
    std::string key;
    std::function<void(RunConfig &, const std::string &)> set;
    std::function<std::string(const RunConfig &)> get;
};

const std::vector<Field> &fields() {
    using C = RunConfig;
    using S = const std::string &;
    static const std::vector<Field> table = {
        {"experiment", [](C &c, S v) { c.experiment = v; }, [](const C &c) { return c.experiment; }},
        {"seed", [](C &c, S v) { c.seed = to_count("seed", v); }, [](const C &c) { return std::to_string(c.seed); }},
        {"out", [](C &c, S v) { c.out = v; }, [](const C &c) { return c.out; }},
        {"jobs", [](C &c, S v) { c.jobs = to_count("jobs", v); }, [](const C &c) { return std::to_string(c.jobs); }},
        {"toric.nx", [](C &c, S v) { c.nx = int(to_integer("toric.nx", v)); }, [](const C &c) { return std::to_string(c.nx); }},
        {"toric.ny", [](C &c, S v) { c.ny = int(to_integer("toric.ny", v)); }, [](const C &c) { return std::to_string(c.ny); }},
        {"toric.scenario", [](C &c, S v) { c.scenario = v; }, [](const C &c) { return c.scenario; }},
        {"toric.lambdas", [](C &c, S v) { c.lambdas = parse_grid(v); }, [](const C &c) { return join(c.lambdas); }},
        {"schwinger.S", [](C &c, S v) { c.S = int(to_integer("schwinger.S", v)); }, [](const C &c) { return std::to_string(c.S); }},
        {"schwinger.K",
         [](C &c, S v) {
             c.K.clear();
             std::istringstream in(v);
             for (std::string part; std::getline(in, part, ',');) c.K.push_back(int(to_integer("schwinger.K", part)));
         },
         [](const C &c) { return join(c.K); }},
        {"schwinger.mus", [](C &c, S v) { c.mus = parse_grid(v); }, [](const C &c) { return join(c.mus); }},
        {"schwinger.J", [](C &c, S v) { c.J = to_double("schwinger.J", v); }, [](const C &c) { return fmt(c.J); }},
        {"schwinger.w", [](C &c, S v) { c.w = to_double("schwinger.w", v); }, [](const C &c) { return fmt(c.w); }},
        {"optimizer.method", [](C &c, S v) { c.optimizer.method = parse_method(v); },
         [](const C &c) { return method_name(c.optimizer.method); }},
        {"optimizer.max_iterations", [](C &c, S v) { c.optimizer.max_iterations = to_count("optimizer.max_iterations", v); },
         [](const C &c) { return std::to_string(c.optimizer.max_iterations); }},
        {"optimizer.tolerance", [](C &c, S v) { c.optimizer.tolerance = to_double("optimizer.tolerance", v); },
         [](const C &c) { return fmt(c.optimizer.tolerance); }},
        {"optimizer.step", [](C &c, S v) { c.optimizer.step = to_double("optimizer.step", v); },
         [](const C &c) { return fmt(c.optimizer.step); }},
        {"optimizer.max_restarts", [](C &c, S v) { c.optimizer.max_restarts = int(to_count("optimizer.max_restarts", v)); },
         [](const C &c) { return std::to_string(c.optimizer.max_restarts); }},
        {"optimizer.restart_threshold",
         [](C &c, S v) { c.optimizer.restart_threshold = to_double("optimizer.restart_threshold", v); },
         [](const C &c) { return fmt(c.optimizer.restart_threshold); }},
        {"optimizer.restart_scale", [](C &c, S v) { c.optimizer.restart_scale = to_double("optimizer.restart_scale", v); },
         [](const C &c) { return fmt(c.optimizer.restart_scale); }},
        {"optimizer.warm_start", [](C &c, S v) { c.warm_start = to_bool("optimizer.warm_start", v); },
         [](const C &c) { return std::string(c.warm_start ? "true" : "false"); }},
        {"verify.suite", [](C &c, S v) { c.suite = v; }, [](const C &c) { return c.suite; }},
        {"verify.trials", [](C &c, S v) { c.trials = to_count("verify.trials", v); },
         [](const C &c) { return c.trials ? std::to_string(*c.trials) : std::string("suite-default"); }},
    };
    return table;
}

const Field &field(const std::string &key) {
    for (const auto &f : fields())
        if (f.key == key) return f;
    throw ArgumentError("unknown config key '" + key + "'");
}

}  // namespace

std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::istringstream in(text);
        for (std::string p; std::getline(in, p, ':');) parts.push_back(p);
        if (parts.size() != 3) throw ArgumentError("grid must be start:stop:count, got '" + text + "'");
        const double a = to_double("grid", parts[0]), b = to_double("grid", parts[1]);
        const size_t n = to_count("grid", parts[2]);
        if (n == 0) throw ArgumentError("grid count must be positive");
        for (size_t i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * double(i) / double(n - 1));
        return out;
    }
    std::istringstream in(text);
    for (std::string p; std::getline(in, p, ',');) out.push_back(to_double("grid", p));
    if (out.empty()) throw ArgumentError("empty grid");
    return out;
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto &f : fields()) keys.push_back(f.key);
    return keys;
}

void RunConfig::validate() const {
    if (experiment != "toric" && experiment != "schwinger")
        throw ArgumentError("experiment must be toric or schwinger, got '" + experiment + "'");
    if (jobs == 0) throw ArgumentError("jobs must be at least 1");
    if (out.empty()) throw ArgumentError("out must not be empty");
    if (nx < 1 || ny < 1) throw ArgumentError("toric lattice dimensions must be positive");
    if (2 * nx * ny > 12) throw ArgumentError("toric lattice exceeds 12 qubits; exact diagonalization is not feasible");
    parse_scenario(scenario);
    if (lambdas.empty()) throw ArgumentError("toric.lambdas is empty");
    if (S < 2 || S > 12) throw ArgumentError("schwinger.S must be in [2, 12]");
    if (K.empty()) throw ArgumentError("schwinger.K is empty");
    for (int k : K)
        if (k < 1) throw ArgumentError("schwinger.K entries must be positive");
    if (mus.empty()) throw ArgumentError("schwinger.mus is empty");
    static const std::set<std::string> suites = {"all", "determinism", "eq-s1", "backend", "counts"};
    if (!suites.count(suite)) throw ArgumentError("unknown suite '" + suite + "'");
    if (trials && *trials == 0) throw ArgumentError("trials must be positive");
    optimizer.validate();
}

std::vector<std::string> RunConfig::echo() const {
    std::vector<std::string> lines;
    for (const auto &f : fields()) lines.push_back(f.key + " = " + f.get(*this));
    return lines;
}

RunConfig load_config(const std::optional<std::string> &path, const std::map<std::string, std::string> &overrides) {
    RunConfig c;
    c.lambdas = parse_grid("0:3:13");
    c.mus = parse_grid("-3:3:13");
    std::set<std::string> set_keys;
    auto apply = [&](const std::string &key, const std::string &value) {
        field(key).set(c, value);
        set_keys.insert(key);
    };
    if (path) {
        boost::property_tree::ptree tree;
        try {
            boost::property_tree::read_ini(*path, tree);
        } catch (const boost::property_tree::ini_parser_error &e) {
            throw ArgumentError(std::string("config: ") + e.what());
        }
        for (const auto &[name, node] : tree) {
            if (node.empty()) {
                apply(name, node.data());
                continue;
            }
            for (const auto &[sub, leaf] : node) apply(name + "." + sub, leaf.data());
        }
    }
    for (const auto &[key, value] : overrides) apply(key, value);
    for (const auto &f : fields())
        if (!set_keys.count(f.key)) c.defaulted.push_back(f.key);
    c.validate();
    return c;
}

}  // namespace mbvqe::cli
