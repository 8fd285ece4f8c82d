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


#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "mbvqe/errors.hpp"
#include "mbvqe/graphstate/custom_state.hpp"
#include "mbvqe/mbqc/pattern.hpp"
#include "mbvqe/sim/simulate.hpp"
#include "mbvqe/vqe/experiments.hpp"

namespace mbvqe::cli {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

size_t trials_or(const RunConfig &c, size_t fallback) { return c.trials.value_or(fallback); }

bool selected(const RunConfig &c, const std::string &suite) { return c.suite == "all" || c.suite == suite; }

std::vector<double> random_angles(std::mt19937_64 &rng, size_t n) {
    std::uniform_real_distribution<double> u(-kPi, kPi);
    std::vector<double> t(n);
    for (auto &x : t) x = u(rng);
    return t;
}

GraphProgram gadget(const RunConfig &c) {
    GraphProgram p = decoration_gadget().program();
    if (c.corrupt_byproducts) corrupt_byproducts(p);
    return p;
}

GraphProgram schwinger_program(const RunConfig &c, int S, int K) {
    GraphProgram p = standardize(compile_layers(S, K)).program();
    if (c.corrupt_byproducts) corrupt_byproducts(p);
    return p;
}

// Worst fidelity between the all-zero branch and each sampled branch.
double worst_branch_fidelity(const GraphProgram &p, std::span<const double> theta, const std::vector<std::map<int, int>> &branches,
                             size_t random_branches, uint64_t seed) {
    const StateVector ref = simulate_pattern(p, theta).output_state;
    double worst = 1.0;
    for (const auto &bits : branches) {
        try {
            worst = std::min(worst, fidelity(ref, simulate_pattern(p, theta, {BranchPolicy::explicit_bits(bits)}).output_state));
        } catch (const DegenerateStateError &) {
        }
    }
    for (size_t i = 0; i < random_branches; ++i)
        worst = std::min(worst, fidelity(ref, simulate_pattern(p, theta, {BranchPolicy::random(seed + i)}).output_state));
    return worst;
}

void check_determinism(const RunConfig &c, std::vector<CheckResult> &out) {
    std::mt19937_64 rng(c.seed);
    const GraphProgram g = gadget(c);
    std::vector<std::map<int, int>> all;
    const size_t n = g.steps.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        std::map<int, int> bits;
        for (size_t i = 0; i < n; ++i) bits[g.steps[i].node] = int((mask >> i) & 1);
        all.push_back(bits);
    }
    double worst = 1.0;
    for (int rep = 0; rep < 5; ++rep) worst = std::min(worst, worst_branch_fidelity(g, random_angles(rng, 4), all, 0, 0));
    out.push_back({"determinism", "decorated-edge gadget, all branches", worst >= 1 - 1e-10, "max infidelity " + sci(1 - worst)});
    for (int K : {1, 2}) {
        const GraphProgram p = schwinger_program(c, 4, K);
        const double f = worst_branch_fidelity(p, random_angles(rng, size_t(p.num_slots)), {}, trials_or(c, 50), c.seed * 1000);
        out.push_back({"determinism", "schwinger S=4 K=" + std::to_string(K) + ", " + std::to_string(trials_or(c, 50)) + " random branches",
                       f >= 1 - 1e-10, "max infidelity " + sci(1 - f)});
    }
}

void check_eq_s1(const RunConfig &c, std::vector<CheckResult> &out) {
    std::mt19937_64 rng(c.seed + 1);
    const GraphProgram g = gadget(c);
    const size_t trials = trials_or(c, 100);
    double worst = 1.0;
    for (size_t i = 0; i < trials; ++i) {
        const auto t = random_angles(rng, 4);
        const StateVector closed = decorated_edge_state({t[0], t[1], t[2], t[3]});
        worst = std::min(worst, fidelity(closed, simulate_pattern(g, t, {BranchPolicy::random(c.seed + i)}).output_state));
    }
    out.push_back({"eq-s1", std::to_string(trials) + " random angle quadruples", worst >= 1 - 1e-10, "max infidelity " + sci(1 - worst)});
}

void check_backend(const RunConfig &c, std::vector<CheckResult> &out) {
    std::mt19937_64 rng(c.seed + 2);
    const size_t trials = trials_or(c, 20);
    for (int K = 1; K <= 3; ++K) {
        const GraphProgram p = schwinger_program(c, 4, K);
        double worst = 1.0;
        for (size_t i = 0; i < trials; ++i) {
            const auto t = random_angles(rng, size_t(p.num_slots));
            worst = std::min(worst, fidelity(simulate_circuit(4, K, t), simulate_pattern(p, t).output_state));
        }
        out.push_back({"backend", "S=4 K=" + std::to_string(K) + ", " + std::to_string(trials) + " parameter draws", worst >= 1 - 1e-8,
                       "max infidelity " + sci(1 - worst)});
    }
}

void check_counts(const RunConfig &, std::vector<CheckResult> &out) {
    for (int K = 1; K <= 3; ++K) {
        const CustomState s = standardize(compile_layers(4, K));
        const size_t q = s.num_qubits(), r = s.program().rotated_count();
        const bool ok = q == size_t(4 * (2 * K + 1)) && r == size_t(8 * K) && s.program().pauli_count() == 0;
        out.push_back({"counts", "schwinger S=4 K=" + std::to_string(K), ok,
                       std::to_string(q) + " qubits, " + std::to_string(r) + " rotated measurements"});
    }
    const CustomState t = toric_ansatz(ToricLattice(2, 2));
    out.push_back({"counts", "toric 2x2 decorated ansatz", t.num_qubits() == 44 && t.num_slots() == 36,
                   std::to_string(t.num_qubits()) + " qubits, " + std::to_string(t.num_slots()) + " slots"});
}

}  // namespace

void corrupt_byproducts(GraphProgram &program) {
    if (program.steps.empty() || program.outputs.empty()) throw ArgumentError("nothing to corrupt");
    program.byproducts[program.outputs.front()].x.toggle(program.steps.front().node);
}

std::vector<CheckResult> run_verify(const RunConfig &config) {
    std::vector<CheckResult> out;
    if (selected(config, "determinism")) check_determinism(config, out);
    if (selected(config, "eq-s1")) check_eq_s1(config, out);
    if (selected(config, "backend")) check_backend(config, out);
    if (selected(config, "counts")) check_counts(config, out);
    return out;
}

int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err) {
    const auto results = run_verify(config);
    size_t failed = 0;
    for (const auto &r : results) {
        const std::string line = std::string(r.passed ? "PASS " : "FAIL ") + r.property + ": " + r.subject + " (" + r.detail + ")";
        out << line << "\n";
        if (!r.passed) {
            err << line << "\n";
            ++failed;
        }
    }
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed ? kPropertyFailure : kSuccess;
}

}  // namespace mbvqe::cli
