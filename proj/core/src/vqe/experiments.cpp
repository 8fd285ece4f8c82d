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

#include "mbvqe/vqe/experiments.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "mbvqe/errors.hpp"
#include "mbvqe/mbqc/pattern.hpp"
#include "mbvqe/models/exact.hpp"
#include "mbvqe/models/schwinger.hpp"
#include "mbvqe/sim/simulate.hpp"

namespace mbvqe {

CostFunction pattern_cost(const GraphProgram &program, const Hamiltonian &h) {
    return [program, h](std::span<const double> theta) {
        return expectation(simulate_pattern(program, theta).output_state, h);
    };
}

std::string scenario_name(ToricScenario::Kind kind) {
    switch (kind) {
        case ToricScenario::Kind::Uniform: return "uniform";
        case ToricScenario::Kind::StrongSingle: return "strong_single";
        case ToricScenario::Kind::SingleQubit: return "single_qubit";
        case ToricScenario::Kind::Gaussian: return "gaussian";
    }
    return "?";
}

ToricScenario::Kind parse_scenario(const std::string &name) {
    for (auto k : {ToricScenario::Kind::Uniform, ToricScenario::Kind::StrongSingle, ToricScenario::Kind::SingleQubit,
                   ToricScenario::Kind::Gaussian}) {
        if (scenario_name(k) == name) return k;
    }
    throw ArgumentError("unknown toric scenario '" + name + "' (expected uniform, strong_single, single_qubit or gaussian)");
}

std::vector<double> ToricScenario::field(const ToricLattice &lattice, double lambda) const {
    switch (kind) {
        case Kind::Uniform: return uniform_field(lattice, lambda);
        case Kind::StrongSingle: return strong_single_field(lattice, lambda, seed);
        case Kind::SingleQubit: return single_qubit_field(lattice, lambda);
        case Kind::Gaussian: return gaussian_field(lattice, lambda, 0.1 * std::abs(lambda), seed);
    }
    return {};
}

CustomState toric_ansatz(const ToricLattice &lattice) {
    return decorate_all_edges(CustomState::from_graph_form(tableau_to_graphstate(logical_state(lattice, 0, 0))));
}

namespace {

// Runs `point(i, start)` over a grid. With warm starts, point i starts from the better of
// point i-1's optimum and the configured initial point.
template <typename Result>
std::vector<Result> run_grid(size_t count, size_t num_params, const DriverOptions &options,
                             const std::function<CostFunction(size_t)> &cost_of,
                             const std::function<Result(size_t, const OptimizerConfig &)> &point) {
    std::vector<Result> out(count);
    auto config_for = [&](size_t i) {
        OptimizerConfig c = options.optimizer;
        c.seed = options.optimizer.seed + i;
        if (c.initial.empty()) c.initial.assign(num_params, 0.0);
        return c;
    };
    if (options.warm_start || options.jobs <= 1) {
        std::vector<double> previous;
        for (size_t i = 0; i < count; ++i) {
            OptimizerConfig c = config_for(i);
            if (options.warm_start && !previous.empty()) {
                const CostFunction cost = cost_of(i);
                if (cost(previous) < cost(c.initial)) c.initial = previous;
            }
            out[i] = point(i, c);
            previous = out[i].trace.best_params;
        }
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (size_t w = 0; w < std::min(options.jobs, count); ++w) {
        workers.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                try {
                    out[i] = point(i, config_for(i));
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto &t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace

std::vector<ToricPoint> run_toric(const ToricLattice &lattice, const ToricScenario &scenario,
                                  const std::vector<double> &lambdas, const DriverOptions &options) {
    if (lattice.num_qubits() > kMaxExactQubits) throw ArgumentError("run_toric: lattice too large for exact reference");
    const CustomState ansatz = toric_ansatz(lattice);
    const Hamiltonian h0 = toric_hamiltonian(lattice);
    const StateVector ansatz_state = stabilizer_state(logical_state(lattice, 0, 0));
    StateVector ones = StateVector::zeros(StateVector::range(lattice.num_qubits()));
    ones.amplitudes()[0] = 0.0;
    ones.amplitudes().back() = 1.0;

    std::vector<Hamiltonian> hams;
    for (double l : lambdas) hams.push_back(h0 + perturbation(lattice, scenario.field(lattice, l)));

    auto cost_of = [&](size_t i) { return pattern_cost(ansatz.program(), hams[i]); };
    auto point = [&](size_t i, const OptimizerConfig &config) {
        ToricPoint p;
        p.lambda = lambdas[i];
        p.field = scenario.field(lattice, lambdas[i]);
        const GroundState g = exact_ground(hams[i]);
        p.exact_energy = g.energy;
        p.trace = minimize(cost_of(i), ansatz.num_slots(), config, g.energy);
        p.energy = p.trace.best_energy;
        p.relative_error = relative_error(p.energy, g.energy);
        p.infidelity = 1.0 - g.fidelity(simulate_pattern(ansatz.program(), p.trace.best_params).output_state);
        p.ansatz_energy = expectation(ansatz_state, hams[i]);
        p.ansatz_relative_error = relative_error(p.ansatz_energy, g.energy);
        p.product_energy = expectation(ones, hams[i]);
        p.product_relative_error = relative_error(p.product_energy, g.energy);
        return p;
    };
    return run_grid<ToricPoint>(lambdas.size(), ansatz.num_slots(), options, cost_of, point);
}

SchwingerRun run_schwinger(int S, int K, const std::vector<double> &mus, double J, double w, const DriverOptions &options) {
    SchwingerRun run;
    run.S = S;
    run.K = K;
    run.J = J;
    run.w = w;
    const CustomState state = standardize(compile_layers(S, K));
    run.custom_state_qubits = state.num_qubits();

    std::vector<Hamiltonian> hams;
    for (double mu : mus) {
        SchwingerParams p;
        p.S = S;
        p.J = J;
        p.w = w;
        p.mu = mu;
        hams.push_back(schwinger_hamiltonian(p));
    }
    auto cost_of = [&](size_t i) { return pattern_cost(state.program(), hams[i]); };
    auto point = [&](size_t i, const OptimizerConfig &config) {
        SchwingerPoint p;
        p.mu = mus[i];
        const GroundState g = exact_ground(hams[i]);
        p.exact_energy = g.energy;
        p.exact_order_parameter = order_parameter(g.state, S);
        p.trace = minimize(cost_of(i), state.num_slots(), config, g.energy);
        p.energy = p.trace.best_energy;
        p.relative_error = relative_error(p.energy, g.energy);
        const StateVector psi = simulate_pattern(state.program(), p.trace.best_params).output_state;
        p.infidelity = 1.0 - g.fidelity(psi);
        p.order_parameter = order_parameter(psi, S);
        p.circuit_energy = expectation(simulate_circuit(S, K, p.trace.best_params), hams[i]);
        return p;
    };
    run.points = run_grid<SchwingerPoint>(mus.size(), state.num_slots(), options, cost_of, point);
    return run;
}

}  // namespace mbvqe
