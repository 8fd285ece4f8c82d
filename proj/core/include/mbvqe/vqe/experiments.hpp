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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbvqe/graphstate/custom_state.hpp"
#include "mbvqe/models/hamiltonian.hpp"
#include "mbvqe/models/toric.hpp"
#include "mbvqe/vqe/optimizer.hpp"

namespace mbvqe {

/// Energy of the state produced by the canonical (all-zero, heralds forced) branch.
CostFunction pattern_cost(const GraphProgram &program, const Hamiltonian &h);

struct DriverOptions {
    OptimizerConfig optimizer;
    /// Start each grid point from the better of the previous point's optimum and the initial
    /// point. Warm-started grids run sequentially.
    bool warm_start = true;
    /// Worker threads for grids without warm starts.
    size_t jobs = 1;
};

struct ToricScenario {
    enum class Kind { Uniform, StrongSingle, SingleQubit, Gaussian };
    Kind kind = Kind::Uniform;
    uint64_t seed = 1;

    /// Field for strength lambda: uniform; lambda on qubit 1 with the rest ~ N(0.1, 1e-4);
    /// lambda on qubit 1 only; or every qubit ~ N(lambda, 0.1 lambda).
    std::vector<double> field(const ToricLattice &lattice, double lambda) const;
};

std::string scenario_name(ToricScenario::Kind kind);
/// "uniform", "strong_single", "single_qubit" or "gaussian".
ToricScenario::Kind parse_scenario(const std::string &name);

/// The decorated |0,0>_L graph state: every graph edge carries a decoration gadget.
CustomState toric_ansatz(const ToricLattice &lattice);

struct ToricPoint {
    double lambda = 0.0;
    std::vector<double> field;
    double energy = 0.0;
    double exact_energy = 0.0;
    double relative_error = 0.0;
    double infidelity = 0.0;
    /// Baselines: the undecorated ansatz state and the product state |1...1>.
    double ansatz_energy = 0.0;
    double ansatz_relative_error = 0.0;
    double product_energy = 0.0;
    double product_relative_error = 0.0;
    RunTrace trace;
};

std::vector<ToricPoint> run_toric(const ToricLattice &lattice, const ToricScenario &scenario,
                                  const std::vector<double> &lambdas, const DriverOptions &options);

struct SchwingerPoint {
    double mu = 0.0;
    double energy = 0.0;
    double exact_energy = 0.0;
    double relative_error = 0.0;
    double infidelity = 0.0;
    double order_parameter = 0.0;
    double exact_order_parameter = 0.0;
    /// Energy of the circuit backend at the optimal parameters.
    double circuit_energy = 0.0;
    RunTrace trace;
};

struct SchwingerRun {
    int S = 4;
    int K = 1;
    double J = 1.0;
    double w = 1.0;
    size_t custom_state_qubits = 0;
    std::vector<SchwingerPoint> points;
};

/// MB-VQE on standardize(compile_layers(S, K)) for each mu.
SchwingerRun run_schwinger(int S, int K, const std::vector<double> &mus, double J, double w, const DriverOptions &options);

}  // namespace mbvqe
