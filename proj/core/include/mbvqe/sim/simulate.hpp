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
#include <map>
#include <random>
#include <span>
#include <utility>

#include "mbvqe/graphstate/program.hpp"
#include "mbvqe/models/hamiltonian.hpp"
#include "mbvqe/sim/state_vector.hpp"
#include "mbvqe/stabilizer/tableau.hpp"

namespace mbvqe {

/// Chooses measurement outcomes during pattern simulation.
class BranchPolicy {
   public:
    /// Outcome 0 whenever it has nonzero probability.
    static BranchPolicy all_zero() { return BranchPolicy(Mode::AllZero, 0); }
    /// Born-rule sampling with a seeded generator.
    static BranchPolicy random(uint64_t seed) { return BranchPolicy(Mode::Random, seed); }
    /// Fixed bits per measured vertex; a zero-probability bit raises DegenerateStateError.
    static BranchPolicy explicit_bits(std::map<int, int> bits);

    /// Returns the chosen outcome given the probability of outcome 0.
    int choose(int node, double p0);

   private:
    enum class Mode { AllZero, Random, Explicit };
    BranchPolicy(Mode mode, uint64_t seed) : mode_(mode), rng_(seed) {}
    Mode mode_;
    std::mt19937_64 rng_;
    std::map<int, int> bits_;
};

struct SimOptions {
    BranchPolicy policy = BranchPolicy::all_zero();
    /// Defer each CZ until one of its endpoints is about to be measured.
    bool lazy = true;
};

struct SimReport {
    /// State of the outputs, in the program's output order.
    StateVector output_state;
    /// Probability of the sampled branch (product over measurements).
    double branch_probability = 1.0;
    size_t peak_active_qubits = 0;
    std::map<int, int> outcomes;
};

/// Runs the program's measurements with adaptive signs, byproducts and output local Cliffords.
/// `input` supplies the state of the program's inputs (in input order); without it inputs are
/// prepared in |+>. Throws ArgumentError when theta has the wrong length.
SimReport simulate_pattern(const GraphProgram &program, std::span<const double> theta, SimOptions options = {},
                           const StateVector *input = nullptr);

/// Projects every auxiliary on the given outcome with no adaptive signs and no byproducts
/// (constant sign bits are kept). Output local Cliffords are applied. Returns the normalized
/// output state and the branch probability; a zero-probability branch raises DegenerateStateError.
std::pair<StateVector, double> postselect_simulate(const GraphProgram &program, std::span<const double> theta,
                                                   const std::map<int, int> &outcomes);

/// K layers of single-qubit rotations (U_z then U_x on every qubit) followed by the two brickwork
/// CX sub-layers, applied to |+>^S. theta[l*2S + 2n] is the U_z angle of qubit n in layer l and
/// theta[l*2S + 2n + 1] its U_x angle. Qubits are labelled 1..S.
StateVector simulate_circuit(int S, int K, std::span<const double> theta);

/// Dense vector of a stabilizer state on qubits 1..n, via its graph form.
StateVector stabilizer_state(const StabilizerTableau &tableau);

/// sum_P c_P <psi|P|psi>; term qubit i acts on register position i.
double expectation(const StateVector &state, const Hamiltonian &h);

}  // namespace mbvqe
