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

#include <array>
#include <map>
#include <vector>

#include "mbvqe/graphstate/custom_state.hpp"
#include "mbvqe/graphstate/program.hpp"

namespace mbvqe {

/// Where a Pauli on one input ends up after the pattern has run: a Pauli on the outputs
/// (x and z bit per output index, phases dropped) plus the rotated steps whose angle changes sign.
struct PauliFlow {
    std::vector<std::array<bool, 2>> image;
    std::vector<int> flipped_steps;  // sorted

    /// Xors `other` into this flow.
    PauliFlow &operator^=(const PauliFlow &other);
};

struct InputFlow {
    PauliFlow x;
    PauliFlow z;
};

/// A measurement pattern with inputs, together with the rule that pushes Paulis on its inputs
/// through to its outputs. Slot indices are global, so combining patterns never renumbers them.
class MeasurementPattern {
   public:
    MeasurementPattern() = default;
    /// Validates the program and the flow table (one entry per input, images sized to outputs).
    MeasurementPattern(GraphProgram program, std::vector<InputFlow> flow, bool clifford);

    const GraphProgram &program() const { return program_; }
    const std::vector<InputFlow> &flow() const { return flow_; }
    /// True when no step carries a parameter slot.
    bool is_clifford() const { return clifford_; }
    size_t num_inputs() const { return program_.inputs.size(); }
    size_t num_outputs() const { return program_.outputs.size(); }
    size_t num_nodes() const { return program_.vertices.size(); }

   private:
    GraphProgram program_;
    std::vector<InputFlow> flow_;
    bool clifford_ = true;
};

/// One vertex that is both input and output.
MeasurementPattern wire_pattern();

/// Five-node chain computing U_x(theta3) U_z(theta2) U_x(theta1). A negative slot fixes that
/// angle to zero and the node becomes a plain X measurement.
MeasurementPattern single_qubit_unitary_pattern(std::array<int, 3> slots = {0, 1, 2});

/// Fifteen-node CX pattern: inputs 1 (control) and 9 (target), outputs 7 and 15.
MeasurementPattern cx_pattern();

/// Side-by-side union; b's ids are shifted past a's, inputs and outputs are a's then b's.
MeasurementPattern tensor(const MeasurementPattern &a, const MeasurementPattern &b);
MeasurementPattern tensor(const std::vector<MeasurementPattern> &parts);

/// Runs a, then b on a's outputs. wiring[k] is the index of b's input fed by a's output k.
/// a's byproducts are pushed through b: they become extra byproducts on b's outputs and extra
/// sign dependencies of b's rotated steps. Throws ArgumentError when wiring is not a bijection.
MeasurementPattern concatenate(const MeasurementPattern &a, const MeasurementPattern &b, const std::vector<size_t> &wiring);
/// Identity wiring.
MeasurementPattern concatenate(const MeasurementPattern &a, const MeasurementPattern &b);

/// K brickwork layers on S qubits: per layer U_z then U_x on each qubit, then CX on pairs
/// (0,1),(2,3),... and then on (1,2),(3,4),... Qubit n of layer l uses slots l*2S+2n (z) and
/// l*2S+2n+1 (x). Inputs are meant to be prepared in |+>. Throws ArgumentError for odd S.
MeasurementPattern compile_layers(int S, int K);

/// Performs every Pauli measurement classically (outcome +1), leaving a custom state whose
/// auxiliaries are exactly the rotated steps. Inputs are prepared in |+>.
CustomState standardize(const MeasurementPattern &pattern);

}  // namespace mbvqe
