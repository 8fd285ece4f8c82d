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
#include <utility>
#include <vector>

#include "mbvqe/graphstate/program.hpp"
#include "mbvqe/sim/state_vector.hpp"
#include "mbvqe/stabilizer/graph_form.hpp"

namespace mbvqe {

/// A prepared resource state: outputs plus auxiliaries with a measurement plan.
///
/// Output ids come first in logical order; auxiliaries carry their prep local Clifford, and each
/// output's local Clifford is applied after its byproduct.
class CustomState {
   public:
    CustomState() = default;
    /// Validates the program; throws PatternError if it has unprepared inputs.
    explicit CustomState(GraphProgram program);

    /// Outputs 1..n carrying the graph and local Cliffords of `form`; no auxiliaries.
    static CustomState from_graph_form(const GraphForm &form);
    /// Bare graph state on outputs 1..n; edges use those ids.
    static CustomState graph(size_t num_outputs, const std::vector<std::pair<int, int>> &edges);

    const GraphProgram &program() const { return program_; }
    size_t num_qubits() const { return program_.vertices.size(); }
    size_t num_outputs() const { return program_.outputs.size(); }
    size_t num_auxiliaries() const { return program_.steps.size(); }
    size_t num_slots() const { return size_t(program_.num_slots); }
    bool is_deterministic() const { return program_.is_deterministic(); }

    /// Edges between two outputs.
    std::vector<std::pair<int, int>> output_edges() const;

   private:
    GraphProgram program_;
};

/// Angles theta_1..theta_4 of one decorated edge.
using DecorationAngles = std::array<double, 4>;

/// Replaces the output-output edge (m, n) by the four-auxiliary decoration gadget with four
/// fresh parameter slots (appended in order theta_1..theta_4). Sign dependencies and byproducts
/// of the whole state are then rederived. Throws ArgumentError if the edge is absent.
CustomState decorate_edge(const CustomState &state, int m, int n);

/// Adds the gadget between two non-adjacent outputs; with its angles at zero the output gains
/// one CZ between m and n (inserted before the output local Cliffords).
CustomState add_virtual_edge_and_decorate(const CustomState &state, int m, int n);

/// Decorates every output-output edge in ascending edge order.
CustomState decorate_all_edges(const CustomState &state);

/// Closed-form two-qubit state produced by one decorated edge on |+>|+>, normalized, with
/// qubit m as the most significant bit. Throws DegenerateStateError at zero norm.
StateVector decorated_edge_state(const DecorationAngles &angles);

/// The standalone six-vertex gadget: outputs 1 (m) and 2 (n), auxiliaries 3..6.
const CustomState &decoration_gadget();
/// The twelve-vertex program the gadget is reduced from: ten auxiliaries, six of them Pauli.
GraphProgram unreduced_decoration_gadget();

}  // namespace mbvqe
