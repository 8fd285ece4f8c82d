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

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mbvqe/stabilizer/local_clifford.hpp"

namespace mbvqe {

/// An affine function over GF(2) of measurement outcomes: constant xor s_{n1} xor s_{n2} ...
class Parity {
   public:
    Parity() = default;
    explicit Parity(bool constant) : constant_(constant) {}
    Parity(std::initializer_list<int> nodes, bool constant = false);

    const std::vector<int> &nodes() const { return nodes_; }
    bool constant() const { return constant_; }
    bool is_zero() const { return nodes_.empty() && !constant_; }
    bool depends_on(int node) const;

    void toggle(int node);
    void flip_constant() { constant_ = !constant_; }
    Parity &operator^=(const Parity &other);
    friend Parity operator^(Parity a, const Parity &b) { return a ^= b; }
    bool operator==(const Parity &) const = default;

    /// Replaces s_node by `value` (an affine expression in other outcomes).
    void substitute(int node, const Parity &value);
    /// Renames node ids through `map`; ids missing from the map are kept.
    void relabel(const std::map<int, int> &map);
    bool evaluate(const std::function<bool(int)> &outcome) const;

    /// "s2+s5+1", "0".
    std::string str() const;

   private:
    std::vector<int> nodes_;  // sorted, unique
    bool constant_ = false;
};

/// Measurement basis of one step.
///
/// Pauli X and Y are the rotated bases R(0) and R(pi/2). A rotated step measures
/// R((-1)^sign * base_sign * theta[slot]); for Y the sign selects R(+-pi/2); X and Z ignore it.
struct Basis {
    enum class Kind { X, Y, Z, Rotated };
    Kind kind = Kind::X;
    int slot = -1;
    int base_sign = 1;

    static Basis pauli(char p);
    static Basis rotated(int slot, int base_sign = 1) { return {Kind::Rotated, slot, base_sign}; }
    bool is_pauli() const { return kind != Kind::Rotated; }
    char pauli_letter() const;
    bool operator==(const Basis &) const = default;
};

struct Step {
    int node = 0;
    Basis basis;
    /// Adaptive sign dependency.
    Parity sign;
    /// Post-selected step: the run is kept only when the outcome equals `herald`.
    bool heralded = false;
    Parity herald;
};

/// Pauli correction X^x Z^z on one output, applied after all measurements.
struct Byproduct {
    Parity x;
    Parity z;
    bool is_zero() const { return x.is_zero() && z.is_zero(); }
};

/// The data shared by measurement patterns and custom states.
///
/// Preparation: inputs carry a supplied state, every other vertex starts in |+>, then one CZ per
/// edge, then each auxiliary's local Clifford. Steps are executed in order. Finally every output
/// receives its byproduct and then its local Clifford. Outputs are listed in logical order.
struct GraphProgram {
    std::vector<int> vertices;  // sorted
    std::vector<std::pair<int, int>> edges;  // (a, b) with a < b, sorted
    std::map<int, LocalClifford> local_cliffords;  // identity entries omitted
    std::vector<int> inputs;
    std::vector<int> outputs;
    std::vector<Step> steps;
    std::map<int, Byproduct> byproducts;
    int num_slots = 0;

    bool has_vertex(int v) const;
    bool is_output(int v) const;
    bool is_input(int v) const;
    LocalClifford local_clifford(int v) const;
    void set_local_clifford(int v, const LocalClifford &c);
    Byproduct byproduct(int output) const;
    std::vector<int> neighbors(int v) const;
    std::map<int, std::vector<int>> adjacency() const;
    std::vector<int> auxiliaries() const;
    int max_vertex() const { return vertices.empty() ? 0 : vertices.back(); }

    void add_vertex(int v);
    void add_edge(int a, int b);
    void remove_edge(int a, int b);
    bool has_edge(int a, int b) const;

    size_t rotated_count() const;
    size_t pauli_count() const;
    size_t heralded_count() const;
    bool is_deterministic() const { return heralded_count() == 0; }

    /// Structural checks: unique ids, edges between known vertices, every non-output measured
    /// exactly once, no output measured, dependencies only on earlier steps, slot range.
    /// Throws PatternError.
    void validate() const;

    /// Renames every id through `map` (which must be injective on the vertices).
    GraphProgram relabeled(const std::map<int, int> &map) const;
};

/// Which vertices should avoid Hadamard corrections when the reduced state is put in graph form.
enum class PivotPreference { AuxiliariesFirst, OutputsFirst };

/// Removes every Pauli step by measuring it on the stabilizer state with outcome forced to +1
/// (or its deterministic value), substituting the resulting outcome into all dependencies and
/// deleting the measured vertex. Inputs are treated as |+>. The surviving state is converted
/// to graph form; outputs are renumbered 1..S in logical order and auxiliaries follow in step
/// order.
GraphProgram eliminate_pauli_steps(const GraphProgram &program,
                                   PivotPreference preference = PivotPreference::AuxiliariesFirst);

/// Byproduct of C P C^dag, where P = X^x Z^z (phases dropped).
Byproduct conjugate_byproduct(const Byproduct &p, const LocalClifford &c);

/// Rederives sign dependencies and byproducts of a program without inputs from its stabilizer
/// group, measuring in the given step order. Steps for which no correction exists are marked
/// heralded. Existing dependencies are discarded.
void derive_corrections(GraphProgram &program);

}  // namespace mbvqe
