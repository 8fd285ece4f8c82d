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

#include <span>
#include <utility>
#include <vector>

#include "mbvqe/stabilizer/local_clifford.hpp"
#include "mbvqe/stabilizer/tableau.hpp"

namespace mbvqe {

/// A stabilizer state written as (C_0 (x) ... (x) C_{n-1}) |G>.
struct GraphForm {
    size_t num_qubits = 0;
    /// Undirected edges (a, b) with a < b, sorted.
    std::vector<std::pair<size_t, size_t>> edges;
    /// Per-qubit local Clifford applied after the CZ edges.
    std::vector<LocalClifford> corrections;

    size_t degree(size_t q) const;
};

/// Local-Clifford-equivalent graph state of a stabilizer tableau.
///
/// Gauss-Jordan elimination of the X block picks pivot columns in `pivot_priority` order
/// (default: ascending qubit index); every non-pivot qubit receives a Hadamard. Qubits
/// listed early in the priority are therefore the last to receive one. Remaining Y and sign
/// defects are fixed by S and Z corrections, so each correction is H^h S^s Z^z.
GraphForm tableau_to_graphstate(const StabilizerTableau &tableau, std::span<const size_t> pivot_priority = {});

/// Tableau of the state described by `form`.
StabilizerTableau graphstate_to_tableau(const GraphForm &form);

}  // namespace mbvqe
