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
#include <vector>

#include "mbvqe/models/hamiltonian.hpp"
#include "mbvqe/sim/state_vector.hpp"

namespace mbvqe {

/// Dense diagonalization is limited to this many qubits.
inline constexpr size_t kMaxExactQubits = 12;

struct GroundState {
    double energy = 0.0;
    /// One normalized vector of the ground space (qubits 1..n).
    StateVector state;
    /// Dimension of the ground space.
    size_t degeneracy = 1;
    /// Orthonormal basis of the ground space.
    std::vector<StateVector> ground_space;

    bool degenerate() const { return degeneracy > 1; }
    /// Weight of `psi` inside the ground space, sum_k |<g_k|psi>|^2 / |psi|^2.
    double fidelity(const StateVector &psi) const;
};

/// Lowest eigenpair by dense diagonalization. Eigenvalues within `tol` (relative to
/// max(1, |E0|)) of the minimum count towards the degeneracy. Throws ArgumentError above
/// kMaxExactQubits.
GroundState exact_ground(const Hamiltonian &h, double tol = 1e-8);

/// H |psi>.
StateVector apply_hamiltonian(const Hamiltonian &h, const StateVector &psi);

/// Ground energy estimate from shifted power iteration on (c - H), c = sum |coefficients|.
/// Independent of the dense solver; used as a cross-check.
double power_iteration_ground_energy(const Hamiltonian &h, size_t max_iterations = 200000, double tol = 1e-13,
                                     uint64_t seed = 1);

}  // namespace mbvqe
