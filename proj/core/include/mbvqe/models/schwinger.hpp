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

#include <optional>

#include "mbvqe/models/hamiltonian.hpp"
#include "mbvqe/sim/state_vector.hpp"

namespace mbvqe {

struct SchwingerParams {
    int S = 4;
    double J = 1.0;
    double w = 1.0;
    double mu = 0.0;
    /// Lattice spacing and coupling, when the energies were derived from them.
    std::optional<double> a;
    std::optional<double> g;

    /// J = g^2 a / 2 and w = 1 / (2 a).
    static SchwingerParams from_lattice(int S, double a, double g, double mu);
    /// Throws ArgumentError for odd or small S, non-finite values, or (a, g) inconsistent with J, w.
    void validate() const;
};

/// Spin form of the lattice Schwinger model on qubits 1..S (n is 1-based):
///   (J/2) sum_{n=1}^{S-2} sum_{k=n+1}^{S-1} (S-k) Z_n Z_k
/// - (J/2) sum_{n=1}^{S-1} (n mod 2) sum_{k=1}^{n} Z_k
/// + (w/2) sum_{n=1}^{S-1} (X_n X_{n+1} + Y_n Y_{n+1})
/// + (mu/2) sum_{n=1}^{S} (-1)^n Z_n
/// Constant terms are dropped.
Hamiltonian schwinger_hamiltonian(const SchwingerParams &p);

/// 1/(2S(S-1)) sum_{j<i} <(1 + (-1)^i Z_i)(1 + (-1)^j Z_j)>, with 1-based i, j.
double order_parameter(const StateVector &state, int S);

}  // namespace mbvqe
