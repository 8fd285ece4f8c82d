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
#include "mbvqe/stabilizer/tableau.hpp"

namespace mbvqe {

/// Periodic N_x x N_y toric-code lattice.
///
/// Qubits live on edges and are numbered row-major, horizontal before vertical:
/// h(r, c) = 1 + 2 (r N_y + c) joins vertex (r, c) to (r, c+1) and v(r, c) = 2 + 2 (r N_y + c)
/// joins (r, c) to (r+1, c). Stars are Z-type on the four edges at a vertex; plaquettes are
/// X-type on the face whose top-left corner is (r, c).
class ToricLattice {
   public:
    enum class Orientation { Horizontal, Vertical };

    ToricLattice(int nx, int ny);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    size_t num_qubits() const { return size_t(2 * nx_ * ny_); }
    /// 1-based qubit id; row and column wrap around.
    int qubit(int row, int col, Orientation o) const;

    PauliString star(int row, int col) const;
    PauliString plaquette(int row, int col) const;
    std::vector<PauliString> stars() const;
    std::vector<PauliString> plaquettes() const;
    /// Z on the horizontal edges of column 0.
    PauliString logical_z1() const;
    /// Z on the vertical edges of row 0.
    PauliString logical_z2() const;
    /// X on the horizontal edges of row 0 (anticommutes with logical_z1 only).
    PauliString logical_x1() const;
    /// X on the vertical edges of column 0 (anticommutes with logical_z2 only).
    PauliString logical_x2() const;

   private:
    int wrap_row(int r) const { return ((r % nx_) + nx_) % nx_; }
    int wrap_col(int c) const { return ((c % ny_) + ny_) % ny_; }
    PauliString on(const std::vector<int> &ids, char p) const;

    int nx_;
    int ny_;
};

/// -sum_s A_s - sum_p B_p.
Hamiltonian toric_hamiltonian(const ToricLattice &lattice);

/// sum_n lambda_n Z_n; lambda[n] belongs to qubit n+1.
Hamiltonian perturbation(const ToricLattice &lattice, const std::vector<double> &lambda);

/// Field scenarios.
std::vector<double> uniform_field(const ToricLattice &lattice, double lambda);
/// Independent normal draws with the given mean and variance.
std::vector<double> gaussian_field(const ToricLattice &lattice, double mean, double variance, uint64_t seed);
/// lambda on qubit 1, every other qubit drawn from N(0.1, 1e-4).
std::vector<double> strong_single_field(const ToricLattice &lattice, double lambda, uint64_t seed);
/// lambda on qubit 1 only.
std::vector<double> single_qubit_field(const ToricLattice &lattice, double lambda, int qubit = 1);

/// Unique ground state of H_0 - (-1)^r Z_L1 - (-1)^t Z_L2: every star and plaquette except the
/// last of each, plus (-1)^r Z_L1 and (-1)^t Z_L2.
StabilizerTableau logical_state(const ToricLattice &lattice, int r, int t);

}  // namespace mbvqe
