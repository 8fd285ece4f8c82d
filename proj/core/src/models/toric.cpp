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

#include "mbvqe/models/toric.hpp"

#include <random>

#include "mbvqe/errors.hpp"

namespace mbvqe {

ToricLattice::ToricLattice(int nx, int ny) : nx_(nx), ny_(ny) {
    if (nx < 1 || ny < 1) throw ArgumentError("ToricLattice: N_x and N_y must be positive");
}

int ToricLattice::qubit(int row, int col, Orientation o) const {
    const int cell = wrap_row(row) * ny_ + wrap_col(col);
    return (o == Orientation::Horizontal ? 1 : 2) + 2 * cell;
}

PauliString ToricLattice::on(const std::vector<int> &ids, char p) const {
    PauliString out(num_qubits());
    // Small lattices can hit the same edge twice; the factors cancel.
    for (int id : ids) out *= PauliString::single(num_qubits(), size_t(id - 1), p);
    return out;
}

PauliString ToricLattice::star(int r, int c) const {
    using O = Orientation;
    return on({qubit(r, c, O::Horizontal), qubit(r, c - 1, O::Horizontal), qubit(r, c, O::Vertical), qubit(r - 1, c, O::Vertical)}, 'Z');
}

PauliString ToricLattice::plaquette(int r, int c) const {
    using O = Orientation;
    return on({qubit(r, c, O::Horizontal), qubit(r + 1, c, O::Horizontal), qubit(r, c, O::Vertical), qubit(r, c + 1, O::Vertical)}, 'X');
}

std::vector<PauliString> ToricLattice::stars() const {
    std::vector<PauliString> out;
    for (int r = 0; r < nx_; ++r)
        for (int c = 0; c < ny_; ++c) out.push_back(star(r, c));
    return out;
}

std::vector<PauliString> ToricLattice::plaquettes() const {
    std::vector<PauliString> out;
    for (int r = 0; r < nx_; ++r)
        for (int c = 0; c < ny_; ++c) out.push_back(plaquette(r, c));
    return out;
}

PauliString ToricLattice::logical_z1() const {
    std::vector<int> ids;
    for (int r = 0; r < nx_; ++r) ids.push_back(qubit(r, 0, Orientation::Horizontal));
    return on(ids, 'Z');
}

PauliString ToricLattice::logical_z2() const {
    std::vector<int> ids;
    for (int c = 0; c < ny_; ++c) ids.push_back(qubit(0, c, Orientation::Vertical));
    return on(ids, 'Z');
}

PauliString ToricLattice::logical_x1() const {
    std::vector<int> ids;
    for (int c = 0; c < ny_; ++c) ids.push_back(qubit(0, c, Orientation::Horizontal));
    return on(ids, 'X');
}

PauliString ToricLattice::logical_x2() const {
    std::vector<int> ids;
    for (int r = 0; r < nx_; ++r) ids.push_back(qubit(r, 0, Orientation::Vertical));
    return on(ids, 'X');
}

Hamiltonian toric_hamiltonian(const ToricLattice &lattice) {
    Hamiltonian h(lattice.num_qubits());
    for (const auto &s : lattice.stars()) h.add(-1.0, s);
    for (const auto &p : lattice.plaquettes()) h.add(-1.0, p);
    return h;
}

Hamiltonian perturbation(const ToricLattice &lattice, const std::vector<double> &lambda) {
    if (lambda.size() != lattice.num_qubits()) {
        throw ArgumentError("perturbation: expected " + std::to_string(lattice.num_qubits()) + " weights, got " +
                            std::to_string(lambda.size()));
    }
    Hamiltonian h(lattice.num_qubits());
    for (size_t q = 0; q < lambda.size(); ++q) {
        if (lambda[q] != 0.0) h.add(lambda[q], PauliString::single(lattice.num_qubits(), q, 'Z'));
    }
    return h;
}

std::vector<double> uniform_field(const ToricLattice &lattice, double lambda) {
    return std::vector<double>(lattice.num_qubits(), lambda);
}

std::vector<double> gaussian_field(const ToricLattice &lattice, double mean, double variance, uint64_t seed) {
    if (!(variance >= 0.0)) throw ArgumentError("gaussian_field: variance must be non-negative");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(mean, std::sqrt(variance));
    std::vector<double> out(lattice.num_qubits());
    for (auto &x : out) x = g(rng);
    return out;
}

std::vector<double> strong_single_field(const ToricLattice &lattice, double lambda, uint64_t seed) {
    std::vector<double> out = gaussian_field(lattice, 0.1, 1e-4, seed);
    out[0] = lambda;
    return out;
}

std::vector<double> single_qubit_field(const ToricLattice &lattice, double lambda, int qubit) {
    if (qubit < 1 || size_t(qubit) > lattice.num_qubits()) throw ArgumentError("single_qubit_field: qubit out of range");
    std::vector<double> out(lattice.num_qubits(), 0.0);
    out[size_t(qubit - 1)] = lambda;
    return out;
}

StabilizerTableau logical_state(const ToricLattice &lattice, int r, int t) {
    if ((r != 0 && r != 1) || (t != 0 && t != 1)) throw ArgumentError("logical_state: r and t must be 0 or 1");
    std::vector<PauliString> gens = lattice.stars();
    gens.pop_back();
    std::vector<PauliString> plaq = lattice.plaquettes();
    plaq.pop_back();
    gens.insert(gens.end(), plaq.begin(), plaq.end());
    PauliString z1 = lattice.logical_z1(), z2 = lattice.logical_z2();
    if (r) z1.negate();
    if (t) z2.negate();
    gens.push_back(z1);
    gens.push_back(z2);
    return StabilizerTableau::from_stabilizers(std::move(gens));
}

}  // namespace mbvqe
