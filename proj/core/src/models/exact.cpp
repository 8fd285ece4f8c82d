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

#include "mbvqe/models/exact.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "mbvqe/errors.hpp"

namespace mbvqe {

namespace {

struct Masks {
    size_t x = 0, z = 0;
    int ny = 0;
};

Masks masks(const PauliString &p) {
    const size_t n = p.num_qubits();
    Masks m;
    for (size_t q = 0; q < n; ++q) {
        const size_t bit = size_t(1) << (n - 1 - q);
        const char c = p.pauli_at(q);
        if (c == 'X' || c == 'Y') m.x |= bit;
        if (c == 'Z' || c == 'Y') m.z |= bit;
        if (c == 'Y') ++m.ny;
    }
    return m;
}

template <typename Matrix, typename Scalar>
Matrix dense(const Hamiltonian &h, Scalar (*phase)(int)) {
    const size_t dim = size_t(1) << h.num_qubits();
    Matrix m = Matrix::Zero(Eigen::Index(dim), Eigen::Index(dim));
    for (const auto &t : h.terms()) {
        const Masks k = masks(t.pauli);
        const Scalar ph = phase(k.ny) * t.coefficient;
        for (size_t b = 0; b < dim; ++b) {
            const double s = (std::popcount(b & k.z) & 1) ? -1.0 : 1.0;
            m(Eigen::Index(b ^ k.x), Eigen::Index(b)) += ph * s;
        }
    }
    return m;
}

// i^ny, restricted to even ny for the real path.
double real_phase(int ny) { return (ny / 2) % 2 ? -1.0 : 1.0; }
cplx complex_phase(int ny) {
    static const cplx p[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    return p[ny % 4];
}

template <typename Solver, typename Vec>
GroundState collect(const Solver &solver, size_t n, double tol) {
    const auto &ev = solver.eigenvalues();
    GroundState g;
    g.energy = ev(0);
    const double cut = tol * std::max(1.0, std::abs(g.energy));
    size_t k = 0;
    while (Eigen::Index(k) < ev.size() && ev(Eigen::Index(k)) - g.energy <= cut) {
        Vec col = solver.eigenvectors().col(Eigen::Index(k));
        std::vector<cplx> amps(size_t(col.size()));
        for (Eigen::Index i = 0; i < col.size(); ++i) amps[size_t(i)] = cplx(col(i));
        g.ground_space.emplace_back(StateVector::range(n), std::move(amps));
        ++k;
    }
    g.degeneracy = k;
    g.state = g.ground_space.front();
    return g;
}

}  // namespace

double GroundState::fidelity(const StateVector &psi) const {
    double w = 0.0;
    for (const auto &g : ground_space) w += std::norm(inner(g, psi));
    return w / std::pow(psi.norm(), 2);
}

GroundState exact_ground(const Hamiltonian &h, double tol) {
    const size_t n = h.num_qubits();
    if (n == 0) throw ArgumentError("exact_ground: empty register");
    if (n > kMaxExactQubits) {
        throw ArgumentError("exact_ground: " + std::to_string(n) + " qubits exceeds the dense limit of " +
                            std::to_string(kMaxExactQubits));
    }
    bool real = true;
    for (const auto &t : h.terms()) real = real && masks(t.pauli).ny % 2 == 0;
    if (real) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense<Eigen::MatrixXd, double>(h, real_phase));
        return collect<decltype(solver), Eigen::VectorXd>(solver, n, tol);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense<Eigen::MatrixXcd, cplx>(h, complex_phase));
    return collect<decltype(solver), Eigen::VectorXcd>(solver, n, tol);
}

StateVector apply_hamiltonian(const Hamiltonian &h, const StateVector &psi) {
    if (h.num_qubits() != psi.num_qubits()) throw ArgumentError("apply_hamiltonian: size mismatch");
    std::vector<cplx> out(psi.dimension(), 0.0);
    const auto &in = psi.amplitudes();
    for (const auto &t : h.terms()) {
        const Masks k = masks(t.pauli);
        const cplx ph = complex_phase(k.ny) * t.coefficient;
        for (size_t b = 0; b < in.size(); ++b) {
            const double s = (std::popcount(b & k.z) & 1) ? -1.0 : 1.0;
            out[b ^ k.x] += ph * s * in[b];
        }
    }
    return StateVector(psi.qubits(), std::move(out));
}

double power_iteration_ground_energy(const Hamiltonian &h, size_t max_iterations, double tol, uint64_t seed) {
    double shift = 0.0;
    for (const auto &t : h.terms()) shift += std::abs(t.coefficient);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<cplx> amps(size_t(1) << h.num_qubits());
    for (auto &a : amps) a = cplx(gauss(rng), gauss(rng));
    StateVector v(StateVector::range(h.num_qubits()), std::move(amps));
    v.normalize();
    double energy = 0.0, previous = std::numeric_limits<double>::infinity();
    for (size_t it = 0; it < max_iterations; ++it) {
        StateVector hv = apply_hamiltonian(h, v);
        energy = std::real(inner(v, hv));
        if (std::abs(energy - previous) < tol) break;
        previous = energy;
        for (size_t b = 0; b < hv.dimension(); ++b) hv.amplitudes()[b] = shift * v.amplitudes()[b] - hv.amplitudes()[b];
        hv.normalize();
        v = std::move(hv);
    }
    return energy;
}

}  // namespace mbvqe
