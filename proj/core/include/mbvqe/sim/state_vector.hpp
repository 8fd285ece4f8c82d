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
#include <complex>
#include <string>
#include <vector>

#include "mbvqe/stabilizer/pauli_string.hpp"

namespace mbvqe {

using cplx = std::complex<double>;
using Matrix2 = std::array<cplx, 4>;  // row-major

/// Dense amplitudes over an ordered list of qubit ids; the first id is the most significant bit.
class StateVector {
   public:
    StateVector() : amplitudes_(1, cplx(1.0)) {}
    StateVector(std::vector<int> qubits, std::vector<cplx> amplitudes);

    static StateVector zeros(std::vector<int> qubits);
    static StateVector plus(std::vector<int> qubits);
    /// Qubits 1..n.
    static std::vector<int> range(size_t n);

    const std::vector<int> &qubits() const { return qubits_; }
    const std::vector<cplx> &amplitudes() const { return amplitudes_; }
    std::vector<cplx> &amplitudes() { return amplitudes_; }
    size_t num_qubits() const { return qubits_.size(); }
    size_t dimension() const { return amplitudes_.size(); }
    /// Register position of qubit id; throws ArgumentError if absent.
    size_t position(int qubit) const;
    bool contains(int qubit) const;

    double norm() const;
    /// Throws DegenerateStateError when the norm is (numerically) zero.
    void normalize();

    void apply(size_t pos, const Matrix2 &m);
    void apply_cz(size_t a, size_t b);
    void apply_cx(size_t control, size_t target);
    /// Applies a Pauli string whose qubit i acts on register position i.
    void apply_pauli(const PauliString &p);
    double pauli_expectation(const PauliString &p) const;

    /// Appends qubit `id` in state |+> as the least significant bit.
    void append_plus(int id);
    /// Projects position `pos` onto <bra| (bra given as the row vector's conjugate) and drops it.
    /// Returns the squared norm of the projected (unnormalized) state.
    double project_out(size_t pos, const std::array<cplx, 2> &ket);
    /// Squared norm project_out would return, without modifying the state.
    double branch_weight(size_t pos, const std::array<cplx, 2> &ket) const;
    /// Reorders the register to `order` (a permutation of qubits()).
    StateVector permuted(const std::vector<int> &order) const;

    std::string str() const;

   private:
    std::vector<int> qubits_;
    std::vector<cplx> amplitudes_;
};

cplx inner(const StateVector &a, const StateVector &b);
/// |<a|b>|^2 / (|a|^2 |b|^2), comparing registers position by position.
double fidelity(const StateVector &a, const StateVector &b);

namespace gates {
Matrix2 pauli(char p);
Matrix2 hadamard();
Matrix2 phase();
/// exp(i theta P / 2).
Matrix2 rotation(char p, double theta);
Matrix2 product(const Matrix2 &a, const Matrix2 &b);
}  // namespace gates

/// Writes "MBVQESV1", u32 qubit count, i32 qubit ids, then (re, im) float32 pairs, little-endian.
void dump_binary(const StateVector &state, const std::string &path);
StateVector load_binary(const std::string &path);

}  // namespace mbvqe
