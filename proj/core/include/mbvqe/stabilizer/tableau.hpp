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
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mbvqe/stabilizer/local_clifford.hpp"
#include "mbvqe/stabilizer/pauli_string.hpp"

namespace mbvqe {

enum class CliffordGate { H, S, S_DAG, X, Y, Z, CZ, CX };

std::string_view gate_name(CliffordGate gate);
size_t gate_arity(CliffordGate gate);

/// How non-deterministic measurement outcomes are chosen.
class OutcomePolicy {
   public:
    static OutcomePolicy fixed_plus() { return OutcomePolicy(false, 0); }
    static OutcomePolicy random(uint64_t seed) { return OutcomePolicy(true, seed); }

    /// +1 or -1.
    int choose();
    bool is_random() const { return random_; }

   private:
    OutcomePolicy(bool random, uint64_t seed) : random_(random), rng_(seed) {}
    bool random_;
    std::mt19937_64 rng_;
};

struct PauliMeasurement {
    int outcome = 1;  // eigenvalue, +1 or -1
    bool deterministic = false;
};

/// Stabilizer state with destabilizers (Aaronson-Gottesman layout).
///
/// Row i of the stabilizers anticommutes with destabilizer i and commutes with every other
/// row. Measurement costs O(n^2) word operations.
class StabilizerTableau {
   public:
    /// |0...0>.
    explicit StabilizerTableau(size_t num_qubits);

    static StabilizerTableau plus_state(size_t num_qubits);
    /// Graph state prod CZ |+>^n; stabilizers X_v prod_{k in N(v)} Z_k.
    static StabilizerTableau graph_state(size_t num_qubits, std::span<const std::pair<size_t, size_t>> edges);
    /// Builds a tableau from n independent, commuting, Hermitian generators and fills in
    /// matching destabilizers. Throws ArgumentError when the generators are invalid.
    static StabilizerTableau from_stabilizers(std::vector<PauliString> stabilizers);

    size_t num_qubits() const { return n_; }
    const std::vector<PauliString> &stabilizers() const { return stabilizers_; }
    const std::vector<PauliString> &destabilizers() const { return destabilizers_; }

    void apply(CliffordGate gate, std::span<const size_t> targets);
    void apply_h(size_t q);
    void apply_s(size_t q);
    void apply_s_dag(size_t q);
    void apply_pauli(size_t q, char pauli);
    void apply_cx(size_t control, size_t target);
    void apply_cz(size_t a, size_t b);
    /// Applies the gate word of `c` to qubit q, so the new state is C_q |old>.
    void apply_local_clifford(size_t q, const LocalClifford &c);

    /// Projective measurement of a Hermitian Pauli observable.
    PauliMeasurement measure(const PauliString &observable, OutcomePolicy &policy);

    /// <P> for Hermitian P: +1 or -1 when P is (up to sign) in the stabilizer group, else 0.
    int expectation(const PauliString &observable) const;
    /// +1/-1 if the outcome is determined, nullopt otherwise.
    std::optional<int> peek(const PauliString &observable) const;

    /// Checks the commutation structure and Hermiticity; throws std::logic_error on failure.
    void validate() const;
    bool is_valid() const;

    /// Drops qubits that are each in a single-qubit Pauli eigenstate, returning the tableau of
    /// the remaining qubits (in their original relative order).
    StabilizerTableau without_qubits(std::span<const size_t> removed) const;

   private:
    void check_qubit(size_t q) const;
    template <typename F>
    void for_each_row(F &&f) {
        for (auto &p : stabilizers_) f(p);
        for (auto &p : destabilizers_) f(p);
    }

    size_t n_;
    std::vector<PauliString> stabilizers_;
    std::vector<PauliString> destabilizers_;
};

/// Value-returning form: the conjugated tableau.
StabilizerTableau apply_clifford(StabilizerTableau tableau, CliffordGate gate, std::span<const size_t> targets);

struct MeasuredTableau {
    StabilizerTableau tableau;
    int outcome;
    bool deterministic;
};
MeasuredTableau measure_pauli(StabilizerTableau tableau, const PauliString &observable, OutcomePolicy &policy);

/// Gaussian elimination over Pauli products: a maximal independent subset of the group
/// generated by `generators`, preserving signs. Throws if -I is generated.
std::vector<PauliString> independent_generators(std::vector<PauliString> generators);

}  // namespace mbvqe
