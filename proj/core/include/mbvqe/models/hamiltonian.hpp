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

#include <string>
#include <string_view>
#include <vector>

#include "mbvqe/stabilizer/pauli_string.hpp"

namespace mbvqe {

struct PauliTerm {
    double coefficient = 0.0;
    PauliString pauli;  // phase exponent always 0
};

/// Real linear combination of Hermitian Pauli words on a fixed number of qubits.
class Hamiltonian {
   public:
    explicit Hamiltonian(size_t num_qubits = 0) : num_qubits_(num_qubits) {}

    size_t num_qubits() const { return num_qubits_; }
    const std::vector<PauliTerm> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Adds c * p. A negative sign on p is folded into the coefficient; imaginary phases,
    /// non-finite coefficients and size mismatches throw ArgumentError.
    void add(double coefficient, PauliString p);
    void add(double coefficient, std::string_view word);
    Hamiltonian &operator+=(const Hamiltonian &other);
    Hamiltonian scaled(double factor) const;

    /// Merges equal words and drops terms with |c| <= tol.
    Hamiltonian simplified(double tol = 0.0) const;

    /// JSON-ready text: [[c, "XIZY"], ...].
    std::string to_json() const;

   private:
    size_t num_qubits_;
    std::vector<PauliTerm> terms_;
};

Hamiltonian operator+(Hamiltonian a, const Hamiltonian &b);

}  // namespace mbvqe
