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

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace mbvqe {

using BitVector = boost::dynamic_bitset<uint64_t>;

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Qubit q carries P_q = I, X, Z or Y for (x, z) bits (0,0), (1,0), (0,1), (1,1).
/// Y is stored as Y itself (not XZ), so the operator is Hermitian exactly when the
/// phase exponent is even.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses "XIZY", "+XZ", "-YY", "iX", "-iZ". Underscores read as identity.
    static PauliString from_text(std::string_view text);
    /// Single-qubit Pauli `pauli` (one of "IXYZ") on `qubit` of an n-qubit register.
    static PauliString single(size_t num_qubits, size_t qubit, char pauli);

    size_t num_qubits() const { return xs_.size(); }
    bool x(size_t q) const { return xs_[q]; }
    bool z(size_t q) const { return zs_[q]; }
    char pauli_at(size_t q) const;
    void set_pauli(size_t q, char pauli);

    int phase_exponent() const { return phase_; }
    void set_phase_exponent(int e) { phase_ = ((e % 4) + 4) % 4; }
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    /// +1 or -1; only meaningful for Hermitian strings.
    int sign() const { return phase_ == 0 ? 1 : -1; }
    void negate() { phase_ = (phase_ + 2) & 3; }

    bool is_identity() const { return xs_.none() && zs_.none(); }
    size_t weight() const { return (xs_ | zs_).count(); }

    /// this <- this * rhs, with the phase from single-qubit Pauli products.
    PauliString &operator*=(const PauliString &rhs);
    bool commutes_with(const PauliString &other) const;

    /// The same operator restricted to / re-embedded on other qubits.
    PauliString tensor(const PauliString &rhs) const;

    bool operator==(const PauliString &other) const = default;

    /// "+XIZ", "-iY", ...
    std::string str() const;
    /// Word without phase prefix, e.g. "XIZ".
    std::string word() const;

    BitVector &xs() { return xs_; }
    BitVector &zs() { return zs_; }
    const BitVector &xs() const { return xs_; }
    const BitVector &zs() const { return zs_; }

   private:
    BitVector xs_;
    BitVector zs_;
    int phase_ = 0;
};

PauliString operator*(PauliString lhs, const PauliString &rhs);

}  // namespace mbvqe
