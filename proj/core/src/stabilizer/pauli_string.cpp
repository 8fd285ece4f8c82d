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

#include "mbvqe/stabilizer/pauli_string.hpp"

#include "mbvqe/errors.hpp"

namespace mbvqe {

namespace {

// Exponent of i picked up by sigma(x1,z1) * sigma(x2,z2) (Aaronson-Gottesman g).
int product_phase(bool x1, bool z1, bool x2, bool z2) {
    if (x1 && z1) return int(z2) - int(x2);
    if (x1) return int(z2) * (2 * int(x2) - 1);
    if (z1) return int(x2) * (1 - 2 * int(z2));
    return 0;
}

}  // namespace

PauliString::PauliString(size_t num_qubits) : xs_(num_qubits), zs_(num_qubits) {}

PauliString PauliString::single(size_t num_qubits, size_t qubit, char pauli) {
    if (qubit >= num_qubits) throw ArgumentError("PauliString::single: qubit out of range");
    PauliString p(num_qubits);
    p.set_pauli(qubit, pauli);
    return p;
}

PauliString PauliString::from_text(std::string_view text) {
    int phase = 0;
    size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') phase = 2;
        ++k;
    }
    if (k < text.size() && text[k] == 'i') {
        phase += 1;
        ++k;
    }
    PauliString p(text.size() - k);
    for (size_t q = 0; k < text.size(); ++k, ++q) {
        char c = text[k];
        if (c == '_') c = 'I';
        p.set_pauli(q, c);
    }
    p.set_phase_exponent(phase);
    return p;
}

char PauliString::pauli_at(size_t q) const {
    bool x = xs_[q];
    bool z = zs_[q];
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

void PauliString::set_pauli(size_t q, char pauli) {
    if (q >= num_qubits()) throw ArgumentError("PauliString::set_pauli: qubit out of range");
    switch (pauli) {
        case 'I': xs_[q] = false; zs_[q] = false; break;
        case 'X': xs_[q] = true; zs_[q] = false; break;
        case 'Y': xs_[q] = true; zs_[q] = true; break;
        case 'Z': xs_[q] = false; zs_[q] = true; break;
        default: throw ArgumentError(std::string("unknown Pauli character '") + pauli + "'");
    }
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.num_qubits() != num_qubits()) throw ArgumentError("PauliString product: size mismatch");
    int acc = phase_ + rhs.phase_;
    BitVector overlap = (xs_ | zs_) & (rhs.xs_ | rhs.zs_);
    for (size_t q = overlap.find_first(); q != BitVector::npos; q = overlap.find_next(q)) {
        acc += product_phase(xs_[q], zs_[q], rhs.xs_[q], rhs.zs_[q]);
    }
    xs_ ^= rhs.xs_;
    zs_ ^= rhs.zs_;
    set_phase_exponent(acc);
    return *this;
}

PauliString operator*(PauliString lhs, const PauliString &rhs) {
    lhs *= rhs;
    return lhs;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.num_qubits() != num_qubits()) throw ArgumentError("PauliString commutation: size mismatch");
    size_t anti = ((xs_ & other.zs_) ^ (zs_ & other.xs_)).count();
    return (anti & 1) == 0;
}

PauliString PauliString::tensor(const PauliString &rhs) const {
    PauliString out(num_qubits() + rhs.num_qubits());
    for (size_t q = 0; q < num_qubits(); ++q) out.set_pauli(q, pauli_at(q));
    for (size_t q = 0; q < rhs.num_qubits(); ++q) out.set_pauli(num_qubits() + q, rhs.pauli_at(q));
    out.set_phase_exponent(phase_ + rhs.phase_);
    return out;
}

std::string PauliString::word() const {
    std::string s;
    s.reserve(num_qubits());
    for (size_t q = 0; q < num_qubits(); ++q) s.push_back(pauli_at(q));
    return s;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    return kPrefix[phase_] + word();
}

}  // namespace mbvqe
