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

#include "mbvqe/models/hamiltonian.hpp"

#include <cmath>
#include <map>
#include <json.hpp>

#include "mbvqe/errors.hpp"

namespace mbvqe {

void Hamiltonian::add(double coefficient, PauliString p) {
    if (!std::isfinite(coefficient)) throw ArgumentError("Hamiltonian: non-finite coefficient");
    if (p.num_qubits() != num_qubits_) throw ArgumentError("Hamiltonian: term acts on the wrong number of qubits");
    if (!p.is_hermitian()) throw ArgumentError("Hamiltonian: term " + p.str() + " is not Hermitian");
    if (p.sign() < 0) coefficient = -coefficient;
    p.set_phase_exponent(0);
    terms_.push_back({coefficient, std::move(p)});
}

void Hamiltonian::add(double coefficient, std::string_view word) { add(coefficient, PauliString::from_text(word)); }

Hamiltonian &Hamiltonian::operator+=(const Hamiltonian &other) {
    if (other.num_qubits_ != num_qubits_) throw ArgumentError("Hamiltonian: size mismatch");
    for (const auto &t : other.terms_) terms_.push_back(t);
    return *this;
}

Hamiltonian Hamiltonian::scaled(double factor) const {
    Hamiltonian out = *this;
    for (auto &t : out.terms_) t.coefficient *= factor;
    return out;
}

Hamiltonian Hamiltonian::simplified(double tol) const {
    std::map<std::string, size_t> slot;
    Hamiltonian out(num_qubits_);
    for (const auto &t : terms_) {
        auto [it, fresh] = slot.emplace(t.pauli.word(), out.terms_.size());
        if (fresh) {
            out.terms_.push_back(t);
        } else {
            out.terms_[it->second].coefficient += t.coefficient;
        }
    }
    std::erase_if(out.terms_, [tol](const PauliTerm &t) { return std::abs(t.coefficient) <= tol; });
    return out;
}

std::string Hamiltonian::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &t : terms_) j.push_back({t.coefficient, t.pauli.word()});
    return j.dump();
}

Hamiltonian operator+(Hamiltonian a, const Hamiltonian &b) { return a += b; }

}  // namespace mbvqe
