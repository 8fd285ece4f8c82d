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

#include "mbvqe/models/schwinger.hpp"

#include <cmath>

#include "mbvqe/errors.hpp"

namespace mbvqe {

SchwingerParams SchwingerParams::from_lattice(int S, double a, double g, double mu) {
    if (!(a > 0.0)) throw ArgumentError("SchwingerParams: lattice spacing must be positive");
    SchwingerParams p;
    p.S = S;
    p.J = g * g * a / 2.0;
    p.w = 1.0 / (2.0 * a);
    p.mu = mu;
    p.a = a;
    p.g = g;
    p.validate();
    return p;
}

void SchwingerParams::validate() const {
    if (S < 2 || S % 2 != 0) throw ArgumentError("Schwinger model needs an even S >= 2, got " + std::to_string(S));
    if (!std::isfinite(J) || !std::isfinite(w) || !std::isfinite(mu)) throw ArgumentError("Schwinger parameters must be finite");
    if (a.has_value() != g.has_value()) throw ArgumentError("Schwinger: a and g must be given together");
    if (a) {
        if (std::abs(*g * *g * *a / 2.0 - J) > 1e-12 || std::abs(1.0 / (2.0 * *a) - w) > 1e-12) {
            throw ArgumentError("Schwinger: J and w do not match a and g");
        }
    }
}

Hamiltonian schwinger_hamiltonian(const SchwingerParams &p) {
    p.validate();
    const int S = p.S;
    const size_t n = size_t(S);
    auto z = [n](int q) { return PauliString::single(n, size_t(q - 1), 'Z'); };
    Hamiltonian h(n);
    for (int i = 1; i <= S - 2; ++i) {
        for (int k = i + 1; k <= S - 1; ++k) {
            PauliString zz = z(i);
            zz *= z(k);
            h.add(p.J / 2.0 * double(S - k), zz);
        }
    }
    for (int i = 1; i <= S - 1; ++i) {
        if (i % 2 == 0) continue;
        for (int k = 1; k <= i; ++k) h.add(-p.J / 2.0, z(k));
    }
    for (int i = 1; i <= S - 1; ++i) {
        for (char c : {'X', 'Y'}) {
            PauliString hop = PauliString::single(n, size_t(i - 1), c);
            hop *= PauliString::single(n, size_t(i), c);
            h.add(p.w / 2.0, hop);
        }
    }
    for (int i = 1; i <= S; ++i) h.add((i % 2 ? -1.0 : 1.0) * p.mu / 2.0, z(i));
    return h.simplified(0.0);
}

double order_parameter(const StateVector &input, int S) {
    if (S < 2 || input.num_qubits() != size_t(S)) throw ArgumentError("order_parameter: state must have S qubits");
    StateVector state = input;
    state.normalize();
    const size_t n = size_t(S);
    std::vector<double> zi(n);
    for (size_t i = 0; i < n; ++i) zi[i] = state.pauli_expectation(PauliString::single(n, i, 'Z'));
    auto sgn = [](size_t idx) { return (idx + 1) % 2 ? -1.0 : 1.0; };
    double total = 0.0;
    for (size_t i = 1; i < n; ++i) {
        for (size_t j = 0; j < i; ++j) {
            PauliString zz = PauliString::single(n, i, 'Z');
            zz *= PauliString::single(n, j, 'Z');
            total += 1.0 + sgn(i) * zi[i] + sgn(j) * zi[j] + sgn(i) * sgn(j) * state.pauli_expectation(zz);
        }
    }
    return total / (2.0 * double(S) * double(S - 1));
}

}  // namespace mbvqe
