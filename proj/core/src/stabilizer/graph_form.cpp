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

#include "mbvqe/stabilizer/graph_form.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mbvqe/errors.hpp"

namespace mbvqe {

size_t GraphForm::degree(size_t q) const {
    return size_t(std::count_if(edges.begin(), edges.end(), [q](const auto &e) { return e.first == q || e.second == q; }));
}

namespace {

// Conjugations acting on a bare list of stabilizer rows.
void rows_h(std::vector<PauliString> &rows, size_t q) {
    for (auto &p : rows) {
        bool x = p.x(q), z = p.z(q);
        if (x && z) p.negate();
        p.xs()[q] = z;
        p.zs()[q] = x;
    }
}

void rows_s_dag(std::vector<PauliString> &rows, size_t q) {
    for (auto &p : rows) {
        bool x = p.x(q);
        if (x && !p.z(q)) p.negate();
        p.zs()[q] = p.z(q) ^ x;
    }
}

void rows_z(std::vector<PauliString> &rows, size_t q) {
    for (auto &p : rows) {
        if (p.x(q)) p.negate();
    }
}

// Gauss-Jordan on the X block with the given column order. Returns the pivot columns; rows
// [0, rank) carry the pivots in that order.
std::vector<size_t> reduce_x_block(std::vector<PauliString> &rows, std::span<const size_t> order) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col : order) {
        if (r == rows.size()) break;
        size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].x(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].x(col)) rows[i] *= rows[r];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

GraphForm tableau_to_graphstate(const StabilizerTableau &tableau, std::span<const size_t> pivot_priority) {
    const size_t n = tableau.num_qubits();
    std::vector<size_t> order;
    if (pivot_priority.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), size_t{0});
    } else {
        std::vector<bool> seen(n, false);
        for (size_t q : pivot_priority) {
            if (q >= n || seen[q]) throw ArgumentError("tableau_to_graphstate: priority must be a permutation of qubits");
            seen[q] = true;
            order.push_back(q);
        }
        if (order.size() != n) throw ArgumentError("tableau_to_graphstate: priority must list every qubit");
    }

    std::vector<PauliString> rows = tableau.stabilizers();
    std::vector<size_t> pivots = reduce_x_block(rows, order);

    std::vector<bool> is_pivot(n, false);
    for (size_t q : pivots) is_pivot[q] = true;
    std::vector<bool> hadamard(n, false);
    for (size_t q = 0; q < n; ++q) {
        if (!is_pivot[q]) {
            hadamard[q] = true;
            rows_h(rows, q);
        }
    }

    // The X block is now invertible; reduce it to the identity with row q owning column q.
    std::vector<size_t> natural(n);
    std::iota(natural.begin(), natural.end(), size_t{0});
    if (reduce_x_block(rows, natural).size() != n) throw std::logic_error("tableau_to_graphstate: X block still singular");

    std::vector<bool> s_dag(n, false), z_flip(n, false);
    for (size_t q = 0; q < n; ++q) {
        if (rows[q].z(q)) {
            s_dag[q] = true;
            rows_s_dag(rows, q);
        }
    }
    for (size_t q = 0; q < n; ++q) {
        if (rows[q].sign() < 0) {
            z_flip[q] = true;
            rows_z(rows, q);
        }
    }

    GraphForm form;
    form.num_qubits = n;
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a + 1; b < n; ++b) {
            if (rows[a].z(b) != rows[b].z(a)) throw std::logic_error("tableau_to_graphstate: adjacency not symmetric");
            if (rows[a].z(b)) form.edges.emplace_back(a, b);
        }
    }
    // |G> = Z^z S_dag^s H^h |psi>, so |psi> = H^h S^s Z^z |G>: Z first, then S, then H.
    form.corrections.reserve(n);
    for (size_t q = 0; q < n; ++q) {
        LocalClifford c = LocalClifford::identity();
        if (z_flip[q]) c = c.then(LocalClifford::pauli('Z'));
        if (s_dag[q]) c = c.then(LocalClifford::phase());
        if (hadamard[q]) c = c.then(LocalClifford::hadamard());
        form.corrections.push_back(c);
    }
    return form;
}

StabilizerTableau graphstate_to_tableau(const GraphForm &form) {
    StabilizerTableau t = StabilizerTableau::graph_state(form.num_qubits, form.edges);
    if (!form.corrections.empty()) {
        if (form.corrections.size() != form.num_qubits) throw ArgumentError("graphstate_to_tableau: correction count");
        for (size_t q = 0; q < form.num_qubits; ++q) t.apply_local_clifford(q, form.corrections[q]);
    }
    return t;
}

}  // namespace mbvqe
