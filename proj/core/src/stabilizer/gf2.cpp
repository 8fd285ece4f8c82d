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

#include "mbvqe/stabilizer/gf2.hpp"

#include "mbvqe/errors.hpp"

namespace mbvqe::gf2 {

size_t rank(std::vector<BitVector> rows) {
    if (rows.empty()) return 0;
    size_t width = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < width && r < rows.size(); ++col) {
        size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col]) rows[i] ^= rows[r];
        }
        ++r;
    }
    return r;
}

std::optional<BitVector> solve_combination(const std::vector<BitVector> &rows, const BitVector &target) {
    const size_t m = rows.size();
    const size_t width = target.size();
    // Augmented system: columns are the rows' coordinates, unknowns are the m coefficients.
    // Work on the transpose implicitly: each equation is one coordinate.
    std::vector<BitVector> eq(width, BitVector(m + 1));
    for (size_t i = 0; i < m; ++i) {
        if (rows[i].size() != width) throw ArgumentError("gf2::solve_combination: width mismatch");
        for (size_t c = rows[i].find_first(); c != BitVector::npos; c = rows[i].find_next(c)) eq[c][i] = true;
    }
    for (size_t c = 0; c < width; ++c) eq[c][m] = target[c];

    std::vector<size_t> pivot_col_of_row;
    size_t r = 0;
    for (size_t var = 0; var < m && r < width; ++var) {
        size_t pivot = r;
        while (pivot < width && !eq[pivot][var]) ++pivot;
        if (pivot == width) continue;
        std::swap(eq[r], eq[pivot]);
        for (size_t i = 0; i < width; ++i) {
            if (i != r && eq[i][var]) eq[i] ^= eq[r];
        }
        pivot_col_of_row.push_back(var);
        ++r;
    }
    for (size_t i = r; i < width; ++i) {
        if (eq[i][m]) return std::nullopt;
    }
    BitVector solution(m);
    for (size_t i = 0; i < r; ++i) solution[pivot_col_of_row[i]] = eq[i][m];
    return solution;
}

BitVector symplectic(const PauliString &p) {
    const size_t n = p.num_qubits();
    BitVector v(2 * n);
    for (size_t q = 0; q < n; ++q) {
        v[q] = p.x(q);
        v[n + q] = p.z(q);
    }
    return v;
}

}  // namespace mbvqe::gf2
