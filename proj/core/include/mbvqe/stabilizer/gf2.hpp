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

#include <optional>
#include <vector>

#include "mbvqe/stabilizer/pauli_string.hpp"

namespace mbvqe::gf2 {

/// Rank of a set of equal-length row vectors.
size_t rank(std::vector<BitVector> rows);

/// Solves sum_i c_i rows[i] = target. Free variables are set to zero, so the answer is
/// deterministic for a given row order. Returns nullopt when target is not in the span.
std::optional<BitVector> solve_combination(const std::vector<BitVector> &rows, const BitVector &target);

/// Symplectic row vector (x | z) of a Pauli string.
BitVector symplectic(const PauliString &p);

}  // namespace mbvqe::gf2
