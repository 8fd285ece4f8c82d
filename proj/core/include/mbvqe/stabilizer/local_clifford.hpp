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
#include <cstdint>
#include <string>
#include <string_view>

namespace mbvqe {

/// A Pauli letter with a sign, the image of X or Z under a Clifford conjugation.
struct SignedPauli {
    char pauli = 'I';
    int sign = 1;
    bool operator==(const SignedPauli &) const = default;
};

/// One of the 24 single-qubit Clifford operations (modulo global phase).
///
/// Elements are identified by their conjugation action C X C^dag, C Z C^dag. Each has a
/// shortest word over {H, S} in application order ("HS" = H first, then S); the
/// identity's word is empty and its name is "I".
class LocalClifford {
   public:
    static constexpr int kGroupOrder = 24;

    LocalClifford() = default;
    static LocalClifford from_id(int id);
    static LocalClifford from_images(SignedPauli x_image, SignedPauli z_image);
    /// Parses a name produced by name(), or any word over {H,S,X,Y,Z} (e.g. "SdagH" is not
    /// accepted; use "SSSH").
    static LocalClifford from_word(std::string_view word);

    static LocalClifford identity() { return {}; }
    static LocalClifford hadamard();
    static LocalClifford phase();
    static LocalClifford phase_dag();
    static LocalClifford pauli(char p);

    static const std::array<LocalClifford, kGroupOrder> &all();

    int id() const { return id_; }
    SignedPauli image_of_x() const;
    SignedPauli image_of_z() const;
    /// C P C^dag for P in {I,X,Y,Z}.
    SignedPauli conjugate(char pauli) const;

    /// Gate word in application order, "" for identity.
    const std::string &word() const;
    std::string name() const;
    /// A unitary representative, row-major.
    std::array<std::complex<double>, 4> matrix() const;

    /// The element equal to applying *this first and then `next`.
    LocalClifford then(const LocalClifford &next) const;
    LocalClifford inverse() const;

    bool is_identity() const { return id_ == 0; }
    /// True when C Z C^dag = +-Z, i.e. C commutes with CZ up to Paulis acting on this qubit.
    bool preserves_z_axis() const;
    /// True for elements that are diagonal in the computational basis (I, S, Z, S^dag).
    bool is_diagonal() const;

    bool operator==(const LocalClifford &) const = default;

   private:
    explicit LocalClifford(int id) : id_(id) {}
    uint8_t id_ = 0;
};

}  // namespace mbvqe
