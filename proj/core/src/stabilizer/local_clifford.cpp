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

#include "mbvqe/stabilizer/local_clifford.hpp"

#include <cmath>
#include <deque>
#include <vector>

#include "mbvqe/errors.hpp"

namespace mbvqe {

namespace {

using Mat2 = std::array<std::complex<double>, 4>;

Mat2 mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Mat2 dagger(const Mat2 &a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }

const Mat2 &pauli_matrix(char p) {
    static const Mat2 I{1, 0, 0, 1};
    static const Mat2 X{0, 1, 1, 0};
    static const Mat2 Y{0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0};
    static const Mat2 Z{1, 0, 0, -1};
    switch (p) {
        case 'X': return X;
        case 'Y': return Y;
        case 'Z': return Z;
        default: return I;
    }
}

Mat2 gate_matrix(char g) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (g) {
        case 'H': return {r, r, r, -r};
        case 'S': return {1, 0, 0, std::complex<double>(0, 1)};
        case 'X':
        case 'Y':
        case 'Z': return pauli_matrix(g);
        default: throw ArgumentError(std::string("unknown single-qubit Clifford gate '") + g + "'");
    }
}

SignedPauli classify(const Mat2 &m) {
    for (char p : {'X', 'Y', 'Z'}) {
        const Mat2 &ref = pauli_matrix(p);
        for (int sign : {1, -1}) {
            double err = 0;
            for (int k = 0; k < 4; ++k) err += std::abs(m[k] - double(sign) * ref[k]);
            if (err < 1e-9) return {p, sign};
        }
    }
    throw std::logic_error("conjugated Pauli is not a signed Pauli");
}

struct Element {
    std::string word;
    Mat2 matrix;
    SignedPauli x_image;
    SignedPauli z_image;
};

struct Table {
    std::vector<Element> elements;
    int find(SignedPauli x, SignedPauli z) const {
        for (size_t k = 0; k < elements.size(); ++k) {
            if (elements[k].x_image == x && elements[k].z_image == z) return int(k);
        }
        return -1;
    }
};

const Table &table() {
    static const Table t = [] {
        Table out;
        auto make = [](std::string word, const Mat2 &m) {
            return Element{std::move(word), m, classify(mul(mul(m, pauli_matrix('X')), dagger(m))),
                           classify(mul(mul(m, pauli_matrix('Z')), dagger(m)))};
        };
        std::deque<Element> frontier;
        frontier.push_back(make("", pauli_matrix('I')));
        while (!frontier.empty()) {
            Element e = frontier.front();
            frontier.pop_front();
            if (out.find(e.x_image, e.z_image) >= 0) continue;
            out.elements.push_back(e);
            for (char g : {'H', 'S'}) {
                frontier.push_back(make(e.word + g, mul(gate_matrix(g), e.matrix)));
            }
        }
        if (out.elements.size() != LocalClifford::kGroupOrder) throw std::logic_error("Clifford table size");
        return out;
    }();
    return t;
}

}  // namespace

LocalClifford LocalClifford::from_id(int id) {
    if (id < 0 || id >= kGroupOrder) throw ArgumentError("LocalClifford id out of range");
    return LocalClifford(id);
}

LocalClifford LocalClifford::from_images(SignedPauli x_image, SignedPauli z_image) {
    int k = table().find(x_image, z_image);
    if (k < 0) throw ArgumentError("images do not define a Clifford operation");
    return LocalClifford(k);
}

LocalClifford LocalClifford::from_word(std::string_view word) {
    if (word == "I") return identity();
    Mat2 m = pauli_matrix('I');
    for (char g : word) m = mul(gate_matrix(g), m);
    return from_images(classify(mul(mul(m, pauli_matrix('X')), dagger(m))),
                       classify(mul(mul(m, pauli_matrix('Z')), dagger(m))));
}

LocalClifford LocalClifford::hadamard() { return from_word("H"); }
LocalClifford LocalClifford::phase() { return from_word("S"); }
LocalClifford LocalClifford::phase_dag() { return from_word("SSS"); }
LocalClifford LocalClifford::pauli(char p) {
    if (p == 'I') return identity();
    return from_word(std::string(1, p));
}

const std::array<LocalClifford, LocalClifford::kGroupOrder> &LocalClifford::all() {
    static const auto elements = [] {
        std::array<LocalClifford, kGroupOrder> out;
        for (int k = 0; k < kGroupOrder; ++k) out[k] = LocalClifford(k);
        return out;
    }();
    return elements;
}

SignedPauli LocalClifford::image_of_x() const { return table().elements[id_].x_image; }
SignedPauli LocalClifford::image_of_z() const { return table().elements[id_].z_image; }

SignedPauli LocalClifford::conjugate(char pauli) const {
    switch (pauli) {
        case 'I': return {'I', 1};
        case 'X': return image_of_x();
        case 'Z': return image_of_z();
        case 'Y': {
            // Y = i X Z, so C Y C^dag = i (C X C^dag)(C Z C^dag).
            const auto &e = table().elements[id_];
            Mat2 y = mul(pauli_matrix(e.x_image.pauli), pauli_matrix(e.z_image.pauli));
            for (auto &v : y) v *= std::complex<double>(0, 1) * double(e.x_image.sign * e.z_image.sign);
            return classify(y);
        }
        default: throw ArgumentError(std::string("unknown Pauli character '") + pauli + "'");
    }
}

const std::string &LocalClifford::word() const { return table().elements[id_].word; }

std::string LocalClifford::name() const {
    const auto &w = word();
    return w.empty() ? std::string("I") : w;
}

std::array<std::complex<double>, 4> LocalClifford::matrix() const { return table().elements[id_].matrix; }

LocalClifford LocalClifford::then(const LocalClifford &next) const {
    Mat2 m = mul(next.matrix(), matrix());
    return from_images(classify(mul(mul(m, pauli_matrix('X')), dagger(m))),
                       classify(mul(mul(m, pauli_matrix('Z')), dagger(m))));
}

LocalClifford LocalClifford::inverse() const {
    Mat2 m = dagger(matrix());
    return from_images(classify(mul(mul(m, pauli_matrix('X')), dagger(m))),
                       classify(mul(mul(m, pauli_matrix('Z')), dagger(m))));
}

bool LocalClifford::preserves_z_axis() const { return image_of_z().pauli == 'Z'; }

bool LocalClifford::is_diagonal() const { return image_of_z() == SignedPauli{'Z', 1}; }

}  // namespace mbvqe
