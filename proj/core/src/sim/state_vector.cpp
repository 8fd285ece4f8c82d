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

#include "mbvqe/sim/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "mbvqe/errors.hpp"

namespace mbvqe {

StateVector::StateVector(std::vector<int> qubits, std::vector<cplx> amplitudes)
    : qubits_(std::move(qubits)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != (size_t(1) << qubits_.size())) {
        throw ArgumentError("StateVector: amplitude count must be 2^(qubit count)");
    }
    std::vector<int> sorted = qubits_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ArgumentError("StateVector: duplicate qubit id");
}

StateVector StateVector::zeros(std::vector<int> qubits) {
    std::vector<cplx> amps(size_t(1) << qubits.size(), 0.0);
    amps[0] = 1.0;
    return StateVector(std::move(qubits), std::move(amps));
}

StateVector StateVector::plus(std::vector<int> qubits) {
    const size_t dim = size_t(1) << qubits.size();
    std::vector<cplx> amps(dim, cplx(1.0 / std::sqrt(double(dim))));
    return StateVector(std::move(qubits), std::move(amps));
}

std::vector<int> StateVector::range(size_t n) {
    std::vector<int> ids(n);
    for (size_t i = 0; i < n; ++i) ids[i] = int(i) + 1;
    return ids;
}

size_t StateVector::position(int qubit) const {
    auto it = std::find(qubits_.begin(), qubits_.end(), qubit);
    if (it == qubits_.end()) throw ArgumentError("StateVector: qubit " + std::to_string(qubit) + " not in register");
    return size_t(it - qubits_.begin());
}

bool StateVector::contains(int qubit) const { return std::find(qubits_.begin(), qubits_.end(), qubit) != qubits_.end(); }

double StateVector::norm() const {
    double s = 0;
    for (const auto &a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::normalize() {
    const double n = norm();
    if (!(n > 1e-150) || !std::isfinite(n)) throw DegenerateStateError("StateVector: cannot normalize a zero vector");
    for (auto &a : amplitudes_) a /= n;
}

namespace {
inline size_t bit_at(size_t pos, size_t n) { return size_t(1) << (n - 1 - pos); }
}  // namespace

void StateVector::apply(size_t pos, const Matrix2 &m) {
    const size_t b = bit_at(pos, qubits_.size());
    const size_t dim = amplitudes_.size();
    for (size_t i = 0; i < dim; ++i) {
        if (i & b) continue;
        const cplx a0 = amplitudes_[i], a1 = amplitudes_[i | b];
        amplitudes_[i] = m[0] * a0 + m[1] * a1;
        amplitudes_[i | b] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply_cz(size_t a, size_t b) {
    const size_t mask = bit_at(a, qubits_.size()) | bit_at(b, qubits_.size());
    for (size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & mask) == mask) amplitudes_[i] = -amplitudes_[i];
    }
}

void StateVector::apply_cx(size_t control, size_t target) {
    const size_t bc = bit_at(control, qubits_.size()), bt = bit_at(target, qubits_.size());
    for (size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & bc) && !(i & bt)) std::swap(amplitudes_[i], amplitudes_[i | bt]);
    }
}

namespace {

struct PauliMasks {
    size_t x = 0, z = 0;
    cplx phase = 1.0;
};

PauliMasks masks_of(const PauliString &p, size_t n) {
    if (p.num_qubits() != n) throw ArgumentError("Pauli string size does not match the register");
    PauliMasks m;
    int e = p.phase_exponent();
    for (size_t q = 0; q < n; ++q) {
        const size_t b = bit_at(q, n);
        if (p.x(q)) m.x |= b;
        if (p.z(q)) m.z |= b;
        if (p.x(q) && p.z(q)) ++e;  // Y = i X Z
    }
    static const cplx powers[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    m.phase = powers[e & 3];
    return m;
}

}  // namespace

void StateVector::apply_pauli(const PauliString &p) {
    PauliMasks m = masks_of(p, qubits_.size());
    std::vector<cplx> out(amplitudes_.size());
    for (size_t i = 0; i < amplitudes_.size(); ++i) {
        cplx v = amplitudes_[i] * m.phase;
        if (std::popcount(i & m.z) & 1) v = -v;
        out[i ^ m.x] = v;
    }
    amplitudes_ = std::move(out);
}

double StateVector::pauli_expectation(const PauliString &p) const {
    PauliMasks m = masks_of(p, qubits_.size());
    cplx s = 0;
    for (size_t i = 0; i < amplitudes_.size(); ++i) {
        cplx v = amplitudes_[i];
        if (std::popcount(i & m.z) & 1) v = -v;
        s += std::conj(amplitudes_[i ^ m.x]) * v;
    }
    s *= m.phase;
    if (std::abs(s.imag()) > 1e-8 * std::max(1.0, norm() * norm())) {
        throw ArgumentError("pauli_expectation: observable is not Hermitian");
    }
    return s.real();
}

void StateVector::append_plus(int id) {
    if (contains(id)) throw ArgumentError("StateVector: qubit already present");
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<cplx> out(amplitudes_.size() * 2);
    for (size_t i = 0; i < amplitudes_.size(); ++i) {
        out[2 * i] = amplitudes_[i] * r;
        out[2 * i + 1] = amplitudes_[i] * r;
    }
    amplitudes_ = std::move(out);
    qubits_.push_back(id);
}

double StateVector::project_out(size_t pos, const std::array<cplx, 2> &ket) {
    const size_t n = qubits_.size();
    const size_t b = bit_at(pos, n);
    const size_t low = b - 1;
    const cplx c0 = std::conj(ket[0]), c1 = std::conj(ket[1]);
    std::vector<cplx> out(amplitudes_.size() / 2);
    double sq = 0;
    for (size_t j = 0; j < out.size(); ++j) {
        const size_t i = ((j & ~low) << 1) | (j & low);
        out[j] = c0 * amplitudes_[i] + c1 * amplitudes_[i | b];
        sq += std::norm(out[j]);
    }
    amplitudes_ = std::move(out);
    qubits_.erase(qubits_.begin() + std::ptrdiff_t(pos));
    return sq;
}

double StateVector::branch_weight(size_t pos, const std::array<cplx, 2> &ket) const {
    const size_t b = bit_at(pos, qubits_.size());
    const cplx c0 = std::conj(ket[0]), c1 = std::conj(ket[1]);
    double sq = 0;
    for (size_t i = 0; i < amplitudes_.size(); ++i) {
        if (i & b) continue;
        sq += std::norm(c0 * amplitudes_[i] + c1 * amplitudes_[i | b]);
    }
    return sq;
}

StateVector StateVector::permuted(const std::vector<int> &order) const {
    if (order.size() != qubits_.size()) throw ArgumentError("StateVector::permuted: size mismatch");
    const size_t n = qubits_.size();
    std::vector<size_t> src(n);
    for (size_t k = 0; k < n; ++k) src[k] = position(order[k]);
    std::vector<cplx> out(amplitudes_.size());
    for (size_t j = 0; j < out.size(); ++j) {
        size_t i = 0;
        for (size_t k = 0; k < n; ++k) {
            if (j & bit_at(k, n)) i |= bit_at(src[k], n);
        }
        out[j] = amplitudes_[i];
    }
    return StateVector(order, std::move(out));
}

std::string StateVector::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < qubits_.size(); ++i) out << (i ? "," : "") << qubits_[i];
    out << "]";
    for (const auto &a : amplitudes_) out << " " << a;
    return out.str();
}

cplx inner(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) throw ArgumentError("inner: dimension mismatch");
    cplx s = 0;
    for (size_t i = 0; i < a.dimension(); ++i) s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    return s;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) throw ArgumentError("fidelity: dimension mismatch");
    const double na = a.norm(), nb = b.norm();
    if (!(na > 0) || !(nb > 0)) throw DegenerateStateError("fidelity: zero vector");
    const double f = std::norm(inner(a, b)) / (na * na * nb * nb);
    return std::clamp(f, 0.0, 1.0);
}

namespace gates {

Matrix2 pauli(char p) {
    switch (p) {
        case 'I': return {1.0, 0.0, 0.0, 1.0};
        case 'X': return {0.0, 1.0, 1.0, 0.0};
        case 'Y': return {0.0, cplx(0, -1), cplx(0, 1), 0.0};
        case 'Z': return {1.0, 0.0, 0.0, -1.0};
        default: throw ArgumentError(std::string("not a Pauli letter: ") + p);
    }
}

Matrix2 hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    return {r, r, r, -r};
}

Matrix2 phase() { return {1.0, 0.0, 0.0, cplx(0, 1)}; }

Matrix2 rotation(char p, double theta) {
    Matrix2 m = pauli(p);
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {c + cplx(0, s) * m[0], cplx(0, s) * m[1], cplx(0, s) * m[2], c + cplx(0, s) * m[3]};
}

Matrix2 product(const Matrix2 &a, const Matrix2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace gates

namespace {

constexpr char kMagic[8] = {'M', 'B', 'V', 'Q', 'E', 'S', 'V', '1'};

template <typename T>
void write_le(std::ostream &out, T value) {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
    out.write(reinterpret_cast<const char *>(bytes), sizeof(T));
}

template <typename T>
T read_le(std::istream &in) {
    unsigned char bytes[sizeof(T)];
    if (!in.read(reinterpret_cast<char *>(bytes), sizeof(T))) throw ArgumentError("load_binary: truncated file");
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
    T value;
    std::memcpy(&value, bytes, sizeof(T));
    return value;
}

}  // namespace

void dump_binary(const StateVector &state, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("dump_binary: cannot open " + path);
    out.write(kMagic, sizeof(kMagic));
    write_le<uint32_t>(out, uint32_t(state.num_qubits()));
    for (int q : state.qubits()) write_le<int32_t>(out, q);
    for (const auto &a : state.amplitudes()) {
        write_le<float>(out, float(a.real()));
        write_le<float>(out, float(a.imag()));
    }
}

StateVector load_binary(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("load_binary: cannot open " + path);
    char magic[8];
    if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) throw ArgumentError("load_binary: bad magic");
    const uint32_t n = read_le<uint32_t>(in);
    if (n > 40) throw ArgumentError("load_binary: implausible qubit count");
    std::vector<int> qubits(n);
    for (auto &q : qubits) q = read_le<int32_t>(in);
    std::vector<cplx> amps(size_t(1) << n);
    for (auto &a : amps) {
        float re = read_le<float>(in);
        float im = read_le<float>(in);
        a = cplx(re, im);
    }
    return StateVector(std::move(qubits), std::move(amps));
}

}  // namespace mbvqe
