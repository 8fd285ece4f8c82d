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

#include "mbvqe/stabilizer/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mbvqe/errors.hpp"
#include "mbvqe/stabilizer/gf2.hpp"

namespace mbvqe {

std::string_view gate_name(CliffordGate gate) {
    switch (gate) {
        case CliffordGate::H: return "H";
        case CliffordGate::S: return "S";
        case CliffordGate::S_DAG: return "S_DAG";
        case CliffordGate::X: return "X";
        case CliffordGate::Y: return "Y";
        case CliffordGate::Z: return "Z";
        case CliffordGate::CZ: return "CZ";
        case CliffordGate::CX: return "CX";
    }
    return "?";
}

size_t gate_arity(CliffordGate gate) { return gate == CliffordGate::CZ || gate == CliffordGate::CX ? 2 : 1; }

int OutcomePolicy::choose() {
    if (!random_) return 1;
    return (rng_() & 1) ? -1 : 1;
}

namespace {

bool symplectic_bit(const PauliString &p, size_t col) {
    const size_t n = p.num_qubits();
    return col < n ? p.x(col) : p.z(col - n);
}

}  // namespace

StabilizerTableau::StabilizerTableau(size_t num_qubits) : n_(num_qubits) {
    if (num_qubits == 0) throw ArgumentError("StabilizerTableau needs at least one qubit");
    stabilizers_.reserve(n_);
    destabilizers_.reserve(n_);
    for (size_t q = 0; q < n_; ++q) {
        stabilizers_.push_back(PauliString::single(n_, q, 'Z'));
        destabilizers_.push_back(PauliString::single(n_, q, 'X'));
    }
}

StabilizerTableau StabilizerTableau::plus_state(size_t num_qubits) {
    StabilizerTableau t(num_qubits);
    for (size_t q = 0; q < num_qubits; ++q) t.apply_h(q);
    return t;
}

StabilizerTableau StabilizerTableau::graph_state(size_t num_qubits,
                                                 std::span<const std::pair<size_t, size_t>> edges) {
    StabilizerTableau t = plus_state(num_qubits);
    for (const auto &[a, b] : edges) t.apply_cz(a, b);
    return t;
}

StabilizerTableau StabilizerTableau::from_stabilizers(std::vector<PauliString> stabilizers) {
    const size_t n = stabilizers.size();
    if (n == 0) throw ArgumentError("from_stabilizers: empty generator list");
    for (const auto &s : stabilizers) {
        if (s.num_qubits() != n) throw ArgumentError("from_stabilizers: need n generators on n qubits");
        if (!s.is_hermitian()) throw ArgumentError("from_stabilizers: generator " + s.str() + " is not Hermitian");
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (!stabilizers[i].commutes_with(stabilizers[j])) {
                throw ArgumentError("from_stabilizers: generators " + std::to_string(i) + " and " +
                                    std::to_string(j) + " anticommute");
            }
        }
    }

    // Destabilizer d_i solves <d_i, s_j> = delta_ij, with <a,b> = a.x.b.z + a.z.b.x.
    std::vector<BitVector> columns;  // row j of the system, as a 2n-vector in (dx | dz)
    columns.reserve(n);
    for (const auto &s : stabilizers) {
        BitVector row(2 * n);
        for (size_t q = 0; q < n; ++q) {
            row[q] = s.z(q);
            row[n + q] = s.x(q);
        }
        columns.push_back(std::move(row));
    }
    // solve_combination solves sum_i c_i rows[i] = target; here we need A d = e_i, i.e. the
    // transpose system. Build the transposed rows once.
    std::vector<BitVector> transposed(2 * n, BitVector(n));
    for (size_t j = 0; j < n; ++j) {
        for (size_t c = columns[j].find_first(); c != BitVector::npos; c = columns[j].find_next(c)) {
            transposed[c][j] = true;
        }
    }
    std::vector<PauliString> destabilizers;
    destabilizers.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        BitVector e(n);
        e[i] = true;
        auto d = gf2::solve_combination(transposed, e);
        if (!d) throw ArgumentError("from_stabilizers: generators are not independent");
        PauliString p(n);
        for (size_t q = 0; q < n; ++q) {
            p.xs()[q] = (*d)[q];
            p.zs()[q] = (*d)[n + q];
        }
        destabilizers.push_back(std::move(p));
    }
    // Make destabilizers mutually commute by adding stabilizers: d_i += sum_{j>i} <d_i,d_j> s_j.
    std::vector<PauliString> fixed = destabilizers;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (!destabilizers[i].commutes_with(destabilizers[j])) fixed[i] *= stabilizers[j];
        }
        fixed[i].set_phase_exponent(0);
    }

    StabilizerTableau t(n);
    t.stabilizers_ = std::move(stabilizers);
    t.destabilizers_ = std::move(fixed);
    t.validate();
    return t;
}

void StabilizerTableau::check_qubit(size_t q) const {
    if (q >= n_) throw ArgumentError("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
}

void StabilizerTableau::apply_h(size_t q) {
    check_qubit(q);
    for_each_row([q](PauliString &p) {
        bool x = p.x(q);
        bool z = p.z(q);
        if (x && z) p.negate();
        p.xs()[q] = z;
        p.zs()[q] = x;
    });
}

void StabilizerTableau::apply_s(size_t q) {
    check_qubit(q);
    for_each_row([q](PauliString &p) {
        bool x = p.x(q);
        if (x && p.z(q)) p.negate();
        p.zs()[q] = p.z(q) ^ x;
    });
}

void StabilizerTableau::apply_s_dag(size_t q) {
    check_qubit(q);
    for_each_row([q](PauliString &p) {
        bool x = p.x(q);
        if (x && !p.z(q)) p.negate();
        p.zs()[q] = p.z(q) ^ x;
    });
}

void StabilizerTableau::apply_pauli(size_t q, char pauli) {
    check_qubit(q);
    for_each_row([q, pauli](PauliString &p) {
        bool flip = false;
        switch (pauli) {
            case 'I': break;
            case 'X': flip = p.z(q); break;
            case 'Z': flip = p.x(q); break;
            case 'Y': flip = p.x(q) ^ p.z(q); break;
            default: throw ArgumentError(std::string("unknown Pauli gate '") + pauli + "'");
        }
        if (flip) p.negate();
    });
}

void StabilizerTableau::apply_cx(size_t control, size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw ArgumentError("CX needs distinct qubits");
    for_each_row([control, target](PauliString &p) {
        bool xc = p.x(control), zc = p.z(control), xt = p.x(target), zt = p.z(target);
        if (xc && zt && (xt == zc)) p.negate();
        p.xs()[target] = xt ^ xc;
        p.zs()[control] = zc ^ zt;
    });
}

void StabilizerTableau::apply_cz(size_t a, size_t b) {
    if (a == b) throw ArgumentError("CZ needs distinct qubits");
    apply_h(b);
    apply_cx(a, b);
    apply_h(b);
}

void StabilizerTableau::apply_local_clifford(size_t q, const LocalClifford &c) {
    for (char g : c.word()) {
        if (g == 'H') apply_h(q);
        else apply_s(q);
    }
}

void StabilizerTableau::apply(CliffordGate gate, std::span<const size_t> targets) {
    if (targets.size() != gate_arity(gate)) {
        throw ArgumentError(std::string(gate_name(gate)) + " expects " + std::to_string(gate_arity(gate)) + " targets");
    }
    for (size_t q : targets) check_qubit(q);
    if (targets.size() == 2 && targets[0] == targets[1]) throw ArgumentError("duplicate gate targets");
    switch (gate) {
        case CliffordGate::H: apply_h(targets[0]); break;
        case CliffordGate::S: apply_s(targets[0]); break;
        case CliffordGate::S_DAG: apply_s_dag(targets[0]); break;
        case CliffordGate::X: apply_pauli(targets[0], 'X'); break;
        case CliffordGate::Y: apply_pauli(targets[0], 'Y'); break;
        case CliffordGate::Z: apply_pauli(targets[0], 'Z'); break;
        case CliffordGate::CZ: apply_cz(targets[0], targets[1]); break;
        case CliffordGate::CX: apply_cx(targets[0], targets[1]); break;
    }
}

PauliMeasurement StabilizerTableau::measure(const PauliString &observable, OutcomePolicy &policy) {
    if (observable.num_qubits() != n_) throw ArgumentError("measure: observable size mismatch");
    if (!observable.is_hermitian()) throw ArgumentError("measure: observable " + observable.str() + " is not Hermitian");

    size_t p = n_;
    for (size_t i = 0; i < n_; ++i) {
        if (!stabilizers_[i].commutes_with(observable)) {
            p = i;
            break;
        }
    }
    if (p == n_) {
        return {*peek(observable), true};
    }
    for (size_t i = 0; i < n_; ++i) {
        if (i != p && !stabilizers_[i].commutes_with(observable)) stabilizers_[i] *= stabilizers_[p];
        if (i != p && !destabilizers_[i].commutes_with(observable)) destabilizers_[i] *= stabilizers_[p];
    }
    destabilizers_[p] = stabilizers_[p];
    int outcome = policy.choose();
    stabilizers_[p] = observable;
    if (outcome < 0) stabilizers_[p].negate();
    return {outcome, false};
}

std::optional<int> StabilizerTableau::peek(const PauliString &observable) const {
    if (observable.num_qubits() != n_) throw ArgumentError("peek: observable size mismatch");
    if (!observable.is_hermitian()) throw ArgumentError("peek: observable is not Hermitian");
    for (const auto &s : stabilizers_) {
        if (!s.commutes_with(observable)) return std::nullopt;
    }
    PauliString acc(n_);
    for (size_t i = 0; i < n_; ++i) {
        if (!destabilizers_[i].commutes_with(observable)) acc *= stabilizers_[i];
    }
    if (acc.xs() != observable.xs() || acc.zs() != observable.zs()) {
        throw std::logic_error("peek: stabilizer decomposition failed; tableau corrupted");
    }
    return acc.phase_exponent() == observable.phase_exponent() ? 1 : -1;
}

int StabilizerTableau::expectation(const PauliString &observable) const {
    auto v = peek(observable);
    return v ? *v : 0;
}

void StabilizerTableau::validate() const {
    if (stabilizers_.size() != n_ || destabilizers_.size() != n_) throw std::logic_error("tableau row count");
    for (size_t i = 0; i < n_; ++i) {
        if (!stabilizers_[i].is_hermitian()) throw std::logic_error("stabilizer phase is not +-1");
        for (size_t j = 0; j < n_; ++j) {
            if (j > i && !stabilizers_[i].commutes_with(stabilizers_[j])) throw std::logic_error("stabilizers anticommute");
            if (j > i && !destabilizers_[i].commutes_with(destabilizers_[j])) throw std::logic_error("destabilizers anticommute");
            bool anti = !stabilizers_[i].commutes_with(destabilizers_[j]);
            if (anti != (i == j)) throw std::logic_error("stabilizer/destabilizer pairing broken");
        }
    }
}

bool StabilizerTableau::is_valid() const {
    try {
        validate();
        return true;
    } catch (const std::logic_error &) {
        return false;
    }
}

StabilizerTableau StabilizerTableau::without_qubits(std::span<const size_t> removed) const {
    std::vector<bool> drop(n_, false);
    for (size_t q : removed) {
        check_qubit(q);
        if (drop[q]) throw ArgumentError("without_qubits: duplicate qubit");
        drop[q] = true;
    }
    if (removed.size() == n_) throw ArgumentError("without_qubits: cannot remove every qubit");

    std::vector<PauliString> gens = stabilizers_;
    for (size_t q : removed) {
        std::optional<PauliString> local;
        for (char pauli : {'Z', 'X', 'Y'}) {
            PauliString probe = PauliString::single(n_, q, pauli);
            if (auto v = peek(probe)) {
                if (*v < 0) probe.negate();
                local = probe;
                break;
            }
        }
        if (!local) throw ArgumentError("without_qubits: qubit " + std::to_string(q) + " is entangled");
        for (auto &g : gens) {
            char c = g.pauli_at(q);
            if (c == 'I') continue;
            if (c != local->pauli_at(q)) throw std::logic_error("without_qubits: inconsistent local stabilizer");
            g *= *local;
        }
    }
    gens = independent_generators(std::move(gens));
    const size_t m = n_ - removed.size();
    if (gens.size() != m) throw std::logic_error("without_qubits: wrong number of residual generators");

    std::vector<PauliString> projected;
    projected.reserve(m);
    for (const auto &g : gens) {
        PauliString p(m);
        size_t k = 0;
        for (size_t q = 0; q < n_; ++q) {
            if (drop[q]) continue;
            p.set_pauli(k++, g.pauli_at(q));
        }
        p.set_phase_exponent(g.phase_exponent());
        projected.push_back(std::move(p));
    }
    return from_stabilizers(std::move(projected));
}

StabilizerTableau apply_clifford(StabilizerTableau tableau, CliffordGate gate, std::span<const size_t> targets) {
    tableau.apply(gate, targets);
    return tableau;
}

MeasuredTableau measure_pauli(StabilizerTableau tableau, const PauliString &observable, OutcomePolicy &policy) {
    auto m = tableau.measure(observable, policy);
    return {std::move(tableau), m.outcome, m.deterministic};
}

std::vector<PauliString> independent_generators(std::vector<PauliString> rows) {
    if (rows.empty()) return rows;
    const size_t n = rows[0].num_qubits();
    size_t r = 0;
    for (size_t col = 0; col < 2 * n && r < rows.size(); ++col) {
        size_t pivot = r;
        while (pivot < rows.size() && !symplectic_bit(rows[pivot], col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i != r && symplectic_bit(rows[i], col)) rows[i] *= rows[r];
        }
        ++r;
    }
    for (size_t i = r; i < rows.size(); ++i) {
        if (rows[i].phase_exponent() != 0) throw ArgumentError("generators produce " + rows[i].str());
    }
    rows.resize(r);
    return rows;
}

}  // namespace mbvqe
