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

#include "mbvqe/graphstate/program.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mbvqe/errors.hpp"
#include "mbvqe/stabilizer/gf2.hpp"
#include "mbvqe/stabilizer/graph_form.hpp"
#include "mbvqe/stabilizer/tableau.hpp"

namespace mbvqe {

Parity::Parity(std::initializer_list<int> nodes, bool constant) : constant_(constant) {
    for (int n : nodes) toggle(n);
}

bool Parity::depends_on(int node) const { return std::binary_search(nodes_.begin(), nodes_.end(), node); }

void Parity::toggle(int node) {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
    if (it != nodes_.end() && *it == node) {
        nodes_.erase(it);
    } else {
        nodes_.insert(it, node);
    }
}

Parity &Parity::operator^=(const Parity &other) {
    std::vector<int> merged;
    std::set_symmetric_difference(nodes_.begin(), nodes_.end(), other.nodes_.begin(), other.nodes_.end(),
                                  std::back_inserter(merged));
    nodes_ = std::move(merged);
    constant_ = constant_ != other.constant_;
    return *this;
}

void Parity::substitute(int node, const Parity &value) {
    if (!depends_on(node)) return;
    toggle(node);
    *this ^= value;
}

void Parity::relabel(const std::map<int, int> &map) {
    std::vector<int> old = std::move(nodes_);
    nodes_.clear();
    for (int n : old) {
        auto it = map.find(n);
        toggle(it == map.end() ? n : it->second);
    }
}

bool Parity::evaluate(const std::function<bool(int)> &outcome) const {
    bool v = constant_;
    for (int n : nodes_) v ^= outcome(n);
    return v;
}

std::string Parity::str() const {
    if (nodes_.empty()) return constant_ ? "1" : "0";
    std::ostringstream out;
    for (size_t i = 0; i < nodes_.size(); ++i) out << (i ? "+" : "") << "s" << nodes_[i];
    if (constant_) out << "+1";
    return out.str();
}

Basis Basis::pauli(char p) {
    switch (p) {
        case 'X': return {Kind::X, -1, 1};
        case 'Y': return {Kind::Y, -1, 1};
        case 'Z': return {Kind::Z, -1, 1};
        default: throw ArgumentError(std::string("Basis::pauli: not a Pauli letter: ") + p);
    }
}

char Basis::pauli_letter() const {
    switch (kind) {
        case Kind::X: return 'X';
        case Kind::Y: return 'Y';
        case Kind::Z: return 'Z';
        default: return 'R';
    }
}

bool GraphProgram::has_vertex(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
bool GraphProgram::is_output(int v) const { return std::find(outputs.begin(), outputs.end(), v) != outputs.end(); }
bool GraphProgram::is_input(int v) const { return std::find(inputs.begin(), inputs.end(), v) != inputs.end(); }

LocalClifford GraphProgram::local_clifford(int v) const {
    auto it = local_cliffords.find(v);
    return it == local_cliffords.end() ? LocalClifford::identity() : it->second;
}

void GraphProgram::set_local_clifford(int v, const LocalClifford &c) {
    if (c.is_identity()) {
        local_cliffords.erase(v);
    } else {
        local_cliffords[v] = c;
    }
}

Byproduct GraphProgram::byproduct(int output) const {
    auto it = byproducts.find(output);
    return it == byproducts.end() ? Byproduct{} : it->second;
}

std::vector<int> GraphProgram::neighbors(int v) const {
    std::vector<int> out;
    for (const auto &[a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, std::vector<int>> GraphProgram::adjacency() const {
    std::map<int, std::vector<int>> adj;
    for (int v : vertices) adj[v];
    for (const auto &[a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto &[v, list] : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::vector<int> GraphProgram::auxiliaries() const {
    std::vector<int> out;
    for (const auto &s : steps) out.push_back(s.node);
    return out;
}

void GraphProgram::add_vertex(int v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it != vertices.end() && *it == v) throw PatternError("duplicate vertex id " + std::to_string(v));
    vertices.insert(it, v);
}

void GraphProgram::add_edge(int a, int b) {
    if (a == b) throw PatternError("self loop on vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    std::pair<int, int> e{a, b};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) throw PatternError("duplicate edge");
    edges.insert(it, e);
}

void GraphProgram::remove_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
    if (it == edges.end() || *it != std::make_pair(a, b)) throw ArgumentError("edge not present");
    edges.erase(it);
}

bool GraphProgram::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

size_t GraphProgram::rotated_count() const {
    return size_t(std::count_if(steps.begin(), steps.end(), [](const Step &s) { return !s.basis.is_pauli(); }));
}
size_t GraphProgram::pauli_count() const { return steps.size() - rotated_count(); }
size_t GraphProgram::heralded_count() const {
    return size_t(std::count_if(steps.begin(), steps.end(), [](const Step &s) { return s.heralded; }));
}

void GraphProgram::validate() const {
    for (size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i - 1] >= vertices[i]) throw PatternError("vertices must be sorted and unique");
    }
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto &[a, b] = edges[i];
        if (a >= b) throw PatternError("edge endpoints must be ordered");
        if (!has_vertex(a) || !has_vertex(b)) throw PatternError("edge references unknown vertex");
        if (i && edges[i - 1] >= edges[i]) throw PatternError("edges must be sorted and unique");
    }
    auto check_set = [&](const std::vector<int> &ids, const char *what) {
        std::set<int> seen;
        for (int v : ids) {
            if (!has_vertex(v)) throw PatternError(std::string(what) + " references unknown vertex " + std::to_string(v));
            if (!seen.insert(v).second) throw PatternError(std::string("duplicate ") + what + " " + std::to_string(v));
        }
    };
    check_set(inputs, "input");
    check_set(outputs, "output");
    for (const auto &[v, c] : local_cliffords) {
        if (!has_vertex(v)) throw PatternError("local Clifford on unknown vertex");
    }

    std::set<int> measured;
    for (const auto &step : steps) {
        if (!has_vertex(step.node)) throw PatternError("step on unknown vertex " + std::to_string(step.node));
        if (is_output(step.node)) throw PatternError("output vertex " + std::to_string(step.node) + " is measured");
        for (const Parity *p : {&step.sign, &step.herald}) {
            for (int d : p->nodes()) {
                if (!measured.count(d)) {
                    throw PatternError("step " + std::to_string(step.node) + " depends on s" + std::to_string(d) +
                                       ", which is not measured earlier");
                }
            }
        }
        if (!measured.insert(step.node).second) throw PatternError("vertex measured twice: " + std::to_string(step.node));
        if (step.basis.kind == Basis::Kind::Rotated) {
            if (step.basis.slot < 0 || step.basis.slot >= num_slots) throw PatternError("parameter slot out of range");
            if (step.basis.base_sign != 1 && step.basis.base_sign != -1) throw PatternError("base sign must be +-1");
        }
    }
    for (int v : vertices) {
        if (!is_output(v) && !measured.count(v)) throw PatternError("auxiliary vertex " + std::to_string(v) + " is never measured");
    }
    for (const auto &[o, b] : byproducts) {
        if (!is_output(o)) throw PatternError("byproduct on non-output vertex " + std::to_string(o));
        for (const Parity *p : {&b.x, &b.z}) {
            for (int d : p->nodes()) {
                if (!measured.count(d)) throw PatternError("byproduct depends on unmeasured vertex " + std::to_string(d));
            }
        }
    }
}

GraphProgram GraphProgram::relabeled(const std::map<int, int> &map) const {
    auto id = [&](int v) {
        auto it = map.find(v);
        return it == map.end() ? v : it->second;
    };
    GraphProgram out;
    for (int v : vertices) out.vertices.push_back(id(v));
    std::sort(out.vertices.begin(), out.vertices.end());
    if (std::adjacent_find(out.vertices.begin(), out.vertices.end()) != out.vertices.end()) {
        throw PatternError("relabeling is not injective");
    }
    for (const auto &[a, b] : edges) out.edges.emplace_back(std::min(id(a), id(b)), std::max(id(a), id(b)));
    std::sort(out.edges.begin(), out.edges.end());
    for (const auto &[v, c] : local_cliffords) out.local_cliffords[id(v)] = c;
    for (int v : inputs) out.inputs.push_back(id(v));
    for (int v : outputs) out.outputs.push_back(id(v));
    for (Step s : steps) {
        s.node = id(s.node);
        s.sign.relabel(map);
        s.herald.relabel(map);
        out.steps.push_back(std::move(s));
    }
    for (auto [o, b] : byproducts) {
        b.x.relabel(map);
        b.z.relabel(map);
        out.byproducts[id(o)] = std::move(b);
    }
    out.num_slots = num_slots;
    return out;
}

Byproduct conjugate_byproduct(const Byproduct &p, const LocalClifford &c) {
    SignedPauli ix = c.image_of_x(), iz = c.image_of_z();
    auto has_x = [](char q) { return q == 'X' || q == 'Y'; };
    auto has_z = [](char q) { return q == 'Z' || q == 'Y'; };
    Byproduct out;
    if (has_x(ix.pauli)) out.x ^= p.x;
    if (has_x(iz.pauli)) out.x ^= p.z;
    if (has_z(ix.pauli)) out.z ^= p.x;
    if (has_z(iz.pauli)) out.z ^= p.z;
    return out;
}

namespace {

StabilizerTableau prepared_tableau(const GraphProgram &program, std::map<int, size_t> &index) {
    index.clear();
    for (size_t i = 0; i < program.vertices.size(); ++i) index[program.vertices[i]] = i;
    std::vector<std::pair<size_t, size_t>> edges;
    for (const auto &[a, b] : program.edges) edges.emplace_back(index.at(a), index.at(b));
    StabilizerTableau t = StabilizerTableau::graph_state(program.vertices.size(), edges);
    for (const auto &[v, c] : program.local_cliffords) t.apply_local_clifford(index.at(v), c);
    return t;
}

}  // namespace

GraphProgram eliminate_pauli_steps(const GraphProgram &program, PivotPreference preference) {
    program.validate();
    std::map<int, size_t> index;
    StabilizerTableau tableau = prepared_tableau(program, index);
    const size_t n = program.vertices.size();

    std::vector<Step> steps = program.steps;
    std::map<int, Byproduct> byproducts;
    // Byproducts are carried in the physical frame while the graph is rewritten.
    for (int o : program.outputs) byproducts[o] = conjugate_byproduct(program.byproduct(o), program.local_clifford(o));

    OutcomePolicy policy = OutcomePolicy::fixed_plus();
    std::vector<size_t> removed;
    std::vector<Step> kept;
    for (size_t i = 0; i < steps.size(); ++i) {
        Step step = steps[i];
        if (!step.basis.is_pauli()) {
            kept.push_back(step);
            continue;
        }
        if (step.heralded) throw PatternError("heralded Pauli steps cannot be eliminated");
        const size_t q = index.at(step.node);
        PauliString obs = PauliString::single(n, q, step.basis.pauli_letter());
        PauliMeasurement m = tableau.measure(obs, policy);
        Parity value(m.outcome < 0);
        if (step.basis.kind == Basis::Kind::Y) value ^= step.sign;
        for (size_t j = i + 1; j < steps.size(); ++j) {
            steps[j].sign.substitute(step.node, value);
            steps[j].herald.substitute(step.node, value);
        }
        for (auto &s : kept) {
            s.sign.substitute(step.node, value);
            s.herald.substitute(step.node, value);
        }
        for (auto &[o, b] : byproducts) {
            b.x.substitute(step.node, value);
            b.z.substitute(step.node, value);
        }
        removed.push_back(q);
    }
    std::sort(removed.begin(), removed.end());
    StabilizerTableau reduced = tableau.without_qubits(removed);

    // Old ids of the survivors in reduced-tableau order (ascending old id).
    std::vector<int> survivors;
    for (int v : program.vertices) {
        if (!std::binary_search(removed.begin(), removed.end(), index.at(v))) survivors.push_back(v);
    }
    std::map<int, size_t> reduced_index;
    for (size_t i = 0; i < survivors.size(); ++i) reduced_index[survivors[i]] = i;

    std::vector<size_t> priority;
    auto push_outputs = [&] {
        for (int o : program.outputs) priority.push_back(reduced_index.at(o));
    };
    auto push_aux = [&] {
        for (const auto &s : kept) priority.push_back(reduced_index.at(s.node));
    };
    if (preference == PivotPreference::AuxiliariesFirst) {
        push_aux();
        push_outputs();
    } else {
        push_outputs();
        push_aux();
    }
    GraphForm form = tableau_to_graphstate(reduced, priority);

    std::map<int, int> rename;
    int next = 1;
    for (int o : program.outputs) rename[o] = next++;
    for (const auto &s : kept) rename[s.node] = next++;

    GraphProgram out;
    for (int i = 1; i < next; ++i) out.vertices.push_back(i);
    for (const auto &[a, b] : form.edges) {
        int u = rename.at(survivors[a]), v = rename.at(survivors[b]);
        out.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(out.edges.begin(), out.edges.end());
    for (size_t i = 0; i < survivors.size(); ++i) out.set_local_clifford(rename.at(survivors[i]), form.corrections[i]);
    for (int o : program.outputs) out.outputs.push_back(rename.at(o));
    for (Step s : kept) {
        s.node = rename.at(s.node);
        s.sign.relabel(rename);
        s.herald.relabel(rename);
        out.steps.push_back(std::move(s));
    }
    for (auto &[o, b] : byproducts) {
        b.x.relabel(rename);
        b.z.relabel(rename);
        const int id = rename.at(o);
        Byproduct pre = conjugate_byproduct(b, out.local_clifford(id).inverse());
        if (!pre.is_zero()) out.byproducts[id] = pre;
    }
    out.num_slots = program.num_slots;
    out.validate();
    return out;
}

void derive_corrections(GraphProgram &program) {
    if (!program.inputs.empty()) throw PatternError("derive_corrections: program has unprepared inputs");
    for (auto &s : program.steps) {
        s.sign = Parity();
        s.herald = Parity();
        s.heralded = false;
    }
    program.byproducts.clear();
    program.validate();

    std::map<int, size_t> index;
    StabilizerTableau tableau = prepared_tableau(program, index);
    const auto &generators = tableau.stabilizers();
    const size_t n = generators.size();

    struct Constraint {
        size_t qubit;
        bool ax, az, value;
    };
    auto value_of = [](const PauliString &p, const Constraint &c) {
        return (c.ax && p.x(c.qubit)) != (c.az && p.z(c.qubit));
    };
    // Components of K that leave an already measured qubit's branch untouched.
    auto preserve = [](size_t q, const Basis &b) -> std::vector<Constraint> {
        switch (b.kind) {
            case Basis::Kind::X: return {{q, false, true, false}};
            case Basis::Kind::Y: return {{q, true, true, false}};
            case Basis::Kind::Z: return {{q, true, false, false}};
            default: return {{q, true, false, false}, {q, false, true, false}};
        }
    };
    // Components of K that flip this qubit's outcome (rotated steps also need no X part).
    auto flip = [](size_t q, const Basis &b) -> std::vector<Constraint> {
        switch (b.kind) {
            case Basis::Kind::X: return {{q, false, true, true}};
            case Basis::Kind::Y: return {{q, true, true, true}};
            case Basis::Kind::Z: return {{q, true, false, true}};
            default: return {{q, true, false, false}, {q, false, true, true}};
        }
    };
    auto outcome_flipped = [](const PauliString &k, size_t q, const Basis &b) {
        switch (b.kind) {
            case Basis::Kind::X: return k.z(q);
            case Basis::Kind::Y: return k.x(q) != k.z(q);
            case Basis::Kind::Z: return k.x(q);
            default: return k.z(q);
        }
    };

    std::vector<Constraint> fixed;
    std::vector<Parity> t(program.steps.size());
    std::vector<PauliString> ks(program.steps.size());
    std::vector<bool> has_k(program.steps.size(), false);

    for (size_t i = 0; i < program.steps.size(); ++i) {
        Step &step = program.steps[i];
        const size_t q = index.at(step.node);
        Parity relabel;
        for (size_t j = 0; j < i; ++j) {
            if (!has_k[j]) continue;
            if (outcome_flipped(ks[j], q, step.basis)) relabel ^= t[j];
            if (step.basis.kind == Basis::Kind::Rotated && ks[j].x(q)) step.sign ^= t[j];
        }

        std::vector<Constraint> cons = fixed;
        for (const auto &c : flip(q, step.basis)) cons.push_back(c);
        std::vector<BitVector> rows(n, BitVector(cons.size()));
        for (size_t g = 0; g < n; ++g) {
            for (size_t c = 0; c < cons.size(); ++c) rows[g][c] = value_of(generators[g], cons[c]);
        }
        BitVector target(cons.size());
        for (size_t c = 0; c < cons.size(); ++c) target[c] = cons[c].value;
        std::optional<BitVector> combo = gf2::solve_combination(rows, target);

        if (combo) {
            PauliString k(n);
            for (size_t g = 0; g < n; ++g) {
                if ((*combo)[g]) {
                    k.xs() ^= generators[g].xs();
                    k.zs() ^= generators[g].zs();
                }
            }
            ks[i] = std::move(k);
            has_k[i] = true;
            t[i] = relabel;
            t[i].toggle(step.node);
        } else {
            step.heralded = true;
            step.herald = relabel;
        }
        for (const auto &c : preserve(q, step.basis)) fixed.push_back(c);
    }

    for (int o : program.outputs) {
        const size_t q = index.at(o);
        Byproduct phys;
        for (size_t i = 0; i < program.steps.size(); ++i) {
            if (!has_k[i]) continue;
            if (ks[i].x(q)) phys.x ^= t[i];
            if (ks[i].z(q)) phys.z ^= t[i];
        }
        Byproduct pre = conjugate_byproduct(phys, program.local_clifford(o).inverse());
        if (!pre.is_zero()) program.byproducts[o] = pre;
    }
    program.validate();
}

}  // namespace mbvqe
