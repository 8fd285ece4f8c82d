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

#include "mbvqe/graphstate/custom_state.hpp"

#include <cmath>
#include <stdexcept>

#include "mbvqe/errors.hpp"

namespace mbvqe {

CustomState::CustomState(GraphProgram program) : program_(std::move(program)) {
    if (!program_.inputs.empty()) throw PatternError("a custom state has no inputs");
    program_.validate();
}

CustomState CustomState::from_graph_form(const GraphForm &form) {
    GraphProgram p;
    for (size_t i = 0; i < form.num_qubits; ++i) {
        p.vertices.push_back(int(i) + 1);
        p.outputs.push_back(int(i) + 1);
    }
    for (const auto &[a, b] : form.edges) p.edges.emplace_back(int(a) + 1, int(b) + 1);
    std::sort(p.edges.begin(), p.edges.end());
    for (size_t i = 0; i < form.corrections.size(); ++i) p.set_local_clifford(int(i) + 1, form.corrections[i]);
    return CustomState(std::move(p));
}

CustomState CustomState::graph(size_t num_outputs, const std::vector<std::pair<int, int>> &edges) {
    GraphProgram p;
    for (size_t i = 0; i < num_outputs; ++i) {
        p.vertices.push_back(int(i) + 1);
        p.outputs.push_back(int(i) + 1);
    }
    for (const auto &[a, b] : edges) p.add_edge(a, b);
    return CustomState(std::move(p));
}

std::vector<std::pair<int, int>> CustomState::output_edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto &e : program_.edges) {
        if (program_.is_output(e.first) && program_.is_output(e.second)) out.push_back(e);
    }
    return out;
}

namespace {

// Two five-vertex chains prepare the green qubits g1 = e^{-i t3 X/2} e^{-i t4 Z/2}|+> and
// g2 = e^{-i t1 X/2} e^{-i t2 Z/2}|+> on the path m - g1 - g2 - n; the greens and the Pauli
// chain vertices are then measured away with outcome +1.
GraphProgram raw_gadget() {
    enum : int { M = 1, N = 2, C1 = 3, C2, C3, C4, G1, D1, D2, D3, D4, G2 };
    GraphProgram p;
    for (int v = M; v <= G2; ++v) p.vertices.push_back(v);
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {C1, C2}, {C2, C3}, {C3, C4}, {C4, G1}, {M, G1}, {G1, G2}, {N, G2}, {D1, D2}, {D2, D3}, {D3, D4}, {D4, G2}}) {
        p.add_edge(a, b);
    }
    p.outputs = {M, N};
    p.num_slots = 4;
    auto pauli = [](int v) { return Step{v, Basis::pauli('X'), {}, false, {}}; };
    auto rotated = [](int v, int slot) { return Step{v, Basis::rotated(slot, -1), {}, false, {}}; };
    p.steps = {pauli(C1), pauli(C2), rotated(C3, 3), rotated(C4, 2), pauli(G1),
               pauli(D1), pauli(D2), rotated(D3, 1), rotated(D4, 0), pauli(G2)};
    return p;
}

CustomState build_gadget() {
    GraphProgram reduced = eliminate_pauli_steps(raw_gadget(), PivotPreference::OutputsFirst);
    for (int v : {1, 2}) {
        if (!reduced.local_clifford(v).is_diagonal()) throw std::logic_error("decoration gadget: non-diagonal output Clifford");
    }
    derive_corrections(reduced);
    return CustomState(std::move(reduced));
}

CustomState insert_gadget(const CustomState &state, int m, int n, bool existing_edge) {
    GraphProgram p = state.program();
    if (m == n || !p.is_output(m) || !p.is_output(n)) throw ArgumentError("decoration endpoints must be two distinct outputs");
    if (existing_edge) {
        if (!p.has_edge(m, n)) throw ArgumentError("edge (" + std::to_string(m) + "," + std::to_string(n) + ") is not present");
        p.remove_edge(m, n);
    } else if (p.has_edge(m, n)) {
        throw ArgumentError("vertices " + std::to_string(m) + " and " + std::to_string(n) + " are already adjacent");
    }

    const GraphProgram &g = decoration_gadget().program();
    const int base = p.max_vertex();
    std::map<int, int> rename{{1, m}, {2, n}};
    for (int v = 3; v <= 6; ++v) rename[v] = base + v - 2;
    GraphProgram gadget = g.relabeled(rename);

    for (int v = 3; v <= 6; ++v) p.add_vertex(rename[v]);
    for (const auto &[a, b] : gadget.edges) p.add_edge(a, b);
    for (int v = 3; v <= 6; ++v) p.set_local_clifford(rename[v], gadget.local_clifford(rename[v]));
    for (int v : {m, n}) p.set_local_clifford(v, gadget.local_clifford(v).then(p.local_clifford(v)));
    for (Step s : gadget.steps) {
        s.basis.slot += p.num_slots;
        p.steps.push_back(std::move(s));
    }
    p.num_slots += 4;
    derive_corrections(p);
    return CustomState(std::move(p));
}

}  // namespace

GraphProgram unreduced_decoration_gadget() { return raw_gadget(); }

const CustomState &decoration_gadget() {
    static const CustomState gadget = build_gadget();
    return gadget;
}

CustomState decorate_edge(const CustomState &state, int m, int n) { return insert_gadget(state, m, n, true); }

CustomState add_virtual_edge_and_decorate(const CustomState &state, int m, int n) {
    return insert_gadget(state, m, n, false);
}

CustomState decorate_all_edges(const CustomState &state) {
    CustomState out = state;
    for (const auto &[a, b] : state.output_edges()) out = decorate_edge(out, a, b);
    return out;
}

StateVector decorated_edge_state(const DecorationAngles &angles) {
    for (double a : angles) {
        if (!std::isfinite(a)) throw ArgumentError("decorated_edge_state: non-finite angle");
    }
    using std::cos, std::sin;
    const double t1 = angles[0], t2 = angles[1], t3 = angles[2], t4 = angles[3];
    const cplx i(0.0, 1.0);
    const cplx c00 = 1.0 + cos(t4) * sin(t1) * sin(t2) + cos(t1) * cos(t3) * sin(t2) * sin(t4) + cos(t2) * sin(t3) * sin(t4);
    const cplx c01 = cos(t4 / 2) * cos(t4 / 2) + 0.5 * (cos(t4) - 1.0) + sin(t1) * sin(t2) +
                     i * sin(t4) * (cos(t2) * cos(t3) - cos(t1) * sin(t2) * sin(t3));
    const cplx c10 = cos(t2) + sin(t3) * sin(t4) + i * sin(t2) * (cos(t1) * cos(t4) - cos(t3) * sin(t1) * sin(t4));
    const cplx c11 = -cos(t2) * cos(t4) - i * cos(t1) * sin(t2) + sin(t4) * (-i * cos(t3) + sin(t1) * sin(t2) * sin(t3));
    StateVector s({1, 2}, {c00, c01, c10, c11});
    if (!(s.norm() > 1e-12)) throw DegenerateStateError("decorated_edge_state: zero-norm parameter point");
    s.normalize();
    return s;
}

}  // namespace mbvqe
