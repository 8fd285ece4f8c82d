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

#include "mbvqe/mbqc/pattern.hpp"

#include <algorithm>
#include <numeric>

#include "mbvqe/errors.hpp"

namespace mbvqe {

namespace {

void toggle_sorted(std::vector<int> &v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
    else v.insert(it, x);
}

PauliFlow relabeled_flow(PauliFlow f, const std::map<int, int> &ids) {
    for (int &n : f.flipped_steps) {
        auto it = ids.find(n);
        if (it != ids.end()) n = it->second;
    }
    std::sort(f.flipped_steps.begin(), f.flipped_steps.end());
    return f;
}

PauliFlow image_only(size_t outputs, std::initializer_list<std::pair<size_t, char>> paulis,
                     std::vector<int> flips = {}) {
    PauliFlow f;
    f.image.assign(outputs, {false, false});
    for (auto [q, p] : paulis) {
        if (p == 'X' || p == 'Y') f.image[q][0] = true;
        if (p == 'Z' || p == 'Y') f.image[q][1] = true;
    }
    std::sort(flips.begin(), flips.end());
    f.flipped_steps = std::move(flips);
    return f;
}

// Pushes a Pauli flow on a's outputs through b (inputs indexed via wiring).
PauliFlow through(const PauliFlow &fa, const std::vector<InputFlow> &bflow, const std::vector<size_t> &wiring,
                  size_t b_outputs, const std::map<int, int> &bids) {
    PauliFlow out;
    out.image.assign(b_outputs, {false, false});
    out.flipped_steps = fa.flipped_steps;
    for (size_t k = 0; k < fa.image.size(); ++k) {
        const InputFlow &in = bflow[wiring[k]];
        if (fa.image[k][0]) out ^= relabeled_flow(in.x, bids);
        if (fa.image[k][1]) out ^= relabeled_flow(in.z, bids);
    }
    return out;
}

}  // namespace

PauliFlow &PauliFlow::operator^=(const PauliFlow &other) {
    if (image.size() != other.image.size()) throw ArgumentError("PauliFlow: image sizes differ");
    for (size_t q = 0; q < image.size(); ++q) {
        image[q][0] ^= other.image[q][0];
        image[q][1] ^= other.image[q][1];
    }
    for (int n : other.flipped_steps) toggle_sorted(flipped_steps, n);
    return *this;
}

MeasurementPattern::MeasurementPattern(GraphProgram program, std::vector<InputFlow> flow, bool clifford)
    : program_(std::move(program)), flow_(std::move(flow)), clifford_(clifford) {
    program_.validate();
    if (flow_.size() != program_.inputs.size()) throw PatternError("flow table needs one entry per input");
    for (const auto &f : flow_) {
        for (const PauliFlow *p : {&f.x, &f.z}) {
            if (p->image.size() != program_.outputs.size()) throw PatternError("flow image size differs from output count");
            for (int n : p->flipped_steps) {
                auto it = std::find_if(program_.steps.begin(), program_.steps.end(), [n](const Step &s) { return s.node == n; });
                if (it == program_.steps.end() || it->basis.kind != Basis::Kind::Rotated) {
                    throw PatternError("flow flips a step that is not rotated: " + std::to_string(n));
                }
            }
        }
    }
    for (const auto &[v, c] : program_.local_cliffords) {
        if (program_.is_output(v)) throw PatternError("measurement patterns carry no output local Cliffords");
    }
}

MeasurementPattern wire_pattern() {
    GraphProgram p;
    p.vertices = {1};
    p.inputs = {1};
    p.outputs = {1};
    return MeasurementPattern(std::move(p), {{image_only(1, {{0, 'X'}}), image_only(1, {{0, 'Z'}})}}, true);
}

MeasurementPattern single_qubit_unitary_pattern(std::array<int, 3> slots) {
    GraphProgram p;
    p.vertices = {1, 2, 3, 4, 5};
    for (int v = 1; v < 5; ++v) p.add_edge(v, v + 1);
    p.inputs = {1};
    p.outputs = {5};
    p.num_slots = std::max({slots[0], slots[1], slots[2]}) + 1;
    auto basis = [](int slot) { return slot < 0 ? Basis::pauli('X') : Basis::rotated(slot); };
    p.steps = {{1, Basis::pauli('X'), {}, false, {}},
               {2, basis(slots[0]), Parity{1}, false, {}},
               {3, basis(slots[1]), Parity{2}, false, {}},
               {4, basis(slots[2]), Parity{1, 3}, false, {}}};
    p.byproducts[5] = {Parity{2, 4}, Parity{1, 3}};
    std::vector<int> x_flips, z_flips;
    if (slots[1] >= 0) x_flips.push_back(3);
    if (slots[0] >= 0) z_flips.push_back(2);
    if (slots[2] >= 0) z_flips.push_back(4);
    const bool clifford = std::all_of(slots.begin(), slots.end(), [](int s) { return s < 0; });
    return MeasurementPattern(std::move(p),
                              {{image_only(1, {{0, 'X'}}, x_flips), image_only(1, {{0, 'Z'}}, z_flips)}}, clifford);
}

MeasurementPattern cx_pattern() {
    GraphProgram p;
    for (int v = 1; v <= 15; ++v) p.vertices.push_back(v);
    for (int v = 1; v < 7; ++v) p.add_edge(v, v + 1);
    for (int v = 9; v < 15; ++v) p.add_edge(v, v + 1);
    p.add_edge(4, 8);
    p.add_edge(8, 12);
    p.inputs = {1, 9};
    p.outputs = {7, 15};
    for (int v : {1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14}) {
        const bool y = v <= 6 ? v >= 2 : (v == 8 || v == 12);
        p.steps.push_back({v, Basis::pauli(y ? 'Y' : 'X'), {}, false, {}});
    }
    p.byproducts[7] = {Parity{2, 3, 5, 6}, Parity({1, 3, 4, 5, 8, 9, 11}, true)};
    p.byproducts[15] = {Parity{2, 3, 8, 10, 12, 14}, Parity{9, 11, 13}};
    std::vector<InputFlow> flow = {
        {image_only(2, {{0, 'X'}, {1, 'X'}}), image_only(2, {{0, 'Z'}})},
        {image_only(2, {{1, 'X'}}), image_only(2, {{0, 'Z'}, {1, 'Z'}})},
    };
    return MeasurementPattern(std::move(p), std::move(flow), true);
}

MeasurementPattern tensor(const MeasurementPattern &a, const MeasurementPattern &b) {
    const GraphProgram &pa = a.program();
    std::map<int, int> ids;
    int next = pa.max_vertex();
    for (int v : b.program().vertices) ids[v] = ++next;
    GraphProgram pb = b.program().relabeled(ids);

    GraphProgram out = pa;
    for (int v : pb.vertices) out.add_vertex(v);
    for (const auto &[x, y] : pb.edges) out.add_edge(x, y);
    for (const auto &[v, c] : pb.local_cliffords) out.set_local_clifford(v, c);
    out.inputs.insert(out.inputs.end(), pb.inputs.begin(), pb.inputs.end());
    out.outputs.insert(out.outputs.end(), pb.outputs.begin(), pb.outputs.end());
    out.steps.insert(out.steps.end(), pb.steps.begin(), pb.steps.end());
    for (const auto &[o, byp] : pb.byproducts) out.byproducts[o] = byp;
    out.num_slots = std::max(pa.num_slots, pb.num_slots);

    const size_t na = a.num_outputs(), nb = b.num_outputs();
    auto widen = [&](PauliFlow f, bool second) {
        std::vector<std::array<bool, 2>> img(na + nb, {false, false});
        std::copy(f.image.begin(), f.image.end(), img.begin() + (second ? std::ptrdiff_t(na) : 0));
        f.image = std::move(img);
        return f;
    };
    std::vector<InputFlow> flow;
    for (const auto &f : a.flow()) flow.push_back({widen(f.x, false), widen(f.z, false)});
    for (const auto &f : b.flow()) flow.push_back({widen(relabeled_flow(f.x, ids), true), widen(relabeled_flow(f.z, ids), true)});
    return MeasurementPattern(std::move(out), std::move(flow), a.is_clifford() && b.is_clifford());
}

MeasurementPattern tensor(const std::vector<MeasurementPattern> &parts) {
    if (parts.empty()) throw ArgumentError("tensor: no patterns");
    MeasurementPattern out = parts.front();
    for (size_t i = 1; i < parts.size(); ++i) out = tensor(out, parts[i]);
    return out;
}

MeasurementPattern concatenate(const MeasurementPattern &a, const MeasurementPattern &b, const std::vector<size_t> &wiring) {
    const GraphProgram &pa = a.program();
    const GraphProgram &pb0 = b.program();
    if (a.num_outputs() != b.num_inputs() || wiring.size() != a.num_outputs()) {
        throw ArgumentError("concatenate: arity mismatch (" + std::to_string(a.num_outputs()) + " outputs feed " +
                            std::to_string(b.num_inputs()) + " inputs)");
    }
    std::vector<bool> hit(wiring.size(), false);
    for (size_t w : wiring) {
        if (w >= hit.size() || hit[w]) throw ArgumentError("concatenate: wiring is not a bijection");
        hit[w] = true;
    }

    // b's input wiring[k] becomes a's output k; other b vertices get fresh ids.
    std::map<int, int> ids;
    for (size_t k = 0; k < wiring.size(); ++k) ids[pb0.inputs[wiring[k]]] = pa.outputs[k];
    int next = pa.max_vertex();
    for (int v : pb0.vertices) {
        if (!ids.count(v)) ids[v] = ++next;
    }
    GraphProgram pb = pb0.relabeled(ids);

    GraphProgram out;
    out.vertices = pa.vertices;
    out.edges = pa.edges;
    out.local_cliffords = pa.local_cliffords;
    for (int v : pb.vertices) {
        if (!out.has_vertex(v)) out.add_vertex(v);
    }
    for (const auto &[x, y] : pb.edges) out.add_edge(x, y);
    for (const auto &[v, c] : pb.local_cliffords) out.set_local_clifford(v, c);
    out.inputs = pa.inputs;
    out.outputs = pb.outputs;
    out.num_slots = std::max(pa.num_slots, pb.num_slots);
    out.steps = pa.steps;

    // a's byproduct on output k, pushed through b.
    std::map<int, Parity> extra_sign;
    for (size_t k = 0; k < wiring.size(); ++k) {
        const Byproduct byp = pa.byproduct(pa.outputs[k]);
        const InputFlow &f = b.flow()[wiring[k]];
        for (const auto &[flow, parity] : {std::pair{&f.x, &byp.x}, std::pair{&f.z, &byp.z}}) {
            if (parity->is_zero()) continue;
            PauliFlow moved = relabeled_flow(*flow, ids);
            for (int n : moved.flipped_steps) extra_sign[n] ^= *parity;
            for (size_t q = 0; q < moved.image.size(); ++q) {
                Byproduct &target = out.byproducts[pb.outputs[q]];
                if (moved.image[q][0]) target.x ^= *parity;
                if (moved.image[q][1]) target.z ^= *parity;
            }
        }
    }
    for (Step s : pb.steps) {
        auto it = extra_sign.find(s.node);
        if (it != extra_sign.end()) s.sign ^= it->second;
        out.steps.push_back(std::move(s));
    }
    for (const auto &[o, byp] : pb.byproducts) {
        Byproduct &target = out.byproducts[o];
        target.x ^= byp.x;
        target.z ^= byp.z;
    }
    for (auto it = out.byproducts.begin(); it != out.byproducts.end();) {
        it = it->second.is_zero() ? out.byproducts.erase(it) : std::next(it);
    }

    std::vector<InputFlow> flow;
    for (const auto &f : a.flow()) {
        flow.push_back({through(f.x, b.flow(), wiring, b.num_outputs(), ids), through(f.z, b.flow(), wiring, b.num_outputs(), ids)});
    }
    return MeasurementPattern(std::move(out), std::move(flow), a.is_clifford() && b.is_clifford());
}

MeasurementPattern concatenate(const MeasurementPattern &a, const MeasurementPattern &b) {
    std::vector<size_t> wiring(a.num_outputs());
    std::iota(wiring.begin(), wiring.end(), size_t{0});
    return concatenate(a, b, wiring);
}

MeasurementPattern compile_layers(int S, int K) {
    if (S < 2 || S % 2 != 0) throw ArgumentError("compile_layers: S must be even and at least 2, got " + std::to_string(S));
    if (K < 0) throw ArgumentError("compile_layers: K must be non-negative");
    MeasurementPattern out = tensor(std::vector<MeasurementPattern>(size_t(S), wire_pattern()));
    for (int l = 0; l < K; ++l) {
        std::vector<MeasurementPattern> rot;
        for (int n = 0; n < S; ++n) {
            const int base = l * 2 * S + 2 * n;
            rot.push_back(single_qubit_unitary_pattern({-1, base, base + 1}));
        }
        out = concatenate(out, tensor(rot));
        out = concatenate(out, tensor(std::vector<MeasurementPattern>(size_t(S / 2), cx_pattern())));
        if (S > 2) {
            std::vector<MeasurementPattern> second{wire_pattern()};
            for (int n = 1; n + 1 < S; n += 2) second.push_back(cx_pattern());
            second.push_back(wire_pattern());
            out = concatenate(out, tensor(second));
        }
    }
    return out;
}

CustomState standardize(const MeasurementPattern &pattern) {
    GraphProgram p = pattern.program();
    p.inputs.clear();
    return CustomState(eliminate_pauli_steps(p, PivotPreference::AuxiliariesFirst));
}

}  // namespace mbvqe
