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

#include "mbvqe/sim/simulate.hpp"

#include <cmath>
#include <numbers>

#include "mbvqe/errors.hpp"
#include "mbvqe/stabilizer/graph_form.hpp"

namespace mbvqe {

BranchPolicy BranchPolicy::explicit_bits(std::map<int, int> bits) {
    BranchPolicy p(Mode::Explicit, 0);
    for (const auto &[node, bit] : bits) {
        if (bit != 0 && bit != 1) throw ArgumentError("explicit outcome bits must be 0 or 1");
    }
    p.bits_ = std::move(bits);
    return p;
}

int BranchPolicy::choose(int node, double p0) {
    constexpr double kImpossible = 1e-13;
    switch (mode_) {
        case Mode::AllZero: return p0 > kImpossible ? 0 : 1;
        case Mode::Random: return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p0 ? 0 : 1;
        case Mode::Explicit: {
            auto it = bits_.find(node);
            if (it == bits_.end()) throw ArgumentError("no outcome given for vertex " + std::to_string(node));
            return it->second;
        }
    }
    return 0;
}

namespace {

std::array<cplx, 2> basis_ket(Basis::Kind kind, double angle, int outcome) {
    if (kind == Basis::Kind::Z) return outcome ? std::array<cplx, 2>{0.0, 1.0} : std::array<cplx, 2>{1.0, 0.0};
    const double r = 1.0 / std::sqrt(2.0);
    return {r, (outcome ? -r : r) * std::polar(1.0, angle)};
}

struct RunFlags {
    bool lazy = true;
    bool adaptive = true;
    bool corrections = true;
};

class Runner {
   public:
    Runner(const GraphProgram &program, std::span<const double> theta, RunFlags flags)
        : program_(program), theta_(theta), flags_(flags), applied_(program.edges.size(), false) {
        if (theta.size() != size_t(program.num_slots)) {
            throw ArgumentError("theta has " + std::to_string(theta.size()) + " entries, expected " +
                                std::to_string(program.num_slots));
        }
        for (double t : theta) {
            if (!std::isfinite(t)) throw ArgumentError("theta contains a non-finite angle");
        }
        for (size_t e = 0; e < program.edges.size(); ++e) {
            incident_[program.edges[e].first].push_back(e);
            incident_[program.edges[e].second].push_back(e);
        }
    }

    SimReport run(BranchPolicy &policy, const StateVector *input) {
        SimReport report;
        if (input) {
            if (input->num_qubits() != program_.inputs.size()) throw ArgumentError("input state size does not match the inputs");
            state_ = StateVector(program_.inputs, input->amplitudes());
        } else {
            for (int v : program_.inputs) state_.append_plus(v);
        }
        if (!flags_.lazy) {
            for (int v : program_.vertices) activate(v);
            for (size_t e = 0; e < program_.edges.size(); ++e) apply_edge(e);
        }
        peak_ = state_.num_qubits();

        auto outcome_of = [&](int n) { return report.outcomes.at(n) != 0; };
        for (const Step &step : program_.steps) {
            entangle(step.node);
            peak_ = std::max(peak_, state_.num_qubits());
            const LocalClifford c = program_.local_clifford(step.node);
            const size_t pos = state_.position(step.node);
            if (!c.is_identity()) state_.apply(pos, c.matrix());

            bool flip = flags_.adaptive ? step.sign.evaluate(outcome_of) : step.sign.constant();
            double angle = 0.0;
            switch (step.basis.kind) {
                case Basis::Kind::X: angle = 0.0; break;
                case Basis::Kind::Y: angle = flip ? -std::numbers::pi / 2 : std::numbers::pi / 2; break;
                case Basis::Kind::Z: break;
                case Basis::Kind::Rotated:
                    angle = (flip ? -1.0 : 1.0) * step.basis.base_sign * theta_[size_t(step.basis.slot)];
                    break;
            }
            const auto ket0 = basis_ket(step.basis.kind, angle, 0);
            const double p0 = std::clamp(state_.branch_weight(pos, ket0), 0.0, 1.0);
            int s;
            if (step.heralded && flags_.adaptive) {
                s = step.herald.evaluate(outcome_of) ? 1 : 0;
            } else {
                s = policy.choose(step.node, p0);
            }
            const double w = state_.project_out(pos, basis_ket(step.basis.kind, angle, s));
            if (!(w > 1e-28)) {
                throw DegenerateStateError("measurement of vertex " + std::to_string(step.node) +
                                           " selected a zero-probability branch");
            }
            const double scale = 1.0 / std::sqrt(w);
            for (auto &a : state_.amplitudes()) a *= scale;
            report.branch_probability *= w;
            report.outcomes[step.node] = s;
        }

        for (int o : program_.outputs) activate(o);
        for (size_t e = 0; e < program_.edges.size(); ++e) apply_edge(e);
        peak_ = std::max(peak_, state_.num_qubits());
        for (int o : program_.outputs) {
            const size_t pos = state_.position(o);
            if (flags_.corrections) {
                const Byproduct b = program_.byproduct(o);
                if (b.z.evaluate(outcome_of)) state_.apply(pos, gates::pauli('Z'));
                if (b.x.evaluate(outcome_of)) state_.apply(pos, gates::pauli('X'));
            }
            const LocalClifford c = program_.local_clifford(o);
            if (!c.is_identity()) state_.apply(pos, c.matrix());
        }
        report.output_state = state_.permuted(program_.outputs);
        report.peak_active_qubits = peak_;
        return report;
    }

   private:
    void activate(int v) {
        if (!state_.contains(v)) state_.append_plus(v);
    }
    void apply_edge(size_t e) {
        if (applied_[e]) return;
        const auto &[a, b] = program_.edges[e];
        activate(a);
        activate(b);
        state_.apply_cz(state_.position(a), state_.position(b));
        applied_[e] = true;
    }
    void entangle(int v) {
        activate(v);
        auto it = incident_.find(v);
        if (it == incident_.end()) return;
        for (size_t e : it->second) apply_edge(e);
    }

    const GraphProgram &program_;
    std::span<const double> theta_;
    RunFlags flags_;
    std::vector<bool> applied_;
    std::map<int, std::vector<size_t>> incident_;
    StateVector state_;
    size_t peak_ = 0;
};

}  // namespace

SimReport simulate_pattern(const GraphProgram &program, std::span<const double> theta, SimOptions options,
                           const StateVector *input) {
    Runner runner(program, theta, {options.lazy, true, true});
    return runner.run(options.policy, input);
}

std::pair<StateVector, double> postselect_simulate(const GraphProgram &program, std::span<const double> theta,
                                                   const std::map<int, int> &outcomes) {
    for (const auto &s : program.steps) {
        if (!outcomes.count(s.node)) throw ArgumentError("postselect_simulate: no outcome for vertex " + std::to_string(s.node));
    }
    BranchPolicy policy = BranchPolicy::explicit_bits(outcomes);
    Runner runner(program, theta, {true, false, false});
    SimReport r = runner.run(policy, nullptr);
    return {std::move(r.output_state), r.branch_probability};
}

StateVector stabilizer_state(const StabilizerTableau &tableau) {
    const GraphForm form = tableau_to_graphstate(tableau);
    StateVector psi = StateVector::plus(StateVector::range(form.num_qubits));
    for (const auto &[a, b] : form.edges) psi.apply_cz(a, b);
    for (size_t q = 0; q < form.num_qubits; ++q) psi.apply(q, form.corrections[q].matrix());
    return psi;
}

StateVector simulate_circuit(int S, int K, std::span<const double> theta) {
    if (S < 2 || S % 2 != 0) throw ArgumentError("simulate_circuit: S must be even and at least 2");
    if (K < 0) throw ArgumentError("simulate_circuit: K must be non-negative");
    if (theta.size() != size_t(2 * K * S)) throw ArgumentError("simulate_circuit: theta must have 2KS entries");
    StateVector psi = StateVector::plus(StateVector::range(size_t(S)));
    for (int l = 0; l < K; ++l) {
        for (int n = 0; n < S; ++n) {
            const size_t base = size_t(l * 2 * S + 2 * n);
            psi.apply(size_t(n), gates::rotation('Z', theta[base]));
            psi.apply(size_t(n), gates::rotation('X', theta[base + 1]));
        }
        for (int n = 0; n + 1 < S; n += 2) psi.apply_cx(size_t(n), size_t(n + 1));
        for (int n = 1; n + 1 < S; n += 2) psi.apply_cx(size_t(n), size_t(n + 1));
    }
    return psi;
}

double expectation(const StateVector &state, const Hamiltonian &h) {
    if (h.num_qubits() != state.num_qubits()) throw ArgumentError("expectation: Hamiltonian and state sizes differ");
    double e = 0.0;
    for (const auto &t : h.terms()) e += t.coefficient * state.pauli_expectation(t.pauli);
    return e;
}

}  // namespace mbvqe
