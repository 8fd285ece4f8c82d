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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mbvqe/errors.hpp"
#include "mbvqe/graphstate/custom_state.hpp"
#include "mbvqe/sim/simulate.hpp"
#include "support/dense_oracle.hpp"

namespace mbvqe {
namespace {

constexpr double kPi = std::numbers::pi;

// |psi> of a two-qubit StateVector as an oracle vector.
oracle::Vec as_vec(const StateVector &s) { return oracle::Vec(s.amplitudes().begin(), s.amplitudes().end()); }

TEST(Parity, SubstituteAndEvaluate) {
    Parity p{2, 5};
    p.substitute(5, Parity({3}, true));
    EXPECT_EQ(p.str(), "s2+s3+1");
    EXPECT_TRUE(p.evaluate([](int n) { return n == 3; }) == false);
    p ^= Parity{2};
    EXPECT_EQ(p.str(), "s3+1");
    EXPECT_EQ(Parity().str(), "0");
}

TEST(Gadget, Shape) {
    const CustomState &g = decoration_gadget();
    EXPECT_EQ(g.num_qubits(), 6u);
    EXPECT_EQ(g.num_outputs(), 2u);
    EXPECT_EQ(g.num_slots(), 4u);
    EXPECT_EQ(g.program().rotated_count(), 4u);
    EXPECT_TRUE(g.program().local_clifford(1).is_diagonal());
    EXPECT_TRUE(g.program().local_clifford(2).is_diagonal());
    EXPECT_TRUE(g.is_deterministic());
}

TEST(Gadget, SpecialAngles) {
    const CustomState g = decorate_edge(CustomState::graph(2, {{1, 2}}), 1, 2);
    std::vector<double> zero(4, 0.0), half(4, kPi / 2);
    oracle::Vec cz = oracle::plus_state(2);
    oracle::apply_cz(cz, 2, 0, 1);
    auto s0 = simulate_pattern(g.program(), zero).output_state;
    EXPECT_NEAR(oracle::fidelity(as_vec(s0), cz), 1.0, 1e-10);
    auto s1 = simulate_pattern(g.program(), half).output_state;
    EXPECT_NEAR(oracle::fidelity(as_vec(s1), oracle::plus_state(2)), 1.0, 1e-10);
}

TEST(Gadget, MatchesClosedFormOnRandomAngles) {
    const CustomState g = decorate_edge(CustomState::graph(2, {{1, 2}}), 1, 2);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int trial = 0; trial < 100; ++trial) {
        DecorationAngles t{u(rng), u(rng), u(rng), u(rng)};
        StateVector expected;
        try {
            expected = decorated_edge_state(t);
        } catch (const DegenerateStateError &) {
            continue;
        }
        auto got = simulate_pattern(g.program(), t).output_state;
        EXPECT_NEAR(fidelity(got, expected), 1.0, 1e-9) << trial;
    }
}

TEST(Gadget, EveryBranchGivesTheSameState) {
    const CustomState g = decorate_edge(CustomState::graph(2, {{1, 2}}), 1, 2);
    ASSERT_TRUE(g.is_deterministic());
    DecorationAngles t{0.3, -1.1, 2.0, 0.7};
    const StateVector expected = decorated_edge_state(t);
    const auto aux = g.program().auxiliaries();
    for (int mask = 0; mask < (1 << aux.size()); ++mask) {
        std::map<int, int> bits;
        for (size_t k = 0; k < aux.size(); ++k) bits[aux[k]] = (mask >> k) & 1;
        auto r = simulate_pattern(g.program(), t, {BranchPolicy::explicit_bits(bits)});
        EXPECT_NEAR(fidelity(r.output_state, expected), 1.0, 1e-9) << mask;
    }
}

TEST(Gadget, RejectsNonFiniteAngles) {
    EXPECT_THROW(decorated_edge_state({std::nan(""), 0, 0, 0}), ArgumentError);
}

TEST(Decoration, Accounting) {
    CustomState s = CustomState::graph(4, {{1, 2}, {2, 3}, {3, 4}});
    CustomState d = decorate_all_edges(s);
    EXPECT_EQ(d.num_qubits(), 4u + 4u * 3u);
    EXPECT_EQ(d.num_slots(), 12u);
    EXPECT_EQ(d.num_auxiliaries(), 12u);
    EXPECT_THROW(decorate_edge(s, 1, 3), ArgumentError);
    EXPECT_THROW(add_virtual_edge_and_decorate(s, 1, 2), ArgumentError);
    CustomState v = add_virtual_edge_and_decorate(s, 1, 4);
    EXPECT_EQ(v.num_qubits(), 8u);
}

// Zero angles reproduce the undecorated graph on any branch that survives.
TEST(Decoration, ZeroAnglesReproduceGraph) {
    CustomState s = CustomState::graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CustomState d = decorate_all_edges(s);
    std::vector<double> zero(d.num_slots(), 0.0);
    oracle::Vec ref = oracle::plus_state(4);
    for (auto [a, b] : s.output_edges()) oracle::apply_cz(ref, 4, size_t(a - 1), size_t(b - 1));
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        auto r = simulate_pattern(d.program(), zero, {BranchPolicy::random(seed)});
        EXPECT_NEAR(oracle::fidelity(as_vec(r.output_state), ref), 1.0, 1e-9);
    }
}

TEST(Decoration, VirtualEdgeAtZeroAddsCz) {
    CustomState s = CustomState::graph(3, {{1, 2}});
    CustomState v = add_virtual_edge_and_decorate(s, 1, 3);
    std::vector<double> zero(4, 0.0);
    oracle::Vec ref = oracle::plus_state(3);
    oracle::apply_cz(ref, 3, 0, 1);
    oracle::apply_cz(ref, 3, 0, 2);
    auto r = simulate_pattern(v.program(), zero, {BranchPolicy::random(3)});
    EXPECT_NEAR(oracle::fidelity(as_vec(r.output_state), ref), 1.0, 1e-9);
}

// Gadgets on disjoint edges stay fully adaptive. Once two decorated edges share a vertex, an X
// correction on that vertex no longer commutes with the other gadget, and some steps are heralded.
TEST(Decoration, HeraldedStepsOnlyWhenEdgesShareAVertex) {
    EXPECT_TRUE(decorate_all_edges(CustomState::graph(4, {{1, 2}, {3, 4}})).is_deterministic());
    for (const auto &edges : std::vector<std::vector<std::pair<int, int>>>{
             {{1, 2}, {2, 3}}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{1, 2}, {1, 3}, {1, 4}}}) {
        CustomState d = decorate_all_edges(CustomState::graph(4, edges));
        EXPECT_GT(d.program().heralded_count(), 0u);
        for (const Step &s : d.program().steps) {
            if (s.heralded) EXPECT_EQ(s.basis.kind, Basis::Kind::Rotated);
        }
    }
}

TEST(Decoration, HeraldedRunsAgreeAcrossBranches) {
    CustomState d = decorate_all_edges(CustomState::graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    std::vector<double> th(d.num_slots());
    for (auto &x : th) x = u(rng);
    const auto ref = simulate_pattern(d.program(), th);
    EXPECT_LT(ref.branch_probability, 1.0);
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        auto r = simulate_pattern(d.program(), th, {BranchPolicy::random(seed)});
        EXPECT_NEAR(fidelity(r.output_state, ref.output_state), 1.0, 1e-10) << seed;
    }
}

TEST(Decoration, RandomAnglesMatchDenseReference) {
    // Path 1-2-3: each decorated edge acts as the two-qubit diagonal map of the closed form.
    CustomState d = decorate_all_edges(CustomState::graph(3, {{1, 2}, {2, 3}}));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> th(8);
        for (auto &x : th) x = u(rng);
        oracle::Vec ref = oracle::plus_state(3);
        for (int e = 0; e < 2; ++e) {
            StateVector edge = decorated_edge_state({th[4 * e], th[4 * e + 1], th[4 * e + 2], th[4 * e + 3]});
            // diag map = 2 * edge amplitudes (input |++> has amplitude 1/2 each)
            const auto &amp = edge.amplitudes();
            for (size_t i = 0; i < 8; ++i) {
                size_t a = (i >> (2 - e)) & 1, b = (i >> (1 - e)) & 1;
                ref[i] *= amp[a * 2 + b];
            }
        }
        auto r = simulate_pattern(d.program(), th, {BranchPolicy::random(trial + 1)});
        EXPECT_NEAR(oracle::fidelity(as_vec(r.output_state), ref), 1.0, 1e-9) << trial;
    }
}

TEST(Gadget, ReachabilityGap) {
    // |0>_m |1>_n is never produced.
    double best = 0.0;
    const int steps = 20;
    for (int a = 0; a < steps; ++a)
        for (int b = 0; b < steps; ++b)
            for (int c = 0; c < steps; ++c)
                for (int d = 0; d < steps; ++d) {
                    const double h = 2 * kPi / steps;
                    try {
                        const StateVector s = decorated_edge_state({a * h, b * h, c * h, d * h});
                        best = std::max(best, std::norm(s.amplitudes()[1]));
                    } catch (const DegenerateStateError &) {
                    }
                }
    EXPECT_LT(best, 1.0 - 1e-3);
}

TEST(Gadget, AnglesArePeriodic) {
    const CustomState g = decorate_edge(CustomState::graph(2, {{1, 2}}), 1, 2);
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> t{u(rng), u(rng), u(rng), u(rng)}, shifted = t;
        for (auto &x : shifted) x += 2 * kPi * double(int(rng() % 5) - 2);
        EXPECT_NEAR(fidelity(simulate_pattern(g.program(), t).output_state, simulate_pattern(g.program(), shifted).output_state),
                    1.0, 1e-10);
    }
}

TEST(Decoration, ZeroAnglesReproduceRandomGraphs) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + int(rng() % 7);
        std::vector<std::pair<int, int>> edges;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (rng() % 3 == 0) edges.emplace_back(a, b);
        if (edges.empty()) edges.emplace_back(1, 2);
        CustomState d = decorate_all_edges(CustomState::graph(size_t(n), edges));
        EXPECT_EQ(d.num_qubits(), size_t(n) + 4 * edges.size());
        EXPECT_EQ(d.num_slots(), 4 * edges.size());
        EXPECT_EQ(d.program().rotated_count(), d.num_slots());
        oracle::Vec ref = oracle::plus_state(size_t(n));
        for (auto [a, b] : edges) oracle::apply_cz(ref, size_t(n), size_t(a - 1), size_t(b - 1));
        auto r = simulate_pattern(d.program(), std::vector<double>(d.num_slots(), 0.0), {BranchPolicy::random(uint64_t(trial + 1))});
        EXPECT_NEAR(oracle::fidelity(as_vec(r.output_state), ref), 1.0, 1e-12) << trial;
    }
}

TEST(Decoration, VirtualEdgeAtQuarterTurnsIsProduct) {
    CustomState v = add_virtual_edge_and_decorate(CustomState::graph(2, {}), 1, 2);
    auto r = simulate_pattern(v.program(), std::vector<double>(4, kPi / 2));
    EXPECT_NEAR(oracle::fidelity(as_vec(r.output_state), oracle::plus_state(2)), 1.0, 1e-12);
}

TEST(Decoration, KeepsOutputLocalCliffords) {
    GraphForm form;
    form.num_qubits = 2;
    form.edges = {{0, 1}};
    form.corrections = {LocalClifford::hadamard(), LocalClifford::phase()};
    CustomState d = decorate_all_edges(CustomState::from_graph_form(form));
    oracle::Vec ref = oracle::plus_state(2);
    oracle::apply_cz(ref, 2, 0, 1);
    oracle::apply1(ref, 2, 0, oracle::hadamard2());
    oracle::apply1(ref, 2, 1, oracle::phase2());
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        auto r = simulate_pattern(d.program(), std::vector<double>(4, 0.0), {BranchPolicy::random(seed)});
        EXPECT_NEAR(oracle::fidelity(as_vec(r.output_state), ref), 1.0, 1e-12);
    }
}

TEST(Program, ValidateRejectsBadPatterns) {
    GraphProgram p;
    p.vertices = {1, 2};
    p.outputs = {2};
    p.add_edge(1, 2);
    EXPECT_THROW(p.validate(), PatternError);
    p.steps.push_back({1, Basis::pauli('X'), {}, false, {}});
    EXPECT_NO_THROW(p.validate());
    p.steps.push_back({2, Basis::pauli('X'), {}, false, {}});
    EXPECT_THROW(p.validate(), PatternError);
}

TEST(CustomStateTest, RejectsInputs) {
    GraphProgram p;
    p.vertices = {1};
    p.inputs = {1};
    p.outputs = {1};
    EXPECT_THROW(CustomState{p}, PatternError);
}

}  // namespace
}  // namespace mbvqe
