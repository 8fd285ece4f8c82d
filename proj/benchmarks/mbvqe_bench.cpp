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


#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mbvqe/graphstate/custom_state.hpp"
#include "mbvqe/mbqc/pattern.hpp"
#include "mbvqe/models/exact.hpp"
#include "mbvqe/models/schwinger.hpp"
#include "mbvqe/sim/simulate.hpp"
#include "mbvqe/stabilizer/graph_form.hpp"
#include "mbvqe/stabilizer/tableau.hpp"
#include "mbvqe/vqe/experiments.hpp"

namespace {

using namespace mbvqe;

std::vector<double> angles(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<double> t(n);
    for (auto &x : t) x = u(rng);
    return t;
}

void BM_TableauRandomCircuit(benchmark::State &state) {
    const size_t n = size_t(state.range(0));
    std::mt19937_64 rng(1);
    for (auto _ : state) {
        StabilizerTableau t(n);
        for (size_t k = 0; k < 10 * n; ++k) {
            t.apply_h(rng() % n);
            const size_t a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
            t.apply_cx(a, b);
            t.apply_s(rng() % n);
        }
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_TableauRandomCircuit)->Arg(8)->Arg(32)->Arg(128);

void BM_GraphForm(benchmark::State &state) {
    const StabilizerTableau t = logical_state(ToricLattice(2, int(state.range(0))), 0, 0);
    for (auto _ : state) benchmark::DoNotOptimize(tableau_to_graphstate(t));
}
BENCHMARK(BM_GraphForm)->Arg(2)->Arg(3);

void BM_Standardize(benchmark::State &state) {
    const MeasurementPattern p = compile_layers(4, int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(standardize(p));
}
BENCHMARK(BM_Standardize)->Arg(1)->Arg(3);

void BM_SimulateSchwingerPattern(benchmark::State &state) {
    const GraphProgram p = standardize(compile_layers(4, int(state.range(0)))).program();
    const auto t = angles(size_t(p.num_slots), 2);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_pattern(p, t));
}
BENCHMARK(BM_SimulateSchwingerPattern)->Arg(1)->Arg(3);

void BM_SimulateCircuit(benchmark::State &state) {
    const int K = int(state.range(0));
    const auto t = angles(size_t(8 * K), 3);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_circuit(4, K, t));
}
BENCHMARK(BM_SimulateCircuit)->Arg(1)->Arg(3);

void BM_ToricAnsatzCost(benchmark::State &state) {
    const ToricLattice lat(2, 2);
    const CustomState s = toric_ansatz(lat);
    const CostFunction cost = pattern_cost(s.program(), toric_hamiltonian(lat) + perturbation(lat, uniform_field(lat, 1.0)));
    const auto t = angles(s.num_slots(), 4);
    for (auto _ : state) benchmark::DoNotOptimize(cost(t));
}
BENCHMARK(BM_ToricAnsatzCost);

void BM_DecorateToric(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(toric_ansatz(ToricLattice(2, 2)));
}
BENCHMARK(BM_DecorateToric);

void BM_ExactSchwinger(benchmark::State &state) {
    SchwingerParams p;
    p.S = int(state.range(0));
    p.mu = -0.7;
    const Hamiltonian h = schwinger_hamiltonian(p);
    for (auto _ : state) benchmark::DoNotOptimize(exact_ground(h));
}
BENCHMARK(BM_ExactSchwinger)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
