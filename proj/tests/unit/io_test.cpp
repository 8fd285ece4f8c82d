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

#include <json.hpp>

#include <algorithm>
#include <random>
#include <string>

#include "mbvqe/errors.hpp"
#include "mbvqe/io/serialize.hpp"
#include "mbvqe/mbqc/pattern.hpp"
#include "mbvqe/sim/simulate.hpp"
#include "mbvqe/vqe/experiments.hpp"

namespace mbvqe {
namespace {

void expect_same_program(const GraphProgram &a, const GraphProgram &b) {
    EXPECT_EQ(a.vertices, b.vertices);
    EXPECT_EQ(a.edges, b.edges);
    EXPECT_EQ(a.inputs, b.inputs);
    EXPECT_EQ(a.outputs, b.outputs);
    EXPECT_EQ(a.num_slots, b.num_slots);
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (size_t i = 0; i < a.steps.size(); ++i) {
        EXPECT_EQ(a.steps[i].node, b.steps[i].node);
        EXPECT_EQ(a.steps[i].basis, b.steps[i].basis);
        EXPECT_EQ(a.steps[i].sign, b.steps[i].sign);
        EXPECT_EQ(a.steps[i].heralded, b.steps[i].heralded);
        EXPECT_EQ(a.steps[i].herald, b.steps[i].herald);
    }
    for (int v : a.vertices) EXPECT_EQ(a.local_clifford(v).id(), b.local_clifford(v).id()) << v;
    for (int o : a.outputs) {
        EXPECT_EQ(a.byproduct(o).x, b.byproduct(o).x);
        EXPECT_EQ(a.byproduct(o).z, b.byproduct(o).z);
    }
}

TEST(Json, RoundTripsPatternsAndCustomStates) {
    const ToricLattice lat(2, 2);
    const std::vector<GraphProgram> programs = {
        cx_pattern().program(), compile_layers(4, 2).program(), standardize(compile_layers(4, 2)).program(),
        toric_ansatz(lat).program()};
    for (const auto &p : programs) expect_same_program(p, program_from_json(program_to_json(p)));
}

TEST(Json, RoundTripPreservesSimulation) {
    const GraphProgram p = toric_ansatz(ToricLattice(2, 2)).program();
    const GraphProgram q = program_from_json(program_to_json(p, -1));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3, 3);
    std::vector<double> theta(size_t(p.num_slots));
    for (auto &t : theta) t = u(rng);
    EXPECT_NEAR(fidelity(simulate_pattern(p, theta).output_state, simulate_pattern(q, theta).output_state), 1.0, 1e-12);
}

TEST(Json, DocumentsRolesAndDag) {
    const GraphProgram p = standardize(compile_layers(4, 1)).program();
    const auto doc = nlohmann::json::parse(program_to_json(p));
    EXPECT_EQ(doc["schema"], "mbvqe-program/1");
    EXPECT_EQ(doc["vertices"].size(), 12u);
    size_t outputs = 0, rotated = 0;
    for (const auto &v : doc["vertices"]) outputs += v["role"] == "output";
    EXPECT_EQ(outputs, 4u);
    std::vector<int> seen;
    for (const auto &s : doc["steps"]) {
        rotated += s["basis"] == "R";
        for (int n : s["sign"]["nodes"]) EXPECT_NE(std::find(seen.begin(), seen.end(), n), seen.end());
        seen.push_back(s["node"]);
    }
    EXPECT_EQ(rotated, 8u);
}

TEST(Json, RejectsMalformedInput) {
    EXPECT_THROW(program_from_json("{"), ArgumentError);
    EXPECT_THROW(program_from_json(R"({"schema": "other"})"), ArgumentError);
    auto doc = nlohmann::json::parse(program_to_json(cx_pattern().program()));
    doc["steps"].erase(0);
    EXPECT_THROW(program_from_json(doc.dump()), ArgumentError);
}

TEST(Dot, ToricAnsatzHas44Vertices) {
    const std::string dot = program_to_dot(toric_ansatz(ToricLattice(2, 2)).program());
    size_t vertices = 0, edges = 0;
    for (size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++vertices;
    for (size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    EXPECT_EQ(vertices, 44u);
    EXPECT_EQ(edges, toric_ansatz(ToricLattice(2, 2)).program().edges.size());
    EXPECT_EQ(dot.rfind("graph ", 0), 0u);
}

TEST(Csv, VersionedHeaderAndExactNumbers) {
    CsvTable t("mbvqe-test-csv v1", {"x", "y"});
    t.add_comment("seed = 7\nmethod = nelder_mead");
    t.add_row({0.1, 1.0 / 3.0});
    EXPECT_THROW(t.add_row({1.0}), ArgumentError);
    const std::string s = t.str();
    EXPECT_EQ(s, "# mbvqe-test-csv v1\n# seed = 7\n# method = nelder_mead\nx,y\n0.10000000000000001,0.33333333333333331\n");
    EXPECT_EQ(std::stod("0.33333333333333331"), 1.0 / 3.0);
}

}  // namespace
}  // namespace mbvqe
