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

#include "mbvqe/io/serialize.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

#include "mbvqe/errors.hpp"

namespace mbvqe {
namespace {

using nlohmann::json;

const char *const kProgramSchema = "mbvqe-program/1";

json parity_json(const Parity &p) { return {{"nodes", p.nodes()}, {"constant", p.constant() ? 1 : 0}}; }

Parity parity_from(const json &j) {
    Parity p(j.at("constant").get<int>() != 0);
    for (int n : j.at("nodes").get<std::vector<int>>()) p.toggle(n);
    return p;
}

std::string basis_letter(const Basis &b) { return b.is_pauli() ? std::string(1, b.pauli_letter()) : "R"; }

std::string role(const GraphProgram &p, int v) {
    if (p.is_input(v)) return "input";
    return p.is_output(v) ? "output" : "auxiliary";
}

std::string number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string program_to_json(const GraphProgram &program, int indent) {
    json doc;
    doc["schema"] = kProgramSchema;
    doc["num_slots"] = program.num_slots;
    json vertices = json::array();
    for (int v : program.vertices)
        vertices.push_back({{"id", v}, {"role", role(program, v)}, {"local_clifford", program.local_clifford(v).name()}});
    doc["vertices"] = std::move(vertices);
    doc["inputs"] = program.inputs;
    doc["outputs"] = program.outputs;
    json edges = json::array();
    for (auto [a, b] : program.edges) edges.push_back({a, b});
    doc["edges"] = std::move(edges);
    json steps = json::array();
    for (const Step &s : program.steps) {
        json j = {{"node", s.node},
                  {"basis", basis_letter(s.basis)},
                  {"slot", s.basis.is_pauli() ? -1 : s.basis.slot},
                  {"base_sign", s.basis.base_sign},
                  {"sign", parity_json(s.sign)},
                  {"heralded", s.heralded}};
        if (s.heralded) j["herald"] = parity_json(s.herald);
        steps.push_back(std::move(j));
    }
    doc["steps"] = std::move(steps);
    json byproducts = json::array();
    for (const auto &[out, b] : program.byproducts)
        byproducts.push_back({{"output", out}, {"x", parity_json(b.x)}, {"z", parity_json(b.z)}});
    doc["byproducts"] = std::move(byproducts);
    return doc.dump(indent);
}

GraphProgram program_from_json(const std::string &text) {
    GraphProgram p;
    try {
        const json doc = json::parse(text);
        if (doc.at("schema").get<std::string>() != kProgramSchema)
            throw ArgumentError("unsupported schema " + doc.at("schema").get<std::string>());
        p.num_slots = doc.at("num_slots").get<int>();
        for (const json &v : doc.at("vertices")) {
            const int id = v.at("id").get<int>();
            p.add_vertex(id);
            p.set_local_clifford(id, LocalClifford::from_word(v.at("local_clifford").get<std::string>()));
        }
        p.inputs = doc.at("inputs").get<std::vector<int>>();
        p.outputs = doc.at("outputs").get<std::vector<int>>();
        for (const json &e : doc.at("edges")) p.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        for (const json &j : doc.at("steps")) {
            Step s;
            s.node = j.at("node").get<int>();
            const std::string b = j.at("basis").get<std::string>();
            if (b == "R")
                s.basis = Basis::rotated(j.at("slot").get<int>(), j.at("base_sign").get<int>());
            else if (b.size() == 1)
                s.basis = Basis::pauli(b[0]);
            else
                throw ArgumentError("bad basis " + b);
            s.sign = parity_from(j.at("sign"));
            s.heralded = j.at("heralded").get<bool>();
            if (s.heralded) s.herald = parity_from(j.at("herald"));
            p.steps.push_back(std::move(s));
        }
        for (const json &j : doc.at("byproducts"))
            p.byproducts[j.at("output").get<int>()] = Byproduct{parity_from(j.at("x")), parity_from(j.at("z"))};
    } catch (const json::exception &e) {
        throw ArgumentError(std::string("malformed program JSON: ") + e.what());
    }
    try {
        p.validate();
    } catch (const PatternError &e) {
        throw ArgumentError(std::string("invalid program JSON: ") + e.what());
    }
    return p;
}

std::string program_to_dot(const GraphProgram &program, const std::string &name) {
    std::map<int, const Step *> step_of;
    for (const Step &s : program.steps) step_of[s.node] = &s;
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n  node [shape=circle];\n";
    for (int v : program.vertices) {
        out << "  " << v << " [label=\"" << v;
        if (auto it = step_of.find(v); it != step_of.end()) {
            const Basis &b = it->second->basis;
            out << "\n" << (b.is_pauli() ? std::string(1, b.pauli_letter()) : "t" + std::to_string(b.slot));
        }
        const LocalClifford c = program.local_clifford(v);
        if (c.id() != LocalClifford::identity().id()) out << "\n" << c.name();
        out << "\"";
        if (program.is_output(v)) out << ", shape=doublecircle";
        if (program.is_input(v)) out << ", style=bold";
        out << "];\n";
    }
    for (auto [a, b] : program.edges) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

CsvTable::CsvTable(std::string schema, std::vector<std::string> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {
    if (columns_.empty()) throw ArgumentError("CSV needs at least one column");
}

void CsvTable::add_comment(const std::string &line) {
    std::istringstream in(line);
    for (std::string part; std::getline(in, part);) comments_.push_back(part);
}

void CsvTable::add_row(const std::vector<double> &row) {
    if (row.size() != columns_.size()) throw ArgumentError("CSV row width does not match the header");
    rows_.push_back(row);
}

void CsvTable::write(std::ostream &out) const {
    out << "# " << schema_ << "\n";
    for (const auto &c : comments_) out << "# " << c << "\n";
    for (size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
    out << "\n";
    for (const auto &row : rows_) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << number(row[i]);
        out << "\n";
    }
}

std::string CsvTable::str() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

}  // namespace mbvqe
