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

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mbvqe/graphstate/program.hpp"

namespace mbvqe {

/// JSON document of a program (schema "mbvqe-program/1"):
///
///   { "schema": "mbvqe-program/1", "num_slots": int,
///     "vertices": [{"id": int, "role": "input"|"output"|"auxiliary", "local_clifford": name}],
///     "inputs": [id...], "outputs": [id...],       // logical order
///     "edges": [[a, b]...],                        // a < b
///     "steps": [{"node": id, "basis": "X"|"Y"|"Z"|"R", "slot": int, "base_sign": +-1,
///                "sign": parity, "heralded": bool, "herald": parity}],
///     "byproducts": [{"output": id, "x": parity, "z": parity}] }
///
/// A parity is {"nodes": [id...], "constant": 0|1}. Steps are listed in execution order; the
/// nodes of each step's sign are earlier steps, which is the dependency DAG. "slot" is -1 for
/// Pauli steps and "herald" is omitted unless "heralded" is true.
std::string program_to_json(const GraphProgram &program, int indent = 2);
/// Inverse of program_to_json; validates the result. Throws ArgumentError on malformed input.
GraphProgram program_from_json(const std::string &text);

/// Undirected DOT graph: outputs as doubled circles, auxiliaries labelled with their basis.
std::string program_to_dot(const GraphProgram &program, const std::string &name = "custom_state");

/// CSV writer with a versioned header.
///
/// The first line is "# <schema>", followed by one "# " line per comment, the column header,
/// and the rows. Numbers use 17 significant digits so files are reproducible bit for bit.
class CsvTable {
   public:
    CsvTable(std::string schema, std::vector<std::string> columns);

    void add_comment(const std::string &line);
    /// Throws ArgumentError when the row width differs from the column count.
    void add_row(const std::vector<double> &row);
    size_t num_rows() const { return rows_.size(); }

    void write(std::ostream &out) const;
    std::string str() const;

   private:
    std::string schema_;
    std::vector<std::string> columns_;
    std::vector<std::string> comments_;
    std::vector<std::vector<double>> rows_;
};

}  // namespace mbvqe
