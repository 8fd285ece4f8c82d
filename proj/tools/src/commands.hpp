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

#include "config.hpp"
#include "mbvqe/graphstate/program.hpp"

namespace mbvqe::cli {

enum ExitCode : int { kSuccess = 0, kValidationError = 1, kPropertyFailure = 2 };

struct CheckResult {
    std::string property;  // determinism, eq-s1, backend, counts
    std::string subject;
    bool passed = false;
    std::string detail;
};

/// Runs the suites selected by config.suite.
std::vector<CheckResult> run_verify(const RunConfig &config);

/// Fault fixture: makes the first output's X byproduct depend on the first measured vertex.
void corrupt_byproducts(GraphProgram &program);

/// Writes custom-state JSON and DOT files plus report.json; prints the resource report.
int cmd_compile(const RunConfig &config, std::ostream &out);
/// Writes the per-point CSV, the per-iteration trace CSV and a JSON summary.
int cmd_run(const RunConfig &config, std::ostream &out);
/// Prints one line per check; failures also go to err. Returns kPropertyFailure on any failure.
int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace mbvqe::cli
