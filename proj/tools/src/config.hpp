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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbvqe/vqe/optimizer.hpp"

namespace mbvqe::cli {

/// Resolved settings of one invocation.
struct RunConfig {
    std::string experiment = "schwinger";  // toric | schwinger
    uint64_t seed = 1;
    std::string out = "mbvqe_out";
    size_t jobs = 1;

    int nx = 2;
    int ny = 2;
    std::string scenario = "uniform";
    std::vector<double> lambdas;

    int S = 4;
    std::vector<int> K{1, 2, 3};
    std::vector<double> mus;
    double J = 1.0;
    double w = 1.0;

    OptimizerConfig optimizer;
    bool warm_start = true;

    std::string suite = "all";
    /// Overrides every suite's default trial count.
    std::optional<size_t> trials;
    /// Test fixture: corrupt the byproduct tables of the patterns under verification.
    bool corrupt_byproducts = false;

    /// Keys that kept their built-in default.
    std::vector<std::string> defaulted;

    /// Throws ArgumentError.
    void validate() const;
    /// "key = value" for every key, in registry order.
    std::vector<std::string> echo() const;
};

/// Every accepted key ("section.name"; top-level keys have no section).
std::vector<std::string> config_keys();

/// Reads the INI-style file (if any), then applies the overrides (key -> value), then validates.
/// Unknown keys, bad values and duplicates throw ArgumentError.
RunConfig load_config(const std::optional<std::string> &path, const std::map<std::string, std::string> &overrides);

/// "a,b,c" or "start:stop:count" (count evenly spaced points, both ends included).
std::vector<double> parse_grid(const std::string &text);

}  // namespace mbvqe::cli
