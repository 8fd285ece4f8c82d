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


#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>

#include "commands.hpp"
#include "config.hpp"
#include "mbvqe/errors.hpp"

int main(int argc, char **argv) {
    using namespace mbvqe::cli;
    CLI::App app{"Measurement-based VQE: compile custom states, run experiments, verify properties"};
    app.require_subcommand(1);
    std::string config_path;
    std::optional<uint64_t> seed;
    std::optional<std::string> out;
    std::optional<size_t> jobs;
    std::optional<std::string> suite;
    std::optional<size_t> trials;
    std::vector<std::string> sets;
    bool corrupt = false;

    auto common = [&](CLI::App *cmd) {
        cmd->add_option("--config", config_path, "INI-style config file")->check(CLI::ExistingFile);
        cmd->add_option("--seed", seed, "Random seed");
        cmd->add_option("--out", out, "Output directory");
        cmd->add_option("--jobs", jobs, "Worker threads for grids without warm starts");
        cmd->add_option("--set", sets, "Override a config key: section.key=value (repeatable)");
    };
    CLI::App *compile = app.add_subcommand("compile", "Write custom-state JSON/DOT and a resource report");
    CLI::App *run = app.add_subcommand("run", "Run the configured experiment and write CSV/JSON");
    CLI::App *verify = app.add_subcommand("verify", "Run property suites; exit 2 on failure");
    for (auto *cmd : {compile, run, verify}) common(cmd);
    verify->add_option("--suite", suite, "all, determinism, eq-s1, backend or counts");
    verify->add_option("--trials", trials, "Trials per randomized check");
    verify->add_flag("--corrupt-byproducts", corrupt, "Fault fixture: corrupt the byproduct tables under test");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kValidationError;
    }

    RunConfig config;
    try {
        std::map<std::string, std::string> overrides;
        for (const auto &s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw mbvqe::ArgumentError("--set expects key=value, got '" + s + "'");
            overrides[s.substr(0, eq)] = s.substr(eq + 1);
        }
        if (seed) overrides["seed"] = std::to_string(*seed);
        if (out) overrides["out"] = *out;
        if (jobs) overrides["jobs"] = std::to_string(*jobs);
        if (suite) overrides["verify.suite"] = *suite;
        if (trials) overrides["verify.trials"] = std::to_string(*trials);
        config = load_config(config_path.empty() ? std::nullopt : std::optional(config_path), overrides);
        config.corrupt_byproducts = corrupt;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationError;
    }
    const auto echo = config.echo();
    for (size_t i = 0; i < echo.size(); ++i) {
        const std::string key = echo[i].substr(0, echo[i].find(" = "));
        if (std::find(config.defaulted.begin(), config.defaulted.end(), key) != config.defaulted.end())
            std::cerr << "default: " << echo[i] << "\n";
    }
    try {
        if (*compile) return cmd_compile(config, std::cout);
        if (*run) return cmd_run(config, std::cout);
        return cmd_verify(config, std::cout, std::cerr);
    } catch (const mbvqe::ArgumentError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPropertyFailure;
    }
}
