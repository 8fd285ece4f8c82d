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


#include <json.hpp>

#include <filesystem>
#include <fstream>

#include "commands.hpp"
#include "mbvqe/errors.hpp"
#include "mbvqe/graphstate/custom_state.hpp"
#include "mbvqe/io/serialize.hpp"
#include "mbvqe/mbqc/pattern.hpp"
#include "mbvqe/vqe/experiments.hpp"

namespace mbvqe::cli {
namespace {

using nlohmann::ordered_json;

ordered_json config_json(const RunConfig &c) {
    ordered_json j = ordered_json::object();
    for (const auto &line : c.echo()) {
        const auto eq = line.find(" = ");
        j[line.substr(0, eq)] = line.substr(eq + 3);
    }
    return j;
}

std::filesystem::path prepare_out(const RunConfig &c) {
    std::filesystem::path dir(c.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ArgumentError("cannot create output directory " + c.out + ": " + ec.message());
    return dir;
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ArgumentError("cannot write " + path.string());
    f << text;
}

void write_csv(const std::filesystem::path &path, const RunConfig &c, CsvTable table) {
    for (const auto &line : c.echo()) table.add_comment("config " + line);
    write_file(path, table.str());
}

// Custom state JSON with the config echoed in front.
std::string state_json(const RunConfig &c, const GraphProgram &p) {
    ordered_json doc;
    doc["config"] = config_json(c);
    doc["seed"] = c.seed;
    doc["custom_state"] = ordered_json::parse(program_to_json(p));
    return doc.dump(2) + "\n";
}

std::string state_dot(const RunConfig &c, const GraphProgram &p, const std::string &name) {
    std::string s;
    for (const auto &line : c.echo()) s += "// config " + line + "\n";
    return s + program_to_dot(p, name);
}

ordered_json resource_entry(const std::string &name, const CustomState &s, size_t eliminated) {
    ordered_json j;
    j["name"] = name;
    j["qubits"] = s.num_qubits();
    j["outputs"] = s.num_outputs();
    j["rotated_measurements"] = s.program().rotated_count();
    j["eliminated_pauli_measurements"] = eliminated;
    j["heralded_steps"] = s.program().heralded_count();
    return j;
}

}  // namespace

int cmd_compile(const RunConfig &config, std::ostream &out) {
    const auto dir = prepare_out(config);
    ordered_json report;
    report["config"] = config_json(config);
    report["seed"] = config.seed;
    report["states"] = ordered_json::array();
    auto emit = [&](const std::string &name, const CustomState &s, size_t eliminated) {
        write_file(dir / (name + ".json"), state_json(config, s.program()));
        write_file(dir / (name + ".dot"), state_dot(config, s.program(), name));
        report["states"].push_back(resource_entry(name, s, eliminated));
        out << name << ": " << s.num_qubits() << " qubits, " << s.program().rotated_count() << " rotated measurements, "
            << eliminated << " eliminated Pauli measurements";
        if (s.program().heralded_count()) out << ", " << s.program().heralded_count() << " heralded";
        out << "\n";
    };
    if (config.experiment == "toric") {
        const ToricLattice lat(config.nx, config.ny);
        const CustomState s = toric_ansatz(lat);
        const size_t per_edge = unreduced_decoration_gadget().pauli_count() - decoration_gadget().program().pauli_count();
        emit("toric_" + std::to_string(config.nx) + "x" + std::to_string(config.ny), s, per_edge * s.num_slots() / 4);
    } else {
        for (int K : config.K) {
            const MeasurementPattern raw = compile_layers(config.S, K);
            const CustomState s = standardize(raw);
            emit("schwinger_S" + std::to_string(config.S) + "_K" + std::to_string(K), s,
                 raw.program().pauli_count() - s.program().pauli_count());
        }
    }
    write_file(dir / "report.json", report.dump(2) + "\n");
    return kSuccess;
}

int cmd_run(const RunConfig &config, std::ostream &out) {
    const auto dir = prepare_out(config);
    DriverOptions options;
    options.optimizer = config.optimizer;
    options.optimizer.seed = config.seed;
    options.warm_start = config.warm_start;
    options.jobs = config.jobs;

    ordered_json summary;
    summary["config"] = config_json(config);
    summary["seed"] = config.seed;

    if (config.experiment == "toric") {
        const ToricLattice lat(config.nx, config.ny);
        const ToricScenario scenario{parse_scenario(config.scenario), config.seed};
        const auto points = run_toric(lat, scenario, config.lambdas, options);
        CsvTable table("mbvqe-toric-csv v1", {"lambda", "energy", "exact_energy", "relative_error", "infidelity", "ansatz_energy",
                                               "ansatz_relative_error", "product_energy", "product_relative_error", "evaluations",
                                               "restarts"});
        CsvTable trace("mbvqe-trace-csv v1", {"lambda", "iteration", "evaluations", "best_energy"});
        summary["points"] = ordered_json::array();
        double worst = 0.0;
        bool dominates = true;
        for (const auto &p : points) {
            table.add_row({p.lambda, p.energy, p.exact_energy, p.relative_error, p.infidelity, p.ansatz_energy,
                           p.ansatz_relative_error, p.product_energy, p.product_relative_error, double(p.trace.evaluations),
                           double(p.trace.restarts)});
            for (const auto &r : p.trace.rows) trace.add_row({p.lambda, double(r.iteration), double(r.evaluations), r.best_energy});
            summary["points"].push_back({{"lambda", p.lambda},
                                         {"field", p.field},
                                         {"energy", p.energy},
                                         {"exact_energy", p.exact_energy},
                                         {"relative_error", p.relative_error},
                                         {"infidelity", p.infidelity},
                                         {"ansatz_relative_error", p.ansatz_relative_error},
                                         {"product_relative_error", p.product_relative_error},
                                         {"evaluations", p.trace.evaluations},
                                         {"restart_seeds", p.trace.restart_seeds},
                                         {"best_params", p.trace.best_params}});
            worst = std::max(worst, p.infidelity);
            dominates = dominates && p.relative_error <= p.ansatz_relative_error + 1e-12 &&
                        p.relative_error <= p.product_relative_error + 1e-12;
        }
        summary["max_infidelity"] = worst;
        summary["below_baselines"] = dominates;
        const std::string stem = "toric_" + config.scenario;
        write_csv(dir / (stem + ".csv"), config, table);
        write_csv(dir / (stem + "_trace.csv"), config, trace);
        write_file(dir / (stem + "_summary.json"), summary.dump(2) + "\n");
        out << stem << ": " << points.size() << " points, max infidelity " << worst
            << (dominates ? ", below both baselines" : ", NOT below both baselines") << "\n";
        return kSuccess;
    }

    CsvTable table("mbvqe-schwinger-csv v1", {"K", "mu", "energy", "exact_energy", "relative_error", "infidelity",
                                               "order_parameter", "exact_order_parameter", "circuit_energy", "evaluations",
                                               "restarts"});
    CsvTable trace("mbvqe-trace-csv v1", {"K", "mu", "iteration", "evaluations", "best_energy"});
    summary["runs"] = ordered_json::array();
    for (int K : config.K) {
        const SchwingerRun run = run_schwinger(config.S, K, config.mus, config.J, config.w, options);
        ordered_json r;
        r["K"] = K;
        r["custom_state_qubits"] = run.custom_state_qubits;
        r["points"] = ordered_json::array();
        double worst = 0.0;
        for (const auto &p : run.points) {
            table.add_row({double(K), p.mu, p.energy, p.exact_energy, p.relative_error, p.infidelity, p.order_parameter,
                           p.exact_order_parameter, p.circuit_energy, double(p.trace.evaluations), double(p.trace.restarts)});
            for (const auto &row : p.trace.rows)
                trace.add_row({double(K), p.mu, double(row.iteration), double(row.evaluations), row.best_energy});
            r["points"].push_back({{"mu", p.mu},
                                   {"energy", p.energy},
                                   {"exact_energy", p.exact_energy},
                                   {"relative_error", p.relative_error},
                                   {"infidelity", p.infidelity},
                                   {"order_parameter", p.order_parameter},
                                   {"exact_order_parameter", p.exact_order_parameter},
                                   {"evaluations", p.trace.evaluations},
                                   {"restart_seeds", p.trace.restart_seeds},
                                   {"best_params", p.trace.best_params}});
            worst = std::max(worst, p.infidelity);
        }
        r["max_infidelity"] = worst;
        summary["runs"].push_back(std::move(r));
        out << "schwinger S=" << config.S << " K=" << K << ": " << run.custom_state_qubits << "-qubit custom state, "
            << run.points.size() << " points, max infidelity " << worst << "\n";
    }
    write_csv(dir / "schwinger.csv", config, table);
    write_csv(dir / "schwinger_trace.csv", config, trace);
    write_file(dir / "schwinger_summary.json", summary.dump(2) + "\n");
    return kSuccess;
}

}  // namespace mbvqe::cli
