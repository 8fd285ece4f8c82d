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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mbvqe {

enum class OptimizerMethod { NelderMead, Spsa };

std::string method_name(OptimizerMethod m);
/// "nelder_mead" or "spsa"; throws ArgumentError otherwise.
OptimizerMethod parse_method(const std::string &name);

struct OptimizerConfig {
    OptimizerMethod method = OptimizerMethod::NelderMead;
    /// Iteration budget per optimizer run (restarts get their own budget).
    size_t max_iterations = 20000;
    /// Stop once the simplex energy spread falls below this (NM), or the best energy has not
    /// moved by more than this for a window of iterations (SPSA).
    double tolerance = 1e-12;
    /// Starting point; empty means all zeros.
    std::vector<double> initial;
    uint64_t seed = 1;
    /// Initial simplex edge (NM) or perturbation size (SPSA).
    double step = 0.4;
    /// Restarts from a perturbed copy of the best point while the relative error against a
    /// known reference energy exceeds restart_threshold.
    int max_restarts = 3;
    double restart_threshold = 1e-3;
    double restart_scale = 0.1;
    /// Record the parameter vector every this many iterations (0: only the final one).
    size_t snapshot_every = 0;

    /// Throws ArgumentError on a non-positive tolerance or budget.
    void validate() const;
};

struct TraceRow {
    size_t iteration = 0;
    size_t evaluations = 0;
    double best_energy = 0.0;
    std::vector<double> params;  // empty unless snapshotted
};

struct RunTrace {
    std::vector<TraceRow> rows;
    std::vector<double> best_params;
    double best_energy = 0.0;
    size_t evaluations = 0;
    size_t restarts = 0;
    /// Seed of each restart's perturbation.
    std::vector<uint64_t> restart_seeds;
};

using CostFunction = std::function<double(std::span<const double>)>;

/// Minimizes `cost` over `num_params` parameters. The best-energy column of the trace never
/// increases. A non-finite cost value raises NonFiniteCostError naming the parameters.
RunTrace minimize(const CostFunction &cost, size_t num_params, const OptimizerConfig &config,
                  std::optional<double> reference_energy = std::nullopt);

/// |E - E_ref| / |E_ref| (absolute difference when E_ref is 0).
double relative_error(double energy, double reference);

}  // namespace mbvqe
