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

#include "mbvqe/vqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "mbvqe/errors.hpp"

namespace mbvqe {

std::string method_name(OptimizerMethod m) { return m == OptimizerMethod::NelderMead ? "nelder_mead" : "spsa"; }

OptimizerMethod parse_method(const std::string &name) {
    if (name == "nelder_mead") return OptimizerMethod::NelderMead;
    if (name == "spsa") return OptimizerMethod::Spsa;
    throw ArgumentError("unknown optimizer method '" + name + "' (expected nelder_mead or spsa)");
}

void OptimizerConfig::validate() const {
    if (!(tolerance > 0.0)) throw ArgumentError("optimizer tolerance must be positive");
    if (max_iterations == 0) throw ArgumentError("optimizer iteration budget must be positive");
    if (!(step > 0.0)) throw ArgumentError("optimizer step must be positive");
    if (max_restarts < 0) throw ArgumentError("optimizer restarts must be non-negative");
}

double relative_error(double energy, double reference) {
    const double d = std::abs(energy - reference);
    return reference == 0.0 ? d : d / std::abs(reference);
}

namespace {

using Point = std::vector<double>;

class Recorder {
   public:
    Recorder(const CostFunction &cost, const OptimizerConfig &config, RunTrace &trace)
        : cost_(cost), config_(config), trace_(trace) {}

    double operator()(const Point &x) {
        const double f = cost_(x);
        ++trace_.evaluations;
        if (!std::isfinite(f)) {
            std::ostringstream msg;
            msg << "cost returned " << f << " at theta = [";
            for (size_t i = 0; i < x.size(); ++i) msg << (i ? ", " : "") << x[i];
            msg << "]";
            throw NonFiniteCostError(msg.str());
        }
        if (trace_.best_params.empty() || f < trace_.best_energy) {
            trace_.best_energy = f;
            trace_.best_params = x;
        }
        return f;
    }

    double best() const { return trace_.best_energy; }

    void row() {
        TraceRow r;
        r.iteration = ++iteration_;
        r.evaluations = trace_.evaluations;
        r.best_energy = trace_.best_energy;
        if (config_.snapshot_every && r.iteration % config_.snapshot_every == 0) r.params = trace_.best_params;
        trace_.rows.push_back(std::move(r));
    }

   private:
    const CostFunction &cost_;
    const OptimizerConfig &config_;
    RunTrace &trace_;
    size_t iteration_ = 0;
};

// Nelder-Mead with dimension-adaptive coefficients.
void nelder_mead(Recorder &f, Point start, const OptimizerConfig &cfg) {
    const size_t n = start.size();
    if (n == 0) {
        f(start);
        f.row();
        return;
    }
    const double dn = double(n);
    const double alpha = 1.0, beta = 1.0 + 2.0 / dn, gamma = 0.75 - 0.5 / dn, delta = 1.0 - 1.0 / dn;

    std::vector<Point> simplex(n + 1, start);
    std::vector<double> values(n + 1);
    for (size_t i = 0; i < n; ++i) simplex[i + 1][i] += cfg.step;
    for (size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

    std::vector<size_t> order(n + 1);
    Point centroid(n), trial(n);
    auto along = [&](double t) {
        Point p(n);
        for (size_t j = 0; j < n; ++j) p[j] = centroid[j] + t * (simplex[order[n]][j] - centroid[j]);
        return p;
    };
    for (size_t it = 0; it < cfg.max_iterations; ++it) {
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
        const size_t best = order[0], worst = order[n], second = order[n - 1];
        f.row();
        if (values[worst] - values[best] <= cfg.tolerance) break;
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) centroid[j] += simplex[order[k]][j] / dn;

        Point xr = along(-alpha);
        const double fr = f(xr);
        if (fr < values[best]) {
            Point xe = along(-alpha * beta);
            const double fe = f(xe);
            if (fe < fr) {
                simplex[worst] = std::move(xe);
                values[worst] = fe;
            } else {
                simplex[worst] = std::move(xr);
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second]) {
            simplex[worst] = std::move(xr);
            values[worst] = fr;
            continue;
        }
        const bool outside = fr < values[worst];
        Point xc = along(outside ? -alpha * gamma : gamma);
        const double fc = f(xc);
        if (fc < (outside ? fr : values[worst])) {
            simplex[worst] = std::move(xc);
            values[worst] = fc;
            continue;
        }
        for (size_t k = 1; k <= n; ++k) {
            Point &p = simplex[order[k]];
            for (size_t j = 0; j < n; ++j) p[j] = simplex[best][j] + delta * (p[j] - simplex[best][j]);
            values[order[k]] = f(p);
        }
    }
}

void spsa(Recorder &f, Point x, const OptimizerConfig &cfg, uint64_t seed) {
    const size_t n = x.size();
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    const double a = cfg.step, c = 0.1, A = 0.1 * double(cfg.max_iterations);
    f(x);
    double last_best = std::numeric_limits<double>::infinity();
    size_t stale = 0;
    Point plus(n), minus(n), delta(n);
    for (size_t k = 0; k < cfg.max_iterations; ++k) {
        const double ak = a / std::pow(double(k) + 1.0 + A, 0.602);
        const double ck = c / std::pow(double(k) + 1.0, 0.101);
        for (size_t j = 0; j < n; ++j) {
            delta[j] = coin(rng) ? 1.0 : -1.0;
            plus[j] = x[j] + ck * delta[j];
            minus[j] = x[j] - ck * delta[j];
        }
        const double g = (f(plus) - f(minus)) / (2.0 * ck);
        for (size_t j = 0; j < n; ++j) x[j] -= ak * g * delta[j];
        f(x);
        f.row();
        stale = (last_best - f.best()) > cfg.tolerance ? 0 : stale + 1;
        last_best = std::min(last_best, f.best());
        if (stale >= 200) break;
    }
}

}  // namespace

RunTrace minimize(const CostFunction &cost, size_t num_params, const OptimizerConfig &config,
                  std::optional<double> reference_energy) {
    config.validate();
    Point start = config.initial.empty() ? Point(num_params, 0.0) : config.initial;
    if (start.size() != num_params) {
        throw ArgumentError("minimize: initial point has " + std::to_string(start.size()) + " entries, expected " +
                            std::to_string(num_params));
    }
    RunTrace trace;
    Recorder rec(cost, config, trace);
    std::mt19937_64 seeds(config.seed);
    auto run = [&](const Point &from, uint64_t seed) {
        if (config.method == OptimizerMethod::NelderMead) nelder_mead(rec, from, config);
        else spsa(rec, from, config, seed);
    };
    run(start, seeds());
    for (int r = 0; r < config.max_restarts; ++r) {
        if (!reference_energy || relative_error(trace.best_energy, *reference_energy) <= config.restart_threshold) break;
        const uint64_t seed = seeds();
        trace.restart_seeds.push_back(seed);
        ++trace.restarts;
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0.0, config.restart_scale);
        Point from = trace.best_params;
        for (auto &x : from) x += g(rng);
        run(from, seed);
    }
    if (!trace.rows.empty()) trace.rows.back().params = trace.best_params;
    return trace;
}

}  // namespace mbvqe
