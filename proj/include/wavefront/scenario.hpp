// SPDX-License-Identifier: Apache-2.0
//
// wavefront: physical channel models for large antenna arrays
// Copyright (C) 2026 The wavefront authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef WAVEFRONT_SCENARIO_HPP
#define WAVEFRONT_SCENARIO_HPP

#include "estimation.hpp"
#include "geometry.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "validity.hpp"
#include "wavemodels.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wavefront
{
    // Array description resolved against a wavelength (spacing <= 0 means lambda / 2).
    struct ArraySpec
    {
        std::string kind = "ula"; // ula, upa or file
        int n = 256;              // ula element count
        int nx = 16, ny = 16;     // upa grid
        double spacing = 0.0;
        std::string file;         // x,y,z csv for kind == file

        AntennaArray build(double lambda, std::vector<std::string> *warnings = nullptr) const
        {
            const double d = spacing > 0.0 ? spacing : 0.5 * lambda;
            if (kind == "ula")
                return make_ula(n, d);
            if (kind == "upa")
                return make_upa(nx, ny, d);
            if (kind == "file")
            {
                LoadedArray loaded = load_array_csv(file);
                if (warnings)
                    warnings->insert(warnings->end(), loaded.warnings.begin(), loaded.warnings.end());
                return loaded.array;
            }
            throw std::invalid_argument("array kind must be ula, upa or file, got '" + kind + "'");
        }
    };

    struct ScenarioConfig
    {
        ArraySpec array;
        double lambda = 0.01;
        double d_los = 20.0;                                            // meters
        double beta_min = -std::numbers::pi / 3, beta_max = std::numbers::pi / 3; // radians from broadside
        int nlos_min = 0, nlos_max = 5;
        double max_path_length_factor = 2.0;                            // NLoS length in [d_los, factor * d_los]
        double rayleigh_sigma = 0.3;
        double snr_db = 10.0;
        std::uint64_t seed = 0;

        void validate() const
        {
            if (!(lambda > 0.0))
                throw std::invalid_argument("scenario: lambda must be > 0");
            if (!(d_los > 0.0))
                throw std::invalid_argument("scenario: d_los must be > 0");
            if (!(beta_max >= beta_min))
                throw std::invalid_argument("scenario: beta range is empty");
            if (nlos_min < 0 || nlos_max < nlos_min)
                throw std::invalid_argument("scenario: need 0 <= nlos_min <= nlos_max");
            if (!(max_path_length_factor >= 1.0))
                throw std::invalid_argument("scenario: max_path_length_factor must be >= 1");
            if (!(rayleigh_sigma > 0.0))
                throw std::invalid_argument("scenario: rayleigh_sigma must be > 0");
            if (!std::isfinite(snr_db))
                throw std::invalid_argument("scenario: snr_db must be finite");
        }
    };

    // Direction of departure at angle beta from broadside (+y) toward +x, in the x-y plane.
    inline Vec3 direction_from_broadside(double beta) { return {std::sin(beta), std::cos(beta), 0.0}; }

    // LoS path (rho = 1, phi = 0, distance d_los) followed by a uniform number of NLoS paths.
    // Draw order: LoS angle, NLoS count, then per NLoS path angle, length, phase, amplitude.
    inline std::vector<Path> generate_scenario(const ScenarioConfig &cfg, Rng &rng)
    {
        cfg.validate();
        std::vector<Path> paths;
        paths.push_back({1.0, 0.0, direction_from_broadside(rng.uniform(cfg.beta_min, cfg.beta_max)), cfg.d_los,
                         std::nullopt});
        const auto n_nlos = rng.uniform_int(cfg.nlos_min, cfg.nlos_max);
        for (std::int64_t k = 0; k < n_nlos; ++k)
        {
            Path p;
            p.u_t = direction_from_broadside(rng.uniform(cfg.beta_min, cfg.beta_max));
            p.distance = rng.uniform(cfg.d_los, cfg.max_path_length_factor * cfg.d_los);
            p.phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
            p.rho = rng.rayleigh(cfg.rayleigh_sigma);
            paths.push_back(p);
        }
        return paths;
    }

    // Circular complex Gaussian noise at the given SNR, measured on this realization:
    // per-sample variance ||y||^2 / (N 10^(snr/10)).
    inline Eigen::VectorXcd add_noise(const Eigen::VectorXcd &y_clean, double snr_db, Rng &rng)
    {
        const double energy = y_clean.squaredNorm();
        if (!(energy > 0.0))
            throw std::invalid_argument("add_noise: signal must be non-zero");
        const double variance = energy / (static_cast<double>(y_clean.size()) * std::pow(10.0, snr_db / 10.0));
        const double sd = std::sqrt(0.5 * variance);
        Eigen::VectorXcd y = y_clean;
        for (Eigen::Index i = 0; i < y.size(); ++i)
        {
            const double re = rng.normal();
            const double im = rng.normal();
            y[i] += cd(sd * re, sd * im);
        }
        return y;
    }

    struct EstimatorSpec
    {
        Strategy strategy = Strategy::Plane;
        WaveModel model = WaveModel::Plane;
    };

    struct BenchmarkConfig
    {
        ScenarioConfig scenario;
        int n_directions = 300;
        int n_distances = 20;
        double distance_min = 1.0;
        double distance_max = 1000.0;
        std::vector<int> p_values{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        std::vector<EstimatorSpec> estimators{{Strategy::Plane, WaveModel::Plane},
                                              {Strategy::Joint, WaveModel::Parabolic},
                                              {Strategy::Joint, WaveModel::Spherical},
                                              {Strategy::Sequential, WaveModel::Parabolic},
                                              {Strategy::Sequential, WaveModel::Spherical}};
        int trials = 100;
        unsigned threads = 1;
    };

    struct BenchmarkRow
    {
        Strategy strategy = Strategy::Plane;
        WaveModel model = WaveModel::Plane;
        int p = 1;
        int trials = 0;
        double mean_relative_error = 0.0;
        double mean_correlations = 0.0;
    };

    struct BenchmarkReport
    {
        std::vector<BenchmarkRow> rows;                      // estimator-major, p ascending
        std::vector<std::vector<std::vector<double>>> errors; // [estimator][p index][trial]
        std::size_t runs = 0;
        std::size_t monotone_runs = 0;                       // runs whose residual history never increased
    };

    // Dictionaries shared by every trial of a benchmark.
    struct EstimationGrids
    {
        AntennaArray array;
        ObservationModel obs;
        Dictionary pwm, parwm, swm;
        SensedDictionary pwm_s, parwm_s, swm_s;

        EstimationGrids(AntennaArray arr, const BenchmarkConfig &cfg, bool need_parwm = true, bool need_swm = true)
            : array(std::move(arr)), obs(ObservationModel::identity(static_cast<Eigen::Index>(array.size())))
        {
            const auto dirs = azimuth_grid(cfg.n_directions);
            const auto dists = log_space(cfg.distance_min, cfg.distance_max, cfg.n_distances);
            const double lambda = cfg.scenario.lambda;
            pwm = make_dictionary(WaveModel::Plane, array, dirs, {}, lambda);
            pwm_s = sense(pwm, obs);
            if (need_parwm)
            {
                parwm = make_dictionary(WaveModel::Parabolic, array, dirs, dists, lambda);
                parwm_s = sense(parwm, obs);
            }
            if (need_swm)
            {
                swm = make_dictionary(WaveModel::Spherical, array, dirs, dists, lambda);
                swm_s = sense(swm, obs);
            }
        }
        EstimationGrids(const EstimationGrids &) = delete;
        EstimationGrids &operator=(const EstimationGrids &) = delete;

        StrategyDictionaries for_model(WaveModel m) const
        {
            switch (m)
            {
            case WaveModel::Plane:
                return {&pwm_s, nullptr};
            case WaveModel::Parabolic:
                return {&pwm_s, parwm.atoms.size() ? &parwm_s : nullptr};
            case WaveModel::Spherical:
                return {&pwm_s, swm.atoms.size() ? &swm_s : nullptr};
            }
            return {};
        }
    };

    inline void validate_estimator(const EstimatorSpec &e)
    {
        const bool curved = uses_distance(e.model);
        if ((e.strategy == Strategy::Plane) == curved)
            throw std::invalid_argument("estimator: the pwm strategy pairs with the pwm model, joint/seq with parwm/swm");
    }

    // One trial: draw a scenario from `seed`, synthesize the spherical-wave truth,
    // observe it with noise, and estimate it.
    struct TrialData
    {
        std::vector<Path> paths;
        Eigen::VectorXcd h;
        Eigen::VectorXcd y;
    };

    inline TrialData make_trial(const ScenarioConfig &sc, const EstimationGrids &grids, std::uint64_t seed)
    {
        Rng rng(seed);
        TrialData t;
        t.paths = generate_scenario(sc, rng);
        t.h = synth_miso(grids.array, t.paths, WaveModel::Spherical, sc.lambda).entries;
        t.y = add_noise(grids.obs.X * t.h, sc.snr_db, rng);
        return t;
    }

    // Monte-Carlo comparison of estimators. Trial t uses child_seed(seed, t), so the
    // output does not depend on the number of threads.
    inline BenchmarkReport run_benchmark(const BenchmarkConfig &cfg)
    {
        cfg.scenario.validate();
        if (cfg.trials < 1)
            throw std::invalid_argument("benchmark: trials must be >= 1");
        if (cfg.p_values.empty())
            throw std::invalid_argument("benchmark: no p values");
        for (int p : cfg.p_values)
            if (p < 1)
                throw std::invalid_argument("benchmark: p values must be >= 1");
        if (cfg.estimators.empty())
            throw std::invalid_argument("benchmark: no estimators");
        bool need_parwm = false, need_swm = false;
        for (const auto &e : cfg.estimators)
        {
            validate_estimator(e);
            need_parwm = need_parwm || e.model == WaveModel::Parabolic;
            need_swm = need_swm || e.model == WaveModel::Spherical;
        }

        const EstimationGrids grids(cfg.scenario.array.build(cfg.scenario.lambda), cfg, need_parwm, need_swm);
        const int p_max = *std::max_element(cfg.p_values.begin(), cfg.p_values.end());
        const std::size_t n_est = cfg.estimators.size(), n_p = cfg.p_values.size();
        const auto trials = static_cast<std::size_t>(cfg.trials);

        // [trial][estimator][p index]
        std::vector<std::vector<std::vector<double>>> err(trials), corr(trials);
        std::vector<std::size_t> monotone(trials, 0);

        parallel_for(trials, cfg.threads, [&](std::size_t t)
                     {
            const TrialData data = make_trial(cfg.scenario, grids, child_seed(cfg.scenario.seed, t));
            err[t].assign(n_est, std::vector<double>(n_p, 0.0));
            corr[t].assign(n_est, std::vector<double>(n_p, 0.0));
            for (std::size_t e = 0; e < n_est; ++e)
            {
                const auto &spec = cfg.estimators[e];
                auto observer = [&](int k, const EstimationResult &r)
                {
                    for (std::size_t i = 0; i < n_p; ++i)
                        if (cfg.p_values[i] == k)
                        {
                            err[t][e][i] = relative_error(data.h, r.h_hat.entries);
                            corr[t][e][i] = static_cast<double>(r.correlation_count);
                        }
                };
                const EstimationResult r = greedy_estimate(data.y, grids.obs, grids.for_model(spec.model),
                                                           spec.strategy, p_max, observer);
                bool mono = true;
                for (std::size_t i = 1; i < r.residual_norms.size(); ++i)
                    mono = mono && r.residual_norms[i] <= r.residual_norms[i - 1];
                monotone[t] += mono ? 1 : 0;
            } });

        BenchmarkReport rep;
        rep.errors.assign(n_est, std::vector<std::vector<double>>(n_p, std::vector<double>(trials)));
        for (std::size_t e = 0; e < n_est; ++e)
            for (std::size_t i = 0; i < n_p; ++i)
            {
                double se = 0.0, sc = 0.0;
                for (std::size_t t = 0; t < trials; ++t)
                {
                    se += err[t][e][i];
                    sc += corr[t][e][i];
                    rep.errors[e][i][t] = err[t][e][i];
                }
                rep.rows.push_back({cfg.estimators[e].strategy, cfg.estimators[e].model, cfg.p_values[i], cfg.trials,
                                    se / cfg.trials, sc / cfg.trials});
            }
        rep.runs = trials * n_est;
        for (auto m : monotone)
            rep.monotone_runs += m;
        return rep;
    }
}

#endif
