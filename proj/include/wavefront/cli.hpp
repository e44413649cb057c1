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

#ifndef WAVEFRONT_CLI_HPP
#define WAVEFRONT_CLI_HPP

#include "config.hpp"
#include "estimation.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "scenario.hpp"
#include "validity.hpp"
#include "wavemodels.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavefront
{
    namespace cli
    {
        enum ExitCode : int
        {
            ok = 0,
            runtime_failure = 1,
            usage_error = 2
        };

        // Bad flag values detected after parsing; reported with exit code 2.
        struct UsageError : std::invalid_argument
        {
            using std::invalid_argument::invalid_argument;
        };

        struct OutputFile
        {
            std::string path;
            std::string content;
        };

        struct RunManifest
        {
            std::string command_line;
            std::string config_text; // canonical key = value lines
            std::optional<std::uint64_t> seed;
            std::vector<OutputFile> outputs;
            double wall_time_s = 0.0;

            std::string config_hash() const { return hex64(fnv1a64(config_text)); }

            nlohmann::ordered_json to_json() const
            {
                nlohmann::ordered_json j;
                j["command_line"] = command_line;
                j["config"] = config_text;
                j["config_hash"] = config_hash();
                j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
                j["version"] = std::string(version);
                j["outputs"] = nlohmann::ordered_json::array();
                for (const auto &o : outputs)
                    j["outputs"].push_back({{"path", o.path},
                                            {"bytes", o.content.size()},
                                            {"fnv1a64", hex64(fnv1a64(o.content))}});
                j["wall_time_s"] = wall_time_s;
                return j;
            }
        };

        inline std::string manifest_path(const std::string &output) { return output + ".manifest.json"; }

        inline void write_file(const std::string &path, const std::string &content)
        {
            std::ofstream f(path, std::ios::binary);
            if (!f)
                throw std::runtime_error("cannot write '" + path + "'");
            f << content;
            if (!f.flush())
                throw std::runtime_error("write failed for '" + path + "'");
        }

        // Writes content to path (plus its manifest), or to out when no path is given.
        inline void emit(const std::optional<std::string> &path, const std::string &content, RunManifest manifest,
                         std::chrono::steady_clock::time_point start, std::ostream &out)
        {
            if (!path)
            {
                out << content;
                return;
            }
            write_file(*path, content);
            manifest.outputs.push_back({*path, content});
            manifest.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            write_file(manifest_path(*path), manifest.to_json().dump(2) + "\n");
        }

        inline std::string join_command_line(int argc, const char *const *argv)
        {
            std::string s;
            for (int i = 0; i < argc; ++i)
            {
                if (i)
                    s += ' ';
                s += argv[i];
            }
            return s;
        }

        struct ArrayOptions
        {
            std::string kind;
            int n = 256;
            int nx = 16, ny = 16;
            double spacing = 0.0;
            std::string file;

            void add_to(CLI::App &app)
            {
                app.add_option("--array", kind, "array shape")->required()->check(CLI::IsMember({"ula", "upa", "file"}));
                app.add_option("--n", n, "element count (ula)")->capture_default_str();
                app.add_option("--nx", nx, "elements along x (upa)")->capture_default_str();
                app.add_option("--ny", ny, "elements along y (upa)")->capture_default_str();
                app.add_option("--spacing", spacing, "element spacing in meters, 0 for lambda/2")->capture_default_str();
                app.add_option("--file", file, "x,y,z csv (file)");
            }

            ArraySpec spec() const
            {
                if (kind == "ula" && n < 1)
                    throw UsageError("--n must be >= 1");
                if (kind == "upa" && (nx < 1 || ny < 1))
                    throw UsageError("--nx and --ny must be >= 1");
                if (kind == "file" && file.empty())
                    throw UsageError("--array file needs --file");
                if (!(spacing >= 0.0) || !std::isfinite(spacing))
                    throw UsageError("--spacing must be >= 0");
                return {kind, n, nx, ny, spacing, file};
            }

            void describe(std::map<std::string, std::string> &kv, double lambda) const
            {
                kv["array"] = kind;
                if (kind == "ula")
                    kv["n"] = std::to_string(n);
                if (kind == "upa")
                {
                    kv["nx"] = std::to_string(nx);
                    kv["ny"] = std::to_string(ny);
                }
                if (kind == "file")
                    kv["array_file"] = file;
                else
                    kv["spacing"] = format_shortest(spacing > 0.0 ? spacing : 0.5 * lambda);
            }
        };

        inline void require_lambda(double lambda)
        {
            if (!(lambda > 0.0) || !std::isfinite(lambda))
                throw UsageError("--lambda must be a positive finite number");
        }

        inline unsigned resolve_threads(const std::optional<unsigned> &threads)
        {
            if (!threads)
                return default_thread_count();
            if (*threads == 0)
                throw UsageError("--threads must be >= 1");
            return *threads;
        }

        inline void print_warnings(const std::vector<std::string> &warnings, std::ostream &err)
        {
            for (const auto &w : warnings)
                err << "warning: " << w << "\n";
        }

        inline std::string bench_csv(const BenchmarkReport &rep, std::uint64_t seed)
        {
            std::string csv = "strategy,model,p,trials,mean_rel_err,mean_correlations,seed\n";
            for (const auto &r : rep.rows)
                csv += std::string(to_string(r.strategy)) + "," + std::string(to_string(r.model)) + "," +
                       std::to_string(r.p) + "," + std::to_string(r.trials) + "," +
                       format_shortest(r.mean_relative_error) + "," + format_shortest(r.mean_correlations) + "," +
                       std::to_string(seed) + "\n";
            return csv;
        }

        inline std::string sweep_csv(const std::vector<SweepRow> &rows, double lambda)
        {
            std::string csv = "distance_m,distance_over_lambda,model,rmae\n";
            for (const auto &r : rows)
                csv += format_17g(r.distance) + "," + format_17g(r.distance / lambda) + "," +
                       std::string(to_string(r.model)) + "," + format_17g(r.rmae) + "\n";
            return csv;
        }

        inline BenchmarkConfig load_scenario(const std::optional<std::string> &preset_name,
                                             const std::optional<std::string> &config_path)
        {
            if (preset_name && config_path)
                throw UsageError("--preset and --config are mutually exclusive");
            try
            {
                if (config_path)
                    return load_benchmark_config(*config_path);
                return preset(preset_name ? *preset_name : "icassp-fig2");
            }
            catch (const std::exception &e)
            {
                throw UsageError(e.what());
            }
        }

        inline nlohmann::ordered_json estimate_json(const EstimationResult &r, const std::vector<Path> &truth,
                                                    const Eigen::VectorXcd &h)
        {
            using json = nlohmann::ordered_json;
            json j;
            j["selected"] = json::array();
            for (const auto &s : r.selected)
                j["selected"].push_back({{"direction_index", s.direction_index},
                                         {"distance_index", s.distance_index},
                                         {"azimuth_rad", std::atan2(s.direction.y(), s.direction.x())},
                                         {"direction", {s.direction.x(), s.direction.y(), s.direction.z()}},
                                         {"distance_m", s.distance ? json(*s.distance) : json(nullptr)},
                                         {"score", s.score}});
            j["alpha"] = json::array();
            for (Eigen::Index i = 0; i < r.alpha.size(); ++i)
                j["alpha"].push_back({r.alpha[i].real(), r.alpha[i].imag()});
            j["relative_error"] = relative_error(h, r.h_hat.entries);
            j["residual_norms"] = r.residual_norms;
            j["correlation_count"] = r.correlation_count;
            j["warnings"] = r.warnings;
            j["true_paths"] = json::array();
            for (const auto &p : truth)
                j["true_paths"].push_back({{"rho", p.rho},
                                           {"phi", p.phi},
                                           {"azimuth_rad", std::atan2(p.u_t.y(), p.u_t.x())},
                                           {"distance_m", p.distance}});
            return j;
        }
    }

    // Entry point of the wavefront tool. Returns 0 on success, 1 on runtime failure,
    // 2 on usage errors.
    inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        using namespace cli;
        const auto start = std::chrono::steady_clock::now();
        const std::string command_line = join_command_line(argc, argv);

        CLI::App app{"Wavefront models, validity analysis and channel estimation for large arrays", "wavefront"};
        app.require_subcommand(1);
        app.set_version_flag("--version", std::string(version));

        // validity-sweep
        auto *sweep = app.add_subcommand("validity-sweep", "rMAE of approximate models against a spherical wave");
        ArrayOptions sweep_array;
        sweep_array.add_to(*sweep);
        double sweep_lambda = 0.0;
        std::string sweep_models = "pwm,parwm";
        int sweep_points = 200;
        double sweep_min = 1.0, sweep_max = 1e5;
        std::optional<std::string> sweep_out;
        std::optional<unsigned> sweep_threads;
        sweep->add_option("--lambda", sweep_lambda, "wavelength in meters")->required();
        sweep->add_option("--models", sweep_models, "comma separated: pwm, parwm, swm")->capture_default_str();
        sweep->add_option("--points", sweep_points, "log-spaced distances")->capture_default_str();
        sweep->add_option("--min-distance", sweep_min, "smallest distance in wavelengths")->capture_default_str();
        sweep->add_option("--max-distance", sweep_max, "largest distance in wavelengths")->capture_default_str();
        sweep->add_option("--out", sweep_out, "CSV path (stdout when omitted)");
        sweep->add_option("--threads", sweep_threads, "worker threads (default: WAVEFRONT_THREADS or 1)");

        // bench
        auto *bench = app.add_subcommand("bench", "Monte-Carlo comparison of estimation strategies");
        std::optional<std::string> bench_preset, bench_config, bench_out;
        std::optional<std::uint64_t> bench_seed;
        std::optional<int> bench_trials, bench_p_max;
        std::optional<double> bench_snr;
        std::optional<unsigned> bench_threads;
        bench->add_option("--preset", bench_preset, "built-in scenario")->check(CLI::IsMember(preset_names()));
        bench->add_option("--config", bench_config, "scenario key = value file");
        bench->add_option("--seed", bench_seed, "master seed")->required();
        bench->add_option("--trials", bench_trials, "Monte-Carlo trials");
        bench->add_option("--snr-db", bench_snr, "signal to noise ratio in dB");
        bench->add_option("--p-max", bench_p_max, "report p = 1..p-max");
        bench->add_option("--out", bench_out, "CSV path (stdout when omitted)");
        bench->add_option("--threads", bench_threads, "worker threads (default: WAVEFRONT_THREADS or 1)");

        // estimate
        auto *est = app.add_subcommand("estimate", "estimate one random channel");
        std::optional<std::string> est_preset, est_config, est_model, est_out;
        std::string est_strategy;
        int est_paths = 0;
        std::uint64_t est_seed = 0;
        std::optional<double> est_snr;
        est->add_option("--preset", est_preset, "built-in scenario")->check(CLI::IsMember(preset_names()));
        est->add_option("--config", est_config, "scenario key = value file");
        est->add_option("--strategy", est_strategy, "pwm, joint or seq")->required();
        est->add_option("--model", est_model, "pwm, parwm or swm (default: pwm for the pwm strategy, swm otherwise)");
        est->add_option("--paths", est_paths, "number of greedy iterations p")->required();
        est->add_option("--seed", est_seed, "scenario seed")->required();
        est->add_option("--snr-db", est_snr, "signal to noise ratio in dB");
        est->add_option("--out", est_out, "JSON path (stdout when omitted)");

        // boundaries
        auto *bounds = app.add_subcommand("boundaries", "aperture radius, Fraunhofer and Fresnel distances");
        ArrayOptions bounds_array;
        bounds_array.add_to(*bounds);
        double bounds_lambda = 0.0;
        bounds->add_option("--lambda", bounds_lambda, "wavelength in meters")->required();

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? ok : usage_error;
        }

        try
        {
            if (*sweep)
            {
                require_lambda(sweep_lambda);
                const ArraySpec spec = sweep_array.spec();
                if (sweep_points < 1)
                    throw UsageError("--points must be >= 1");
                if (!(sweep_min > 0.0) || !(sweep_max >= sweep_min) || !std::isfinite(sweep_max))
                    throw UsageError("need 0 < --min-distance <= --max-distance");
                std::vector<WaveModel> models;
                try
                {
                    for (const auto &m : split_list(sweep_models))
                        models.push_back(parse_wave_model(m));
                }
                catch (const std::exception &e)
                {
                    throw UsageError(e.what());
                }
                if (models.empty())
                    throw UsageError("--models is empty");
                const unsigned threads = resolve_threads(sweep_threads);

                std::vector<std::string> warnings;
                SweepConfig cfg{spec.build(sweep_lambda, &warnings), models, sweep_lambda,
                                log_space(sweep_min * sweep_lambda, sweep_max * sweep_lambda, sweep_points),
                                std::nullopt, {}, threads};
                cfg.search = default_search(cfg.array);
                print_warnings(warnings, err);

                std::map<std::string, std::string> kv;
                sweep_array.describe(kv, sweep_lambda);
                kv["command"] = "validity-sweep";
                kv["lambda"] = format_shortest(sweep_lambda);
                std::string ms;
                for (auto m : models)
                    ms += (ms.empty() ? "" : ",") + std::string(to_string(m));
                kv["models"] = ms;
                kv["points"] = std::to_string(sweep_points);
                kv["min_distance_wavelengths"] = format_shortest(sweep_min);
                kv["max_distance_wavelengths"] = format_shortest(sweep_max);

                const std::string csv = sweep_csv(rmae_curve(cfg), sweep_lambda);
                emit(sweep_out, csv, RunManifest{command_line, canonical_text(kv), std::nullopt, {}, 0.0}, start, out);
                return ok;
            }

            if (*bench)
            {
                BenchmarkConfig cfg = load_scenario(bench_preset, bench_config);
                cfg.scenario.seed = *bench_seed;
                if (bench_trials)
                {
                    if (*bench_trials < 1)
                        throw UsageError("--trials must be >= 1");
                    cfg.trials = *bench_trials;
                }
                if (bench_snr)
                {
                    if (!std::isfinite(*bench_snr))
                        throw UsageError("--snr-db must be finite");
                    cfg.scenario.snr_db = *bench_snr;
                }
                if (bench_p_max)
                {
                    if (*bench_p_max < 1)
                        throw UsageError("--p-max must be >= 1");
                    cfg.p_values.clear();
                    for (int p = 1; p <= *bench_p_max; ++p)
                        cfg.p_values.push_back(p);
                }
                cfg.threads = resolve_threads(bench_threads);

                const BenchmarkReport rep = run_benchmark(cfg);
                if (rep.monotone_runs != rep.runs)
                    err << "warning: residual norm increased in " << (rep.runs - rep.monotone_runs) << " of "
                        << rep.runs << " runs\n";
                emit(bench_out, bench_csv(rep, cfg.scenario.seed),
                     RunManifest{command_line, canonical_text(cfg), cfg.scenario.seed, {}, 0.0}, start, out);
                return ok;
            }

            if (*est)
            {
                BenchmarkConfig cfg = load_scenario(est_preset, est_config);
                cfg.scenario.seed = est_seed;
                if (est_snr)
                {
                    if (!std::isfinite(*est_snr))
                        throw UsageError("--snr-db must be finite");
                    cfg.scenario.snr_db = *est_snr;
                }
                EstimatorSpec spec;
                try
                {
                    spec.strategy = parse_strategy(est_strategy);
                    spec.model = est_model ? parse_wave_model(*est_model)
                                           : (spec.strategy == Strategy::Plane ? WaveModel::Plane : WaveModel::Spherical);
                    validate_estimator(spec);
                }
                catch (const std::exception &e)
                {
                    throw UsageError(e.what());
                }
                if (est_paths < 1)
                    throw UsageError("--paths must be >= 1");
                cfg.scenario.validate();
                cfg.estimators = {spec};
                cfg.p_values = {est_paths};

                std::vector<std::string> warnings;
                const EstimationGrids grids(cfg.scenario.array.build(cfg.scenario.lambda, &warnings), cfg,
                                            spec.model == WaveModel::Parabolic, spec.model == WaveModel::Spherical);
                print_warnings(warnings, err);
                // Same draw as trial 0 of "bench --seed <seed>"
                const TrialData data = make_trial(cfg.scenario, grids, child_seed(cfg.scenario.seed, 0));
                const EstimationResult r =
                    greedy_estimate(data.y, grids.obs, grids.for_model(spec.model), spec.strategy, est_paths);
                print_warnings(r.warnings, err);
                emit(est_out, estimate_json(r, data.paths, data.h).dump(2) + "\n",
                     RunManifest{command_line, canonical_text(cfg), cfg.scenario.seed, {}, 0.0}, start, out);
                return ok;
            }

            if (*bounds)
            {
                require_lambda(bounds_lambda);
                std::vector<std::string> warnings;
                const AntennaArray array = bounds_array.spec().build(bounds_lambda, &warnings);
                print_warnings(warnings, err);
                const double r = array.aperture_radius();
                const double lam = bounds_lambda;
                out << "quantity,meters,wavelengths\n";
                out << "aperture_radius," << format_shortest(r) << "," << format_shortest(r / lam) << "\n";
                const double fh = fraunhofer_distance(r, lam), fr = fresnel_distance(r, lam);
                out << "fraunhofer," << format_shortest(fh) << "," << format_shortest(fh / lam) << "\n";
                out << "fresnel," << format_shortest(fr) << "," << format_shortest(fr / lam) << "\n";
                return ok;
            }
        }
        catch (const UsageError &e)
        {
            err << "error: " << e.what() << "\n";
            err << "Run with --help for more information.\n";
            return usage_error;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << "\n";
            return runtime_failure;
        }
        return usage_error;
    }

    inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        std::vector<const char *> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("wavefront");
        for (const auto &a : args)
            argv.push_back(a.c_str());
        return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    }
}

#endif
