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

#ifndef WAVEFRONT_CONFIG_HPP
#define WAVEFRONT_CONFIG_HPP

#include "io.hpp"
#include "scenario.hpp"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wavefront
{
    // Key/value form of a benchmark configuration. Angles are in degrees.
    //
    //   array = ula | upa | file     n, nx, ny, spacing, array_file
    //   lambda, d_los, beta_min_deg, beta_max_deg, nlos_min, nlos_max,
    //   max_path_length_factor, rayleigh_sigma, snr_db, seed
    //   n_directions, n_distances, distance_min, distance_max, trials
    //   p_values = 1,2,3   estimators = pwm/pwm, joint/swm, seq/parwm
    namespace detail
    {
        inline constexpr double deg = std::numbers::pi / 180.0;

        // radians to degrees, 15 significant digits so that pi / 3 prints as 60
        inline std::string degrees_text(double rad)
        {
            std::array<char, 64> buf{};
            const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), rad / deg, std::chars_format::general, 15);
            return std::string(buf.data(), r.ptr);
        }

        inline std::vector<int> parse_int_list(std::string_view s, std::string_view what)
        {
            std::vector<int> out;
            for (const auto &item : split_list(s))
                out.push_back(static_cast<int>(parse_int(item, what)));
            if (out.empty())
                throw std::invalid_argument(std::string(what) + ": empty list");
            return out;
        }

        inline std::vector<EstimatorSpec> parse_estimators(std::string_view s)
        {
            std::vector<EstimatorSpec> out;
            for (const auto &item : split_list(s))
            {
                const auto slash = item.find('/');
                if (slash == std::string::npos)
                    throw std::invalid_argument("estimators: expected strategy/model, got '" + item + "'");
                EstimatorSpec e{parse_strategy(trim(std::string_view(item).substr(0, slash))),
                                parse_wave_model(trim(std::string_view(item).substr(slash + 1)))};
                validate_estimator(e);
                out.push_back(e);
            }
            if (out.empty())
                throw std::invalid_argument("estimators: empty list");
            return out;
        }
    }

    inline void apply_key_values(BenchmarkConfig &cfg, const std::map<std::string, std::string> &kv)
    {
        auto &sc = cfg.scenario;
        for (const auto &[key, value] : kv)
        {
            const auto as_int = [&] { return static_cast<int>(parse_int(value, key)); };
            const auto as_double = [&] { return parse_double(value, key); };
            if (key == "array")
                sc.array.kind = value;
            else if (key == "n")
                sc.array.n = as_int();
            else if (key == "nx")
                sc.array.nx = as_int();
            else if (key == "ny")
                sc.array.ny = as_int();
            else if (key == "spacing")
                sc.array.spacing = as_double();
            else if (key == "array_file")
                sc.array.file = value;
            else if (key == "lambda")
                sc.lambda = as_double();
            else if (key == "d_los")
                sc.d_los = as_double();
            else if (key == "beta_min_deg")
                sc.beta_min = as_double() * detail::deg;
            else if (key == "beta_max_deg")
                sc.beta_max = as_double() * detail::deg;
            else if (key == "nlos_min")
                sc.nlos_min = as_int();
            else if (key == "nlos_max")
                sc.nlos_max = as_int();
            else if (key == "max_path_length_factor")
                sc.max_path_length_factor = as_double();
            else if (key == "rayleigh_sigma")
                sc.rayleigh_sigma = as_double();
            else if (key == "snr_db")
                sc.snr_db = as_double();
            else if (key == "seed")
            {
                const long long s = parse_int(value, key);
                if (s < 0)
                    throw std::invalid_argument("seed must be >= 0");
                sc.seed = static_cast<std::uint64_t>(s);
            }
            else if (key == "n_directions")
                cfg.n_directions = as_int();
            else if (key == "n_distances")
                cfg.n_distances = as_int();
            else if (key == "distance_min")
                cfg.distance_min = as_double();
            else if (key == "distance_max")
                cfg.distance_max = as_double();
            else if (key == "trials")
                cfg.trials = as_int();
            else if (key == "p_values")
                cfg.p_values = detail::parse_int_list(value, key);
            else if (key == "estimators")
                cfg.estimators = detail::parse_estimators(value);
            else
                throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }

    inline std::map<std::string, std::string> to_key_values(const BenchmarkConfig &cfg)
    {
        const auto &sc = cfg.scenario;
        std::map<std::string, std::string> kv;
        kv["array"] = sc.array.kind;
        if (sc.array.kind == "ula")
            kv["n"] = std::to_string(sc.array.n);
        if (sc.array.kind == "upa")
        {
            kv["nx"] = std::to_string(sc.array.nx);
            kv["ny"] = std::to_string(sc.array.ny);
        }
        if (sc.array.kind == "file")
            kv["array_file"] = sc.array.file;
        else
            kv["spacing"] = format_shortest(sc.array.spacing > 0.0 ? sc.array.spacing : 0.5 * sc.lambda);
        kv["lambda"] = format_shortest(sc.lambda);
        kv["d_los"] = format_shortest(sc.d_los);
        kv["beta_min_deg"] = detail::degrees_text(sc.beta_min);
        kv["beta_max_deg"] = detail::degrees_text(sc.beta_max);
        kv["nlos_min"] = std::to_string(sc.nlos_min);
        kv["nlos_max"] = std::to_string(sc.nlos_max);
        kv["max_path_length_factor"] = format_shortest(sc.max_path_length_factor);
        kv["rayleigh_sigma"] = format_shortest(sc.rayleigh_sigma);
        kv["snr_db"] = format_shortest(sc.snr_db);
        kv["seed"] = std::to_string(sc.seed);
        kv["n_directions"] = std::to_string(cfg.n_directions);
        kv["n_distances"] = std::to_string(cfg.n_distances);
        kv["distance_min"] = format_shortest(cfg.distance_min);
        kv["distance_max"] = format_shortest(cfg.distance_max);
        kv["trials"] = std::to_string(cfg.trials);
        std::string ps;
        for (int p : cfg.p_values)
            ps += (ps.empty() ? "" : ",") + std::to_string(p);
        kv["p_values"] = ps;
        std::string es;
        for (const auto &e : cfg.estimators)
            es += (es.empty() ? "" : ",") + std::string(to_string(e.strategy)) + "/" + std::string(to_string(e.model));
        kv["estimators"] = es;
        return kv;
    }

    inline std::string canonical_text(const BenchmarkConfig &cfg) { return canonical_text(to_key_values(cfg)); }

    inline std::string config_hash(const BenchmarkConfig &cfg) { return hex64(fnv1a64(canonical_text(cfg))); }

    inline BenchmarkConfig parse_benchmark_config(std::string_view text)
    {
        BenchmarkConfig cfg;
        apply_key_values(cfg, parse_key_values(text));
        return cfg;
    }

    inline BenchmarkConfig load_benchmark_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open config '" + path + "'");
        BenchmarkConfig cfg;
        apply_key_values(cfg, parse_key_values(in));
        // relative array files are looked up next to the config
        auto &file = cfg.scenario.array.file;
        if (!file.empty() && std::filesystem::path(file).is_relative())
            file = (std::filesystem::path(path).parent_path() / file).lexically_normal().string();
        return cfg;
    }

    inline const std::vector<std::string> &preset_names()
    {
        static const std::vector<std::string> names{"icassp-fig2"};
        return names;
    }

    // Uniform linear array of 256 elements at half wavelength, 30 GHz carrier,
    // LoS at 20 m plus up to five Rayleigh NLoS paths, 10 dB SNR.
    inline BenchmarkConfig preset(std::string_view name)
    {
        if (name == "icassp-fig2")
            return BenchmarkConfig{};
        throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
    }
}

#endif
