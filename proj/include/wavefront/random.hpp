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

#ifndef WAVEFRONT_RANDOM_HPP
#define WAVEFRONT_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <limits>
#include <random>

namespace wavefront
{
    // SplitMix64 finalizer, used to derive independent child seeds.
    inline constexpr std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    inline constexpr std::uint64_t child_seed(std::uint64_t master, std::uint64_t index)
    {
        return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
    }

    // Random stream with platform-independent output.
    //
    // std::mt19937_64 is fully specified by the standard but the std::*_distribution
    // classes are not, so every variate below is derived from raw engine output.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        std::uint64_t next_u64() { return engine_(); }

        // Uniform in [0, 1) with 53 random bits
        double uniform()
        {
            return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        }

        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

        // Uniform integer in [lo, hi], rejection sampling without modulo bias
        std::int64_t uniform_int(std::int64_t lo, std::int64_t hi)
        {
            const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
            if (span == 0)
                return static_cast<std::int64_t>(engine_());
            const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % span);
            std::uint64_t x;
            do
                x = engine_();
            while (x >= limit);
            return lo + static_cast<std::int64_t>(x % span);
        }

        // Standard normal via Box-Muller; the second variate of each pair is cached.
        double normal()
        {
            if (has_spare_)
            {
                has_spare_ = false;
                return spare_;
            }
            double u1 = uniform();
            while (u1 <= 0.0)
                u1 = uniform();
            const double u2 = uniform();
            const double r = std::sqrt(-2.0 * std::log(u1));
            const double t = 2.0 * std::numbers::pi * u2;
            spare_ = r * std::sin(t);
            has_spare_ = true;
            return r * std::cos(t);
        }

        // Rayleigh with scale sigma (mode sigma), inverse CDF
        double rayleigh(double sigma)
        {
            return sigma * std::sqrt(-2.0 * std::log1p(-uniform()));
        }

    private:
        std::mt19937_64 engine_;
        bool has_spare_ = false;
        double spare_ = 0.0;
    };
}

#endif
