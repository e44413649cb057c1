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

#ifndef WAVEFRONT_VALIDITY_HPP
#define WAVEFRONT_VALIDITY_HPP

#include "geometry.hpp"
#include "parallel.hpp"
#include "wavemodels.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wavefront
{
    // Far-field boundary 8 R^2 / lambda (plane-wave phase error <= pi/8)
    inline double fraunhofer_distance(double aperture_radius, double lambda)
    {
        if (!(aperture_radius >= 0.0) || !(lambda > 0.0))
            throw std::invalid_argument("fraunhofer_distance: need R >= 0 and lambda > 0");
        return 8.0 * aperture_radius * aperture_radius / lambda;
    }

    // Boundary sqrt(8 R^3 / lambda) (parabolic-wave phase error <= pi/8)
    inline double fresnel_distance(double aperture_radius, double lambda)
    {
        if (!(aperture_radius >= 0.0) || !(lambda > 0.0))
            throw std::invalid_argument("fresnel_distance: need R >= 0 and lambda > 0");
        return std::sqrt(8.0 * aperture_radius * aperture_radius * aperture_radius / lambda);
    }

    // max_j 2pi/lambda |delta_SWM,j - delta_model,j|
    inline double max_phase_error(WaveModel model, const AntennaArray &array, const Vec3 &u_t, double distance,
                                  double lambda)
    {
        detail::require_positive(lambda, "lambda");
        detail::require_positive(distance, "distance");
        if (model == WaveModel::Spherical)
            return 0.0;
        const double k = 2.0 * std::numbers::pi / lambda;
        double worst = 0.0;
        for (const Vec3 &a : array.positions())
        {
            const double exact = delta_miso(WaveModel::Spherical, a, u_t, distance);
            const double approx = delta_miso(model, a, u_t, distance);
            worst = std::max(worst, k * std::abs(exact - approx));
        }
        return worst;
    }

    // How candidate directions are parametrized during a projection search.
    //   Azimuth    - u = (c, sqrt(1 - c^2), 0), c = cos(azimuth) in [-1, 1]; complete for arrays on the x axis
    //   Hemisphere - azimuth in [0, 2pi), elevation in [0, pi/2]; complete for arrays in the x-y plane
    //   Sphere     - azimuth in [0, 2pi), elevation in [-pi/2, pi/2]
    enum class DirectionDomain
    {
        Azimuth,
        Hemisphere,
        Sphere
    };

    struct SearchSettings
    {
        DirectionDomain domain = DirectionDomain::Azimuth;
        int direction_points = 64;        // coarse points per angular dimension, at least
        bool resolve_aperture = true;     // densify the angular grid to about half a beamwidth
        int distance_points = 64;         // coarse points in inverse distance, at least
        bool resolve_curvature = true;    // densify the inverse-distance grid to the array's focusing resolution
        double min_distance_wavelengths = 1.0;
        double max_distance_wavelengths = std::numeric_limits<double>::infinity(); // puts s = 1/D = 0 on the grid
        int candidates = 4;               // coarse maxima refined independently
        int min_levels = 3;
        int max_levels = 12;
        double shrink = 8.0;              // cell size reduction per refinement level
        int local_half_width = 4;         // local grid is (2m+1) points per dimension
        double tolerance = 1e-12;         // stop after two consecutive levels improving rMAE by less than this
    };

    struct ProjectionResult
    {
        Vec3 best_u_t = Vec3::UnitY();
        std::optional<double> best_distance; // absent for the plane model, infinite at the plane limit
        std::complex<double> best_gain;      // e^H h, the optimal coefficient for the unit atom
        double rmae = 1.0;
        double coarse_rmae = 1.0;            // best point of the coarse grid, before refinement
        int iterations = 0;                  // refinement levels run on the winning candidate
        long evaluations = 0;                // atoms correlated in total
    };

    namespace detail
    {
        struct Axis
        {
            double lo = 0.0;
            double hi = 0.0;
            bool periodic = false;
            int points = 1;

            double step() const
            {
                if (points <= 1)
                    return hi - lo;
                return periodic ? (hi - lo) / points : (hi - lo) / (points - 1);
            }
            double at(int i) const { return lo + step() * i; }
            double clamp(double v) const
            {
                if (periodic)
                {
                    const double span = hi - lo;
                    v = std::fmod(v - lo, span);
                    if (v < 0.0)
                        v += span;
                    return lo + v;
                }
                return std::clamp(v, lo, hi);
            }
        };

        // Correlates one fixed channel against model atoms: |e^H h|^2 with ||e|| = 1.
        class Correlator
        {
        public:
            Correlator(const AntennaArray &array, const Eigen::VectorXcd &h, double lambda)
                : k_(2.0 * std::numbers::pi / lambda), inv_n_(1.0 / static_cast<double>(array.size())),
                  h_(h)
            {
                const auto n = array.size();
                if (static_cast<std::size_t>(h.size()) != n)
                    throw std::invalid_argument("channel length does not match the array size");
                pos_.resize(n);
                norm2_.resize(n);
                for (std::size_t j = 0; j < n; ++j)
                {
                    pos_[j] = array[j];
                    norm2_[j] = array[j].squaredNorm();
                }
                proj_.resize(n);
            }

            void set_direction(const Vec3 &u)
            {
                for (std::size_t j = 0; j < pos_.size(); ++j)
                    proj_[j] = pos_[j].dot(u);
            }

            // Correlation with the atom at the direction last passed to set_direction
            std::complex<double> inner(WaveModel model, double distance)
            {
                ++evaluations;
                double re = 0.0, im = 0.0;
                for (std::size_t j = 0; j < pos_.size(); ++j)
                {
                    const double phase = k_ * excess_from_projection(model, proj_[j], norm2_[j], distance);
                    const double c = std::cos(phase), s = std::sin(phase);
                    const auto hj = h_[static_cast<Eigen::Index>(j)];
                    // conj(e_j) h_j with conj(e_j) = exp(+j phase)/sqrt(N)
                    re += c * hj.real() - s * hj.imag();
                    im += c * hj.imag() + s * hj.real();
                }
                return {re * std::sqrt(inv_n_), im * std::sqrt(inv_n_)};
            }

            double score(WaveModel model, double distance) { return std::norm(inner(model, distance)); }

            // Scores of parabolic atoms at curvatures s0 + m*ds, m < count (s = 1/D), for the
            // current direction. The parabolic phase is affine in s, so each step is one
            // complex rotation per antenna; exact phasors are recomputed every 1024 steps.
            // Single precision is enough here: these scores only rank coarse cells.
            void scan_parabolic(double s0, double ds, int count, double *out)
            {
                const std::size_t n = pos_.size();
                re_.resize(n);
                im_.resize(n);
                wr_.resize(n);
                wi_.resize(n);
                for (std::size_t j = 0; j < n; ++j)
                {
                    const double step = 0.5 * k_ * (norm2_[j] - proj_[j] * proj_[j]) * ds;
                    wr_[j] = static_cast<float>(std::cos(step));
                    wi_[j] = static_cast<float>(std::sin(step));
                }
                float *re = re_.data(), *im = im_.data();
                const float *wr = wr_.data(), *wi = wi_.data();
                for (int m = 0; m < count; ++m)
                {
                    if (m % 1024 == 0)
                    {
                        const double s = s0 + m * ds;
                        for (std::size_t j = 0; j < n; ++j)
                        {
                            const double phase = k_ * (-proj_[j] + 0.5 * (norm2_[j] - proj_[j] * proj_[j]) * s);
                            const double c = std::cos(phase), sn = std::sin(phase);
                            const auto hj = h_[static_cast<Eigen::Index>(j)];
                            re[j] = static_cast<float>(c * hj.real() - sn * hj.imag());
                            im[j] = static_cast<float>(c * hj.imag() + sn * hj.real());
                        }
                    }
                    else
                    {
                        for (std::size_t j = 0; j < n; ++j)
                        {
                            const float r = re[j] * wr[j] - im[j] * wi[j];
                            im[j] = re[j] * wi[j] + im[j] * wr[j];
                            re[j] = r;
                        }
                    }
                    // lane-wise partial sums keep the reduction vectorizable
                    std::array<float, 16> ar{}, ai{};
                    std::size_t j = 0;
                    for (; j + 16 <= n; j += 16)
                        for (std::size_t l = 0; l < 16; ++l)
                        {
                            ar[l] += re[j + l];
                            ai[l] += im[j + l];
                        }
                    double sr = 0.0, si = 0.0;
                    for (; j < n; ++j)
                    {
                        sr += re[j];
                        si += im[j];
                    }
                    for (std::size_t l = 0; l < 16; ++l)
                    {
                        sr += ar[l];
                        si += ai[l];
                    }
                    out[m] = (sr * sr + si * si) * inv_n_;
                }
                evaluations += count;
            }

            long evaluations = 0;

        private:
            double k_;
            double inv_n_;
            const Eigen::VectorXcd &h_;
            std::vector<Vec3> pos_;
            std::vector<double> norm2_;
            std::vector<double> proj_;
            std::vector<float> re_, im_, wr_, wi_;
        };

        inline Vec3 domain_direction(DirectionDomain domain, double a, double b)
        {
            if (domain == DirectionDomain::Azimuth)
                return {a, std::sqrt(std::max(0.0, 1.0 - a * a)), 0.0};
            return spherical_direction(a, b);
        }

        struct SearchSpace
        {
            WaveModel model;
            DirectionDomain domain;
            std::vector<Axis> axes; // angular axes, then inverse distance when the model uses it

            int angular_dims() const { return domain == DirectionDomain::Azimuth ? 1 : 2; }
            bool has_distance() const { return uses_distance(model); }

            Vec3 direction(const std::vector<double> &q) const
            {
                return domain_direction(domain, q[0], angular_dims() > 1 ? q[1] : 0.0);
            }
            double distance(const std::vector<double> &q) const
            {
                return has_distance() ? 1.0 / q[static_cast<std::size_t>(angular_dims())] : 1.0;
            }
        };

        inline SearchSpace make_space(WaveModel model, const AntennaArray &array, double lambda,
                                      const SearchSettings &s)
        {
            SearchSpace sp{model, s.domain, {}};
            const double pi = std::numbers::pi;
            const double r = array.aperture_radius();
            auto count = [&](double span)
            {
                int n = std::max(2, s.direction_points);
                if (s.resolve_aperture && r > 0.0)
                    n = std::max(n, static_cast<int>(std::ceil(span / (lambda / (2.0 * r)))) + 1);
                return n;
            };
            switch (s.domain)
            {
            case DirectionDomain::Azimuth:
                sp.axes.push_back({-1.0, 1.0, false, count(2.0)});
                break;
            case DirectionDomain::Hemisphere:
                sp.axes.push_back({0.0, 2.0 * pi, true, count(2.0 * pi)});
                sp.axes.push_back({0.0, 0.5 * pi, false, count(0.5 * pi)});
                break;
            case DirectionDomain::Sphere:
                sp.axes.push_back({0.0, 2.0 * pi, true, count(2.0 * pi)});
                sp.axes.push_back({-0.5 * pi, 0.5 * pi, false, count(pi)});
                break;
            }
            if (uses_distance(model))
            {
                if (!(s.min_distance_wavelengths > 0.0) || !(s.max_distance_wavelengths > s.min_distance_wavelengths))
                    throw std::invalid_argument("search settings: invalid distance range");
                const double lo = 1.0 / (s.max_distance_wavelengths * lambda);
                const double hi = 1.0 / (s.min_distance_wavelengths * lambda);
                int n = std::max(2, s.distance_points);
                // neighbouring atoms differ by at most pi of focusing phase at the array edge
                if (s.resolve_curvature && r > 0.0)
                    n = std::max(n, static_cast<int>(std::ceil((hi - lo) / (lambda / (r * r)))) + 1);
                sp.axes.push_back({lo, hi, false, n});
            }
            return sp;
        }

        struct Candidate
        {
            std::vector<int> cell;
            double score;
        };

        inline double evaluate(Correlator &corr, const SearchSpace &sp, const std::vector<double> &q)
        {
            corr.set_direction(sp.direction(q));
            return corr.score(sp.model, sp.distance(q));
        }

        // Multi-level local grid search around q. Each level uses a (2m+1)^d grid whose
        // spacing is the previous one divided by `shrink`; the grid is re-centered
        // while the best point sits on its border.
        inline double refine(Correlator &corr, const SearchSpace &sp, const SearchSettings &s,
                             std::vector<double> &q, double score, double energy, int &levels)
        {
            const std::size_t dims = sp.axes.size();
            const int m = std::max(1, s.local_half_width);
            const int side = 2 * m + 1;
            std::size_t total = 1;
            for (std::size_t d = 0; d < dims; ++d)
                total *= static_cast<std::size_t>(side);

            std::vector<double> spacing(dims);
            for (std::size_t d = 0; d < dims; ++d)
                spacing[d] = sp.axes[d].step();

            double prev_rmae = 1.0 - score / energy;
            int flat_levels = 0;
            levels = 0;
            std::vector<double> trial(dims);
            std::vector<int> offs(dims);
            for (int level = 1; level <= s.max_levels; ++level)
            {
                for (auto &h : spacing)
                    h /= s.shrink;
                for (int moves = 0; moves < 64; ++moves)
                {
                    std::vector<double> best_q = q;
                    double best = score;
                    bool on_border = false;
                    for (std::size_t flat = 0; flat < total; ++flat)
                    {
                        std::size_t rem = flat;
                        bool centre = true;
                        for (std::size_t d = 0; d < dims; ++d)
                        {
                            offs[d] = static_cast<int>(rem % static_cast<std::size_t>(side)) - m;
                            rem /= static_cast<std::size_t>(side);
                            centre = centre && offs[d] == 0;
                            trial[d] = sp.axes[d].clamp(q[d] + offs[d] * spacing[d]);
                        }
                        if (centre)
                            continue;
                        const double v = evaluate(corr, sp, trial);
                        if (v > best)
                        {
                            best = v;
                            best_q = trial;
                            on_border = false;
                            for (std::size_t d = 0; d < dims; ++d)
                                on_border = on_border || std::abs(offs[d]) == m;
                        }
                    }
                    const bool moved = best > score;
                    q = best_q;
                    score = best;
                    if (!moved || !on_border)
                        break;
                }
                levels = level;
                const double rmae = 1.0 - score / energy;
                const double gain = prev_rmae - rmae;
                prev_rmae = rmae;
                // a level can gain nothing when the optimum sits next to the centre,
                // so one flat level is not taken as convergence
                flat_levels = gain < s.tolerance ? flat_levels + 1 : 0;
                if (level >= s.min_levels && flat_levels >= 2)
                    break;
            }
            return score;
        }
    }

    // Best single-atom approximation of h within a model class.
    //
    // Since atoms have unit norm, the optimal coefficient is e^H h and
    // rMAE = 1 - max |e^H h|^2 / ||h||^2. The maximum is located by a coarse
    // grid over (direction, inverse distance) followed by local refinement of the
    // strongest separated coarse maxima.
    inline ProjectionResult project_single_path(const ChannelVector &h, WaveModel model, const AntennaArray &array,
                                                double lambda, const SearchSettings &settings)
    {
        detail::require_positive(lambda, "lambda");
        const double energy = h.entries.squaredNorm();
        if (!(energy > 0.0))
            throw std::invalid_argument("project_single_path: channel must be non-zero");

        const detail::SearchSpace sp = detail::make_space(model, array, lambda, settings);
        detail::Correlator corr(array, h.entries, lambda);

        const std::size_t dims = sp.axes.size();
        const int n_ang0 = sp.axes[0].points;
        const int n_ang1 = sp.angular_dims() > 1 ? sp.axes[1].points : 1;
        const int n_dist = sp.has_distance() ? sp.axes.back().points : 1;

        // coarse grid, stored direction-major
        std::vector<double> coarse(static_cast<std::size_t>(n_ang0) * n_ang1 * n_dist);
        for (int i0 = 0; i0 < n_ang0; ++i0)
            for (int i1 = 0; i1 < n_ang1; ++i1)
            {
                corr.set_direction(detail::domain_direction(sp.domain, sp.axes[0].at(i0),
                                                            sp.angular_dims() > 1 ? sp.axes[1].at(i1) : 0.0));
                double *row = coarse.data() + (static_cast<std::size_t>(i0) * n_ang1 + i1) * n_dist;
                if (model == WaveModel::Parabolic)
                {
                    const auto &ax = sp.axes.back();
                    corr.scan_parabolic(ax.lo, ax.step(), n_dist, row);
                }
                else
                    for (int id = 0; id < n_dist; ++id)
                        row[id] = corr.score(model, sp.has_distance() ? 1.0 / sp.axes.back().at(id) : 1.0);
            }

        auto cell_of = [&](std::size_t flat)
        {
            std::vector<int> c;
            const int id = static_cast<int>(flat % n_dist);
            const std::size_t rest = flat / n_dist;
            c.push_back(static_cast<int>(rest / n_ang1));
            if (sp.angular_dims() > 1)
                c.push_back(static_cast<int>(rest % n_ang1));
            if (sp.has_distance())
                c.push_back(id);
            return c;
        };

        std::vector<std::size_t> order(coarse.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return coarse[a] > coarse[b]; });

        // strongest coarse points, at least two cells apart in some dimension
        std::vector<detail::Candidate> picks;
        const int wanted = std::max(1, settings.candidates);
        for (std::size_t idx : order)
        {
            if (static_cast<int>(picks.size()) >= wanted)
                break;
            auto c = cell_of(idx);
            bool separated = true;
            for (const auto &p : picks)
            {
                bool near = true;
                for (std::size_t d = 0; d < dims; ++d)
                {
                    int gap = std::abs(c[d] - p.cell[d]);
                    if (sp.axes[d].periodic)
                        gap = std::min(gap, sp.axes[d].points - gap);
                    near = near && gap <= 2;
                }
                if (near)
                {
                    separated = false;
                    break;
                }
            }
            if (separated)
                picks.push_back({std::move(c), coarse[idx]});
        }

        // Also refine from the best far-field cell so curved models never lose to the plane model.
        if (sp.has_distance())
        {
            std::size_t far = 0;
            for (std::size_t i = 0; i < coarse.size(); i += static_cast<std::size_t>(n_dist))
                if (coarse[i] > coarse[far])
                    far = i;
            auto c = cell_of(far);
            const bool known = std::any_of(picks.begin(), picks.end(), [&](const auto &p) { return p.cell == c; });
            if (!known)
                picks.push_back({std::move(c), coarse[far]});
        }

        ProjectionResult best;
        best.coarse_rmae = std::clamp(1.0 - picks.front().score / energy, 0.0, 1.0);
        double best_score = -1.0;
        std::vector<double> best_q;
        for (const auto &pick : picks)
        {
            std::vector<double> q(dims);
            for (std::size_t d = 0; d < dims; ++d)
                q[d] = sp.axes[d].at(pick.cell[d]);
            int levels = 0;
            // coarse parabolic scores are single precision, so the start is re-scored
            const double start = detail::evaluate(corr, sp, q);
            const double s = detail::refine(corr, sp, settings, q, start, energy, levels);
            if (s > best_score)
            {
                best_score = s;
                best_q = q;
                best.iterations = levels;
            }
        }

        best.best_u_t = sp.direction(best_q);
        if (sp.has_distance())
            best.best_distance = sp.distance(best_q);
        corr.set_direction(best.best_u_t);
        best.best_gain = corr.inner(model, sp.distance(best_q));
        best.rmae = std::clamp(1.0 - std::norm(best.best_gain) / energy, 0.0, 1.0);
        best.evaluations = corr.evaluations;
        return best;
    }

    // Direction orthogonal to the array: the normal of a planar array (z >= 0),
    // or z x axis for a collinear one.
    inline Vec3 broadside_direction(const AntennaArray &array)
    {
        Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
        for (const Vec3 &a : array.positions())
            cov += a * a.transpose();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
        const Eigen::Vector3d ev = eig.eigenvalues(); // ascending
        const double scale = std::max(ev[2], 1e-300);
        if (ev[1] <= 1e-12 * scale)
        {
            const Vec3 axis = eig.eigenvectors().col(2);
            Vec3 n = Vec3::UnitZ().cross(axis);
            if (n.norm() < 1e-9)
                n = Vec3::UnitX();
            n.normalize();
            if (n.y() < 0.0 || (n.y() == 0.0 && n.x() < 0.0))
                n = -n;
            return n;
        }
        Vec3 n = eig.eigenvectors().col(0).normalized();
        if (n.z() < 0.0 || (n.z() == 0.0 && n.y() < 0.0))
            n = -n;
        return n;
    }

    // Smallest direction domain that covers every distinct response of the array.
    inline DirectionDomain natural_domain(const AntennaArray &array)
    {
        bool on_x = true, in_xy = true;
        for (const Vec3 &a : array.positions())
        {
            on_x = on_x && a.y() == 0.0 && a.z() == 0.0;
            in_xy = in_xy && a.z() == 0.0;
        }
        if (on_x)
            return DirectionDomain::Azimuth;
        if (in_xy)
            return DirectionDomain::Hemisphere;
        return DirectionDomain::Sphere;
    }

    inline SearchSettings default_search(const AntennaArray &array)
    {
        SearchSettings s;
        s.domain = natural_domain(array);
        return s;
    }

    struct SweepConfig
    {
        AntennaArray array;
        std::vector<WaveModel> models{WaveModel::Plane, WaveModel::Parabolic};
        double lambda = 0.01;
        std::vector<double> distances;       // strictly increasing, meters
        std::optional<Vec3> probe_direction; // broadside when absent
        SearchSettings search;
        unsigned threads = 1;
    };

    struct SweepRow
    {
        double distance = 0.0;
        WaveModel model = WaveModel::Plane;
        double rmae = 0.0;
    };

    // n log-spaced values from lo to hi inclusive
    inline std::vector<double> log_space(double lo, double hi, int n)
    {
        if (n < 1 || !(lo > 0.0) || !(hi >= lo))
            throw std::invalid_argument("log_space: need n >= 1 and 0 < lo <= hi");
        std::vector<double> v(static_cast<std::size_t>(n));
        if (n == 1)
        {
            v[0] = lo;
            return v;
        }
        const double a = std::log10(lo), b = std::log10(hi);
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (n - 1));
        v.front() = lo;
        v.back() = hi;
        return v;
    }

    // Default sweep grid: 200 log-spaced points from lambda to 1e5 lambda
    inline std::vector<double> default_sweep_distances(double lambda, int points = 200)
    {
        return log_space(lambda, 1e5 * lambda, points);
    }

    // rMAE of each model against a single broadside spherical-wave path (rho = 1, phi = 0),
    // one row per (model, distance), model-major in the order given.
    inline std::vector<SweepRow> rmae_curve(const SweepConfig &cfg)
    {
        detail::require_positive(cfg.lambda, "lambda");
        if (cfg.distances.empty())
            throw std::invalid_argument("rmae_curve: empty distance grid");
        for (std::size_t i = 0; i < cfg.distances.size(); ++i)
        {
            if (!(cfg.distances[i] > 0.0))
                throw std::invalid_argument("rmae_curve: distances must be > 0");
            if (i > 0 && !(cfg.distances[i] > cfg.distances[i - 1]))
                throw std::invalid_argument("rmae_curve: distances must be strictly increasing");
        }
        if (cfg.models.empty())
            throw std::invalid_argument("rmae_curve: no models requested");

        const Vec3 probe = cfg.probe_direction ? *cfg.probe_direction : broadside_direction(cfg.array);
        const std::size_t nd = cfg.distances.size();
        std::vector<SweepRow> rows(cfg.models.size() * nd);
        parallel_for(rows.size(), cfg.threads, [&](std::size_t i)
                     {
            const WaveModel model = cfg.models[i / nd];
            const double dist = cfg.distances[i % nd];
            const Path path{1.0, 0.0, probe, dist, std::nullopt};
            const ChannelVector h = synth_miso(cfg.array, std::span<const Path>(&path, 1), WaveModel::Spherical, cfg.lambda);
            rows[i] = {dist, model, project_single_path(h, model, cfg.array, cfg.lambda, cfg.search).rmae}; });
        return rows;
    }
}

#endif
