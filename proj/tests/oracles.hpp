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

// Reference computations that share no code with the library search and solver.

#ifndef WAVEFRONT_TESTS_ORACLES_HPP
#define WAVEFRONT_TESTS_ORACLES_HPP

#include <wavefront/geometry.hpp>
#include <wavefront/wavemodels.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle
{
    using wavefront::AntennaArray;
    using wavefront::Vec3;
    using wavefront::WaveModel;

    // Excess path length written out directly in long double.
    inline long double excess(WaveModel m, const Vec3 &a, const Vec3 &u, long double D)
    {
        const long double b = static_cast<long double>(a.x()) * u.x() + static_cast<long double>(a.y()) * u.y() +
                              static_cast<long double>(a.z()) * u.z();
        const long double c = static_cast<long double>(a.x()) * a.x() + static_cast<long double>(a.y()) * a.y() +
                              static_cast<long double>(a.z()) * a.z();
        switch (m)
        {
        case WaveModel::Plane:
            return -b;
        case WaveModel::Parabolic:
            return -b + (c - b * b) / (2 * D);
        case WaveModel::Spherical:
            return std::sqrt(D * D - 2 * D * b + c) - D;
        }
        return 0;
    }

    // |e^H h|^2 for the model response at (u, D), long double accumulation
    inline long double power(const Eigen::VectorXcd &h, WaveModel m, const AntennaArray &arr, const Vec3 &u,
                             long double D, double lambda)
    {
        const long double k = 2 * std::numbers::pi_v<long double> / lambda;
        std::complex<long double> acc = 0;
        for (std::size_t j = 0; j < arr.size(); ++j)
        {
            const long double ph = k * excess(m, arr[j], u, D);
            const auto hj = h[static_cast<Eigen::Index>(j)];
            // conj(e_j) * h_j with e_j = exp(-j ph)
            acc += std::complex<long double>(std::cos(ph), std::sin(ph)) *
                   std::complex<long double>(hj.real(), hj.imag());
        }
        return std::norm(acc) / static_cast<long double>(arr.size());
    }

    inline double energy(const Eigen::VectorXcd &h) { return h.squaredNorm(); }

    inline Vec3 from_cosine(double c) { return {c, std::sqrt(std::max(0.0, 1 - c * c)), 0.0}; }

    // 1 - max |e^H h|^2 / |h|^2 over n values of cos(azimuth) in [-1, 1] (x-y plane), plane model
    inline double plane_rmae_cosine(const Eigen::VectorXcd &h, const AntennaArray &arr, double lambda, int n)
    {
        long double best = 0;
        for (int i = 0; i < n; ++i)
            best = std::max(best, power(h, WaveModel::Plane, arr, from_cosine(-1 + 2.0 * i / (n - 1)), 1, lambda));
        return static_cast<double>(1 - best / energy(h));
    }

    // Direction cosines (u_x, u_y) on an n x n square grid, kept inside the unit disk, u_z >= 0
    inline double plane_rmae_disk(const Eigen::VectorXcd &h, const AntennaArray &arr, double lambda, int n)
    {
        long double best = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
            {
                const double x = -1 + 2.0 * i / (n - 1), y = -1 + 2.0 * j / (n - 1);
                const double zz = 1 - x * x - y * y;
                if (zz < 0)
                    continue;
                best = std::max(best, power(h, WaveModel::Plane, arr, Vec3(x, y, std::sqrt(zz)), 1, lambda));
            }
        return static_cast<double>(1 - best / energy(h));
    }

    // Whole sphere, Fibonacci lattice of n points
    inline double plane_rmae_sphere(const Eigen::VectorXcd &h, const AntennaArray &arr, double lambda, int n)
    {
        const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
        long double best = 0;
        for (int i = 0; i < n; ++i)
        {
            const double z = 1 - 2 * (i + 0.5) / n;
            const double r = std::sqrt(1 - z * z);
            const Vec3 u(r * std::cos(golden * i), r * std::sin(golden * i), z);
            best = std::max(best, power(h, WaveModel::Plane, arr, u, 1, lambda));
        }
        return static_cast<double>(1 - best / energy(h));
    }

    // Points of a cos(azimuth) x inverse distance grid with about `total` points, split so
    // that one step in either coordinate moves the edge phase by the same amount
    // (k R dc vs k R^2 ds / 2, c in [-1, 1], s in [0, s_max]).
    inline std::pair<int, int> balanced_split(const AntennaArray &arr, double s_max, double total)
    {
        double r = 0;
        for (const auto &a : arr.positions())
            r = std::max(r, a.norm());
        const double ratio = 4 / (r * s_max); // n_c / n_s
        const int n_s = std::max(2, static_cast<int>(std::lround(std::sqrt(total / ratio))));
        const int n_c = std::max(2, static_cast<int>(total / n_s));
        return {n_c, n_s};
    }

    // Curved model over n_c values of cos(azimuth) in [-1, 1] x n_s inverse distances
    // in [0, s_max]; s = 0 is the plane-wave limit
    inline double curved_rmae_cosine(const Eigen::VectorXcd &h, WaveModel m, const AntennaArray &arr, double lambda,
                                     int n_c, int n_s, double s_max)
    {
        long double best = 0;
        for (int i = 0; i < n_c; ++i)
        {
            const Vec3 u = from_cosine(-1 + 2.0 * i / (n_c - 1));
            best = std::max(best, power(h, WaveModel::Plane, arr, u, 1, lambda));
            for (int k = 1; k < n_s; ++k)
                best = std::max(best, power(h, m, arr, u, 1.0L / (s_max * k / (n_s - 1)), lambda));
        }
        return static_cast<double>(1 - best / energy(h));
    }

    // Least squares by normal equations in long double with iterative refinement.
    inline Eigen::VectorXcd least_squares(const Eigen::MatrixXcd &E, const Eigen::MatrixXcd &X,
                                          const Eigen::VectorXcd &y, int sweeps = 6)
    {
        using cld = std::complex<long double>;
        using Mat = Eigen::Matrix<cld, Eigen::Dynamic, Eigen::Dynamic>;
        using Vec = Eigen::Matrix<cld, Eigen::Dynamic, 1>;
        const Mat A = (X * E).cast<cld>();
        const Vec yl = y.cast<cld>();
        const Mat G = A.adjoint() * A;
        const Eigen::LLT<Mat> llt(G);
        Vec x = llt.solve(A.adjoint() * yl);
        for (int s = 0; s < sweeps; ++s)
        {
            const Vec r = A.adjoint() * (yl - A * x);
            x += llt.solve(r);
        }
        Eigen::VectorXcd out(x.size());
        for (Eigen::Index i = 0; i < x.size(); ++i)
            out[i] = {static_cast<double>(x[i].real()), static_cast<double>(x[i].imag())};
        return out;
    }

    // rMAE of the best plane wave for a broadside spherical wave on a centered
    // ULA of n elements, in the limit of a continuous aperture:
    //   1 - |int_0^1 exp(j c t^2) dt|^2 with c = pi R^2 / (lambda D)
    inline double continuous_plane_rmae(double c, int steps = 200000)
    {
        // Simpson rule on [0, 1]
        std::complex<double> acc = 0;
        const double hstep = 1.0 / steps;
        for (int i = 0; i <= steps; ++i)
        {
            const double t = i * hstep;
            const double w = (i == 0 || i == steps) ? 1 : (i % 2 ? 4 : 2);
            acc += w * std::polar(1.0, c * t * t);
        }
        acc *= hstep / 3;
        return 1 - std::norm(acc);
    }
}

#endif
