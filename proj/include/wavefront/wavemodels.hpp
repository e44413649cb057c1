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

#ifndef WAVEFRONT_WAVEMODELS_HPP
#define WAVEFRONT_WAVEMODELS_HPP

#include "geometry.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wavefront
{
    using cd = std::complex<double>;

    // Wavefront shape used to describe a path:
    //   Plane     - first-order expansion, direction only (steering vectors)
    //   Parabolic - second-order expansion, 1/(2D) curvature correction
    //   Spherical - exact distance difference
    enum class WaveModel
    {
        Plane,
        Parabolic,
        Spherical
    };

    inline constexpr std::array<WaveModel, 3> all_wave_models{WaveModel::Plane, WaveModel::Parabolic,
                                                              WaveModel::Spherical};

    inline constexpr std::string_view to_string(WaveModel m)
    {
        switch (m)
        {
        case WaveModel::Plane:
            return "pwm";
        case WaveModel::Parabolic:
            return "parwm";
        case WaveModel::Spherical:
            return "swm";
        }
        return "?";
    }

    inline WaveModel parse_wave_model(std::string_view s)
    {
        if (s == "pwm" || s == "plane")
            return WaveModel::Plane;
        if (s == "parwm" || s == "parabolic")
            return WaveModel::Parabolic;
        if (s == "swm" || s == "spherical")
            return WaveModel::Spherical;
        throw std::invalid_argument("unknown wave model '" + std::string(s) + "' (expected pwm, parwm or swm)");
    }

    // Whether the model response depends on the path length
    inline constexpr bool uses_distance(WaveModel m) { return m != WaveModel::Plane; }

    // Receiver-side parameters of a path, only needed for multi-antenna receivers.
    struct ReceiverGeometry
    {
        Vec3 u_r = Vec3::UnitX(); // direction of arrival, receiver frame
        double delta = 0.0;       // residual rotation about the link axis, radians
    };

    // One propagation path. rho is a linear amplitude, phi is in radians.
    struct Path
    {
        double rho = 1.0;
        double phi = 0.0;
        Vec3 u_t = Vec3::UnitY(); // direction of departure, transmitter frame
        double distance = 1.0;    // centroid-to-centroid path length, meters
        std::optional<ReceiverGeometry> receiver;

        std::complex<double> gain() const { return std::polar(rho, phi); }
    };

    inline void validate(const Path &p)
    {
        if (!(p.rho >= 0.0) || !std::isfinite(p.rho))
            throw std::invalid_argument("path: rho must be finite and >= 0");
        if (!std::isfinite(p.phi))
            throw std::invalid_argument("path: phi must be finite");
        if (!(p.distance > 0.0) || !std::isfinite(p.distance))
            throw std::invalid_argument("path: distance must be > 0");
        require_unit(p.u_t, "path u_t");
        if (p.receiver)
            require_unit(p.receiver->u_r, "path u_r");
    }

    struct ChannelVector
    {
        Eigen::VectorXcd entries;
        double wavelength = 0.0;

        Eigen::Index size() const { return entries.size(); }
    };

    struct CharacteristicVector
    {
        Eigen::VectorXcd entries;
        WaveModel model = WaveModel::Plane;
        Vec3 direction = Vec3::UnitY();
        double distance = 0.0;
    };

    namespace detail
    {
        inline void require_positive(double v, const char *what)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::invalid_argument(std::string(what) + " must be finite and > 0");
        }

        // sqrt(D^2 + 2 D b + c) - D without cancellation at large D. The argument is
        // written as (D + b)^2 + (c - b^2), a sum of squares when |b| <= sqrt(c).
        inline double sphere_excess(double distance, double b, double c)
        {
            if (std::isinf(distance))
                return b;
            double perp = c - b * b;
            if (perp < 0.0)
            {
                if (perp < -1e-9 * c)
                    throw std::invalid_argument("spherical path length is not real for these inputs");
                perp = 0.0;
            }
            const double arg = (distance + b) * (distance + b) + perp;
            return (2.0 * distance * b + c) / (std::sqrt(arg) + distance);
        }

        // Excess path length from the projection p = a.u and squared norm |a|^2.
        inline double excess_from_projection(WaveModel model, double proj, double norm2, double distance)
        {
            switch (model)
            {
            case WaveModel::Plane:
                return -proj;
            case WaveModel::Parabolic:
                return -proj + (norm2 - proj * proj) / (2.0 * distance);
            case WaveModel::Spherical:
                return sphere_excess(distance, -proj, norm2);
            }
            return 0.0;
        }
    }

    // D_ij - D for a transmit antenna a_t and receive antenna a_r (receiver frame),
    // exact spherical geometry. R maps receiver coordinates into the transmit frame.
    inline double delta_swm_mimo(const Vec3 &a_t, const Vec3 &a_r, const Vec3 &u_t, double distance,
                                 const Rotation &R)
    {
        detail::require_positive(distance, "distance");
        require_unit(u_t, "u_t");
        const Vec3 v = R * a_r - a_t;
        return detail::sphere_excess(distance, v.dot(u_t), v.squaredNorm());
    }

    // Excess path length of transmit antenna a_t relative to the centroid for a
    // single-antenna receiver. The distance is ignored by the plane model.
    inline double delta_miso(WaveModel model, const Vec3 &a_t, const Vec3 &u_t, double distance)
    {
        require_unit(u_t, "u_t");
        if (uses_distance(model))
            detail::require_positive(distance, "distance");
        return detail::excess_from_projection(model, a_t.dot(u_t), a_t.squaredNorm(), distance);
    }

    // Unit-norm array response e_M(u_t, D): entries exp(-j 2pi/lambda * delta_j) / sqrt(N).
    inline Eigen::VectorXcd characteristic_entries(WaveModel model, const AntennaArray &array, const Vec3 &u_t,
                                                   double distance, double lambda)
    {
        detail::require_positive(lambda, "lambda");
        if (array.empty())
            throw std::invalid_argument("characteristic_vector: empty array");
        require_unit(u_t, "u_t");
        if (uses_distance(model))
            detail::require_positive(distance, "distance");

        const double k = 2.0 * std::numbers::pi / lambda;
        const double scale = 1.0 / std::sqrt(static_cast<double>(array.size()));
        Eigen::VectorXcd e(static_cast<Eigen::Index>(array.size()));
        for (std::size_t j = 0; j < array.size(); ++j)
        {
            const Vec3 &a = array[j];
            const double d = detail::excess_from_projection(model, a.dot(u_t), a.squaredNorm(), distance);
            e[static_cast<Eigen::Index>(j)] = std::polar(scale, -k * d);
        }
        return e;
    }

    inline CharacteristicVector characteristic_vector(WaveModel model, const AntennaArray &array, const Vec3 &u_t,
                                                      double distance, double lambda)
    {
        return {characteristic_entries(model, array, u_t, distance, lambda), model, u_t, distance};
    }

    // h = sqrt(N) * sum_k rho_k exp(j phi_k) e_M(u_k, D_k)
    inline ChannelVector synth_miso(const AntennaArray &array, std::span<const Path> paths, WaveModel model,
                                    double lambda)
    {
        if (paths.empty())
            throw std::invalid_argument("synth_miso: at least one path is required");
        const double root_n = std::sqrt(static_cast<double>(array.size()));
        Eigen::VectorXcd h = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(array.size()));
        for (const Path &p : paths)
        {
            validate(p);
            h += (root_n * p.gain()) * characteristic_entries(model, array, p.u_t, p.distance, lambda);
        }
        return {std::move(h), lambda};
    }

    // Full N_r x N_t spherical-wave matrix for a single path between two arrays.
    inline Eigen::MatrixXcd synth_mimo_swm(const AntennaArray &tx, const AntennaArray &rx, const Path &path,
                                           double lambda)
    {
        detail::require_positive(lambda, "lambda");
        validate(path);
        if (!path.receiver)
            throw std::invalid_argument("synth_mimo_swm: path needs a direction of arrival and rotation angle");
        const Rotation R = rotation_from_directions(path.u_t, path.receiver->u_r, path.receiver->delta);
        const double k = 2.0 * std::numbers::pi / lambda;
        const cd g = path.gain();

        Eigen::MatrixXcd H(static_cast<Eigen::Index>(rx.size()), static_cast<Eigen::Index>(tx.size()));
        for (std::size_t i = 0; i < rx.size(); ++i)
            for (std::size_t j = 0; j < tx.size(); ++j)
            {
                const double d = delta_swm_mimo(tx[j], rx[i], path.u_t, path.distance, R);
                H(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g * std::polar(1.0, -k * d);
            }
        return H;
    }
}

#endif
