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

#ifndef WAVEFRONT_GEOMETRY_HPP
#define WAVEFRONT_GEOMETRY_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

namespace wavefront
{
    using Vec3 = Eigen::Vector3d;

    // Raised when a rotation axis cannot be inferred (antipodal directions)
    class DegenerateRotation : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Unit vector in the x-y plane at the given azimuth (radians from +x toward +y)
    inline Vec3 azimuth_direction(double azimuth)
    {
        return {std::cos(azimuth), std::sin(azimuth), 0.0};
    }

    // Unit vector from azimuth (in the x-y plane) and elevation (from the x-y plane toward +z)
    inline Vec3 spherical_direction(double azimuth, double elevation)
    {
        const double c = std::cos(elevation);
        return {c * std::cos(azimuth), c * std::sin(azimuth), std::sin(elevation)};
    }

    inline bool is_unit(const Vec3 &u, double tol = 1e-12)
    {
        return std::abs(u.norm() - 1.0) <= tol;
    }

    inline void require_unit(const Vec3 &u, const char *what)
    {
        // Directions built from trig functions or normalized() are within a few ulps.
        if (!u.allFinite() || !is_unit(u, 1e-9))
            throw std::invalid_argument(std::string(what) + " must be a unit vector");
    }

    // Antenna positions relative to the array centroid, in meters.
    class AntennaArray
    {
    public:
        AntennaArray() = default;

        // Positions are re-centered on their centroid; the applied shift is reported by centroid_shift().
        explicit AntennaArray(std::vector<Vec3> positions, std::string label = "custom")
            : AntennaArray(std::move(positions), std::move(label), true)
        {
        }

        // For generators that are centered by construction; positions are kept bit-for-bit.
        static AntennaArray centered(std::vector<Vec3> positions, std::string label)
        {
            return AntennaArray(std::move(positions), std::move(label), false);
        }

        std::size_t size() const { return positions_.size(); }
        bool empty() const { return positions_.empty(); }
        const std::vector<Vec3> &positions() const { return positions_; }
        const Vec3 &operator[](std::size_t i) const { return positions_[i]; }
        const std::string &label() const { return label_; }

        // max_i |a_i|, the radius of the smallest centroid-centered sphere holding the array
        double aperture_radius() const { return radius_; }

        // Translation that was added to the raw positions to center them
        const Vec3 &centroid_shift() const { return shift_; }

        Vec3 centroid() const
        {
            Vec3 mean = Vec3::Zero();
            for (const auto &p : positions_)
                mean += p;
            return positions_.empty() ? mean : Vec3(mean / static_cast<double>(positions_.size()));
        }

    private:
        AntennaArray(std::vector<Vec3> positions, std::string label, bool recenter)
            : label_(std::move(label))
        {
            if (positions.empty())
                throw std::invalid_argument("AntennaArray: at least one antenna is required");
            Vec3 mean = Vec3::Zero();
            for (const auto &p : positions)
            {
                if (!p.allFinite())
                    throw std::invalid_argument("AntennaArray: non-finite antenna position");
                mean += p;
            }
            mean /= static_cast<double>(positions.size());
            if (recenter)
            {
                for (auto &p : positions)
                    p -= mean;
                shift_ = -mean;
            }
            positions_ = std::move(positions);
            for (const auto &p : positions_)
                radius_ = std::max(radius_, p.norm());
        }

        std::vector<Vec3> positions_;
        std::string label_;
        Vec3 shift_ = Vec3::Zero();
        double radius_ = 0.0;
    };

    // Uniform linear array along the x axis.
    inline AntennaArray make_ula(int n, double spacing)
    {
        if (n < 1)
            throw std::invalid_argument("make_ula: n must be >= 1");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw std::invalid_argument("make_ula: spacing must be > 0");
        std::vector<Vec3> pos;
        pos.reserve(static_cast<std::size_t>(n));
        const double half = 0.5 * static_cast<double>(n - 1);
        for (int i = 0; i < n; ++i)
            pos.emplace_back((static_cast<double>(i) - half) * spacing, 0.0, 0.0);
        return AntennaArray::centered(std::move(pos), "ula-" + std::to_string(n));
    }

    // Uniform planar array in the x-y plane, x index varying fastest.
    inline AntennaArray make_upa(int nx, int ny, double spacing)
    {
        if (nx < 1 || ny < 1)
            throw std::invalid_argument("make_upa: nx and ny must be >= 1");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw std::invalid_argument("make_upa: spacing must be > 0");
        std::vector<Vec3> pos;
        pos.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
        const double hx = 0.5 * static_cast<double>(nx - 1);
        const double hy = 0.5 * static_cast<double>(ny - 1);
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix)
                pos.emplace_back((static_cast<double>(ix) - hx) * spacing,
                                 (static_cast<double>(iy) - hy) * spacing, 0.0);
        return AntennaArray::centered(std::move(pos), "upa-" + std::to_string(nx) + "x" + std::to_string(ny));
    }

    // Proper rotation matrix (orthogonal, det +1).
    class Rotation
    {
    public:
        Rotation() : m_(Eigen::Matrix3d::Identity()) {}

        static Rotation identity() { return Rotation(); }

        // Right-handed rotation by `angle` about the unit vector `axis`
        static Rotation about_axis(const Vec3 &axis, double angle)
        {
            require_unit(axis, "rotation axis");
            return Rotation(Eigen::AngleAxisd(angle, axis).toRotationMatrix());
        }

        const Eigen::Matrix3d &matrix() const { return m_; }
        Vec3 operator*(const Vec3 &v) const { return m_ * v; }
        Rotation operator*(const Rotation &other) const { return Rotation(m_ * other.m_); }
        Rotation transpose() const { return Rotation(m_.transpose()); }

    private:
        explicit Rotation(const Eigen::Matrix3d &m) : m_(m) {}
        Eigen::Matrix3d m_;
    };

    // Receiver-to-transmitter frame rotation R with R*u_r = u_t.
    //
    // Built as the minimal rotation carrying u_r onto u_t, followed by a rotation
    // of `delta` radians about u_t. Given both directions, delta is the only
    // remaining degree of freedom.
    inline Rotation rotation_from_directions(const Vec3 &u_t, const Vec3 &u_r, double delta)
    {
        require_unit(u_t, "u_t");
        require_unit(u_r, "u_r");
        const Vec3 axis = u_r.cross(u_t);
        const double s = axis.norm();
        const double c = u_r.dot(u_t);

        Rotation align;
        if (s > 1e-12)
            align = Rotation::about_axis(axis / s, std::atan2(s, c));
        else if (c < 0.0)
            throw DegenerateRotation("rotation_from_directions: u_r is antipodal to u_t, rotation axis is ambiguous");

        return Rotation::about_axis(u_t.normalized(), delta) * align;
    }

    struct LoadedArray
    {
        AntennaArray array;
        Vec3 applied_shift = Vec3::Zero();
        std::vector<std::string> warnings;
    };

    // Reads "x,y,z" CSV (meters, header required). The array is re-centered on
    // its centroid; a non-negligible shift is reported in `warnings`.
    inline LoadedArray load_array_csv(std::istream &in, std::string label = "file")
    {
        std::string line;
        auto trim = [](std::string s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };

        bool header_seen = false;
        std::vector<Vec3> pos;
        std::size_t line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            line = trim(line);
            if (line.empty() || line.front() == '#')
                continue;
            std::vector<std::string> cells;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ','))
                cells.push_back(trim(cell));
            if (!header_seen)
            {
                if (cells != std::vector<std::string>{"x", "y", "z"})
                    throw std::invalid_argument("array csv: expected header 'x,y,z'");
                header_seen = true;
                continue;
            }
            if (cells.size() != 3)
                throw std::invalid_argument("array csv: line " + std::to_string(line_no) + " must have 3 columns");
            Vec3 p;
            for (int k = 0; k < 3; ++k)
            {
                const std::string &c = cells[static_cast<std::size_t>(k)];
                const auto r = std::from_chars(c.data(), c.data() + c.size(), p[k]);
                if (c.empty() || r.ec != std::errc() || r.ptr != c.data() + c.size() || !std::isfinite(p[k]))
                    throw std::invalid_argument("array csv: bad number on line " + std::to_string(line_no));
            }
            pos.push_back(p);
        }
        if (!header_seen)
            throw std::invalid_argument("array csv: missing header");
        if (pos.empty())
            throw std::invalid_argument("array csv: no antenna rows");

        LoadedArray out{AntennaArray(std::move(pos), std::move(label)), Vec3::Zero(), {}};
        out.applied_shift = out.array.centroid_shift();
        if (out.applied_shift.norm() > 1e-12)
        {
            std::ostringstream msg;
            msg.precision(17);
            msg << "array re-centered on its centroid, shift applied = (" << out.applied_shift.x() << ", "
                << out.applied_shift.y() << ", " << out.applied_shift.z() << ") m";
            out.warnings.push_back(msg.str());
        }
        return out;
    }

    inline LoadedArray load_array_csv(const std::string &path)
    {
        std::ifstream f(path);
        if (!f)
            throw std::runtime_error("cannot open array file: " + path);
        return load_array_csv(f, path);
    }
}

#endif
