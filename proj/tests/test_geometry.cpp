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

#include <wavefront/geometry.hpp>
#include <wavefront/random.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace wavefront;

namespace
{
    Vec3 random_unit(Rng &rng)
    {
        Vec3 v(rng.normal(), rng.normal(), rng.normal());
        return v.normalized();
    }

    void expect_centered(const AntennaArray &a)
    {
        const Vec3 c = a.centroid();
        EXPECT_LT(std::abs(c.x()), 1e-12);
        EXPECT_LT(std::abs(c.y()), 1e-12);
        EXPECT_LT(std::abs(c.z()), 1e-12);
    }
}

TEST(Ula, TwoElementsSitAtPlusMinusHalfSpacing)
{
    const auto a = make_ula(2, 0.3);
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0], Vec3(-0.15, 0, 0));
    EXPECT_EQ(a[1], Vec3(0.15, 0, 0));
}

TEST(Ula, SingleElementAtOrigin)
{
    const auto a = make_ula(1, 0.01);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0], Vec3::Zero());
    EXPECT_EQ(a.aperture_radius(), 0.0);
}

TEST(Ula, Aperture256HalfWavelength)
{
    const double lambda = 0.01;
    const auto a = make_ula(256, lambda / 2);
    EXPECT_NEAR(a.aperture_radius(), 63.75 * lambda, 1e-15);
}

TEST(Ula, ApertureIsExactlyHalfLength)
{
    Rng rng(7);
    for (int t = 0; t < 200; ++t)
    {
        const int n = static_cast<int>(rng.uniform_int(1, 1000));
        const double d = rng.uniform(1e-4, 1.0);
        const auto a = make_ula(n, d);
        EXPECT_EQ(a.aperture_radius(), (n - 1) * d / 2) << "n=" << n << " d=" << d;
        expect_centered(a);
        for (std::size_t i = 1; i < a.size(); ++i)
            EXPECT_NEAR(a[i].x() - a[i - 1].x(), d, 1e-12);
    }
}

TEST(Ula, RejectsBadArguments)
{
    EXPECT_THROW(make_ula(0, 0.1), std::invalid_argument);
    EXPECT_THROW(make_ula(-3, 0.1), std::invalid_argument);
    EXPECT_THROW(make_ula(4, 0.0), std::invalid_argument);
    EXPECT_THROW(make_ula(4, -1.0), std::invalid_argument);
    EXPECT_THROW(make_ula(4, std::nan("")), std::invalid_argument);
}

TEST(Upa, TwoByTwoIsSquareAroundOrigin)
{
    const double d = 0.2;
    const auto a = make_upa(2, 2, d);
    ASSERT_EQ(a.size(), 4u);
    EXPECT_EQ(a[0], Vec3(-0.1, -0.1, 0));
    EXPECT_EQ(a[1], Vec3(0.1, -0.1, 0));
    EXPECT_EQ(a[2], Vec3(-0.1, 0.1, 0));
    EXPECT_EQ(a[3], Vec3(0.1, 0.1, 0));
    expect_centered(a);
}

TEST(Upa, Aperture16x16IsHalfDiagonal)
{
    const double lambda = 0.01;
    const auto a = make_upa(16, 16, lambda / 2);
    EXPECT_NEAR(a.aperture_radius(), lambda / 4 * std::sqrt(15.0 * 15 + 15.0 * 15), 1e-15);
    EXPECT_NEAR(a.aperture_radius() / lambda, 5.303, 1e-3);
}

TEST(Upa, SingleColumnMatchesUlaWithAxesSwapped)
{
    const auto upa = make_upa(1, 9, 0.05);
    const auto ula = make_ula(9, 0.05);
    ASSERT_EQ(upa.size(), ula.size());
    for (std::size_t i = 0; i < ula.size(); ++i)
        EXPECT_EQ(upa[i], Vec3(ula[i].y(), ula[i].x(), ula[i].z()));
    EXPECT_EQ(upa.aperture_radius(), ula.aperture_radius());
}

TEST(Upa, RejectsBadArguments)
{
    EXPECT_THROW(make_upa(0, 4, 0.1), std::invalid_argument);
    EXPECT_THROW(make_upa(4, 0, 0.1), std::invalid_argument);
    EXPECT_THROW(make_upa(4, 4, 0.0), std::invalid_argument);
}

TEST(AntennaArray, ArbitraryPositionsAreRecentered)
{
    Rng rng(11);
    for (int t = 0; t < 100; ++t)
    {
        std::vector<Vec3> pos;
        const Vec3 offset(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5));
        const auto n = rng.uniform_int(1, 40);
        for (std::uint64_t i = 0; i < n; ++i)
            pos.push_back(offset + Vec3(rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1)));
        const AntennaArray a(pos);
        expect_centered(a);
        EXPECT_LT((a.centroid_shift() + offset).norm(), 0.11 * std::sqrt(3.0));
        double r = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            EXPECT_LT((a[i] - (pos[i] + a.centroid_shift())).norm(), 1e-12);
            r = std::max(r, a[i].norm());
        }
        EXPECT_EQ(a.aperture_radius(), r);
    }
}

TEST(AntennaArray, RejectsEmptyAndNonFinite)
{
    EXPECT_THROW(AntennaArray(std::vector<Vec3>{}), std::invalid_argument);
    EXPECT_THROW(AntennaArray(std::vector<Vec3>{Vec3(0, std::nan(""), 0)}), std::invalid_argument);
}

TEST(Rotation, EqualDirectionsZeroDeltaIsIdentity)
{
    const auto R = rotation_from_directions(Vec3::UnitX(), Vec3::UnitX(), 0.0);
    EXPECT_TRUE(R.matrix().isApprox(Eigen::Matrix3d::Identity(), 1e-15));
}

TEST(Rotation, MapsYOntoX)
{
    const auto R = rotation_from_directions(Vec3::UnitX(), Vec3::UnitY(), 0.0);
    EXPECT_LT((R * Vec3::UnitY() - Vec3::UnitX()).norm(), 1e-12);
}

TEST(Rotation, RandomInputsAreProperRotationsMappingUrToUt)
{
    Rng rng(3);
    for (int t = 0; t < 2000; ++t)
    {
        const Vec3 ut = random_unit(rng), ur = random_unit(rng);
        if (ut.dot(ur) < -1 + 1e-6)
            continue;
        const double delta = rng.uniform(-std::numbers::pi, std::numbers::pi);
        const auto R = rotation_from_directions(ut, ur, delta);
        const Eigen::Matrix3d &M = R.matrix();
        EXPECT_LT((M.transpose() * M - Eigen::Matrix3d::Identity()).norm(), 1e-10);
        EXPECT_NEAR(M.determinant(), 1.0, 1e-10);
        EXPECT_LT((R * ur - ut).norm(), 1e-10);
    }
}

TEST(Rotation, SameDirectionIsFixedForAnyDelta)
{
    Rng rng(5);
    for (int t = 0; t < 1000; ++t)
    {
        const Vec3 u = random_unit(rng);
        const auto R = rotation_from_directions(u, u, rng.uniform(-10, 10));
        EXPECT_LT((R * u - u).norm(), 1e-10);
    }
}

TEST(Rotation, DeltaIsAResidualTurnAboutUt)
{
    Rng rng(9);
    for (int t = 0; t < 500; ++t)
    {
        const Vec3 ut = random_unit(rng), ur = random_unit(rng);
        const double d0 = rng.uniform(-3, 3), d1 = rng.uniform(-3, 3);
        const auto R0 = rotation_from_directions(ut, ur, d0);
        const auto R1 = rotation_from_directions(ut, ur, d1);
        const Eigen::Matrix3d rel = R1.matrix() * R0.matrix().transpose();
        const Eigen::Matrix3d expect = Eigen::AngleAxisd(d1 - d0, ut).toRotationMatrix();
        EXPECT_LT((rel - expect).norm(), 1e-10);
    }
}

TEST(Rotation, AntipodalDirectionsAreDegenerate)
{
    EXPECT_THROW(rotation_from_directions(Vec3::UnitX(), -Vec3::UnitX(), 0.0), DegenerateRotation);
    const Vec3 u = Vec3(1, 2, 3).normalized();
    EXPECT_THROW(rotation_from_directions(u, -u, 1.0), DegenerateRotation);
}

TEST(Rotation, RejectsNonUnitDirections)
{
    EXPECT_THROW(rotation_from_directions(Vec3(2, 0, 0), Vec3::UnitX(), 0.0), std::invalid_argument);
    EXPECT_THROW(rotation_from_directions(Vec3::UnitX(), Vec3(0, 0, 0), 0.0), std::invalid_argument);
}

TEST(Directions, AreUnitWithinTolerance)
{
    Rng rng(1);
    for (int t = 0; t < 1000; ++t)
    {
        EXPECT_TRUE(is_unit(azimuth_direction(rng.uniform(-10, 10))));
        EXPECT_TRUE(is_unit(spherical_direction(rng.uniform(-10, 10), rng.uniform(-2, 2))));
    }
}

TEST(ArrayCsv, LoadsRecentersAndWarns)
{
    std::istringstream in("# comment\nx,y,z\n1.0,2.0,0.5\n1.2,2.0,0.5\n\n1.1, 2.1 ,0.5\n");
    const auto loaded = load_array_csv(in);
    ASSERT_EQ(loaded.array.size(), 3u);
    expect_centered(loaded.array);
    EXPECT_LT((loaded.applied_shift + Vec3(1.1, 2.0 + 0.1 / 3, 0.5)).norm(), 1e-12);
    ASSERT_EQ(loaded.warnings.size(), 1u);
    EXPECT_NE(loaded.warnings[0].find("shift"), std::string::npos);
}

TEST(ArrayCsv, CenteredInputHasNoWarning)
{
    std::istringstream in("x,y,z\n-0.5,0,0\n0.5,0,0\n");
    const auto loaded = load_array_csv(in);
    EXPECT_TRUE(loaded.warnings.empty());
    EXPECT_EQ(loaded.array.aperture_radius(), 0.5);
}

TEST(ArrayCsv, RejectsMalformedInput)
{
    for (const char *text : {"", "a,b,c\n1,2,3\n", "x,y,z\n", "x,y,z\n1,2\n", "x,y,z\n1,2,three\n",
                             "x,y,z\n1,2,3,4\n", "x,y,z\n1,2,3e\n", "x,y,z\n1,2,inf\n"})
    {
        std::istringstream in(text);
        EXPECT_THROW(load_array_csv(in), std::invalid_argument) << text;
    }
}

TEST(ArrayCsv, SampleFileLoads)
{
    const auto loaded = load_array_csv(std::string(WAVEFRONT_SAMPLES_DIR) + "/circle8.csv");
    EXPECT_EQ(loaded.array.size(), 8u);
    EXPECT_NEAR(loaded.array.aperture_radius(), 0.02, 1e-12);
    EXPECT_LT((loaded.applied_shift + Vec3(1, 0, 0.5)).norm(), 1e-12);
    EXPECT_EQ(loaded.warnings.size(), 1u);
}

TEST(ArrayCsv, MissingFileIsRuntimeError)
{
    EXPECT_THROW(load_array_csv(std::string("/nonexistent/array.csv")), std::runtime_error);
}
