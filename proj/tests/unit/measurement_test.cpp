// SPDX-License-Identifier: Apache-2.0
//
// inkwell - design and verification toolkit for passive mmWave reflectors
// Copyright (C) 2026 The inkwell authors
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

#include <inkwell/diffraction_design.hpp>
#include <inkwell/mask_synthesis.hpp>
#include <inkwell/measurement.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace inkwell;

namespace
{
    MeasurementScan scan_of(const std::vector<double> &theta, const std::vector<double> &dbm)
    {
        std::ostringstream os;
        os << "theta_deg,power_dbm\n";
        for (std::size_t i = 0; i < theta.size(); ++i)
            os << csv::format(theta[i]) << ',' << csv::format(dbm[i]) << '\n';
        std::istringstream in(os.str());
        return load_scan(in);
    }

    std::string error_of(const std::string &text)
    {
        std::istringstream in(text);
        try
        {
            load_scan(in);
        }
        catch (const ValidationError &e)
        {
            return e.what();
        }
        return {};
    }

    std::vector<double> sweep_5deg()
    {
        std::vector<double> t;
        for (int a = -90; a <= 90; a += 5)
            t.push_back(a);
        return t;
    }

    // Theory sampled on `grid` and turned into a dBm scan with an arbitrary system gain.
    std::vector<double> as_dbm(const AngularPattern &theory, const std::vector<double> &grid, double system_gain_db)
    {
        std::vector<double> out;
        for (double th : grid)
        {
            std::size_t i = 0;
            while (theory.theta_deg[i] < th - 1e-9)
                ++i;
            out.push_back(10.0 * std::log10(std::max(theory.gain[i], 1e-12)) + system_gain_db);
        }
        return out;
    }
}

TEST(LoadScan, TwoRows)
{
    std::istringstream in("theta_deg,power_dbm\n-5,-40.5\n0,-38\n");
    const auto s = load_scan(in, 45.0, "two");
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.samples[1].power_dbm, -38.0);
    EXPECT_EQ(s.incidence_deg, 45.0);
}

TEST(LoadScan, FullSweepHas37Samples)
{
    const auto t = sweep_5deg();
    EXPECT_EQ(scan_of(t, std::vector<double>(t.size(), -50.0)).size(), 37u);
}

TEST(LoadScan, Errors)
{
    EXPECT_NE(error_of("theta_deg,power_dbm\n0,-1\n0,-2\n").find("line 3"), std::string::npos);
    EXPECT_NE(error_of("theta_deg,power_dbm\n0,-1\n0,-2\n").find("duplicate"), std::string::npos);
    EXPECT_NE(error_of("theta_deg,power_dbm\n5,-1\n0,-2\n").find("strictly increasing"), std::string::npos);
    EXPECT_NE(error_of("theta_deg,power_dbm\n0,-1\n5,abc\n").find("line 3"), std::string::npos);
    EXPECT_NE(error_of("theta_deg,power_dbm\n0,-1,7\n").find("line 2"), std::string::npos);
    EXPECT_NE(error_of("angle,dbm\n0,-1\n").find("header"), std::string::npos);
    EXPECT_NE(error_of("theta_deg,power_dbm\n0,-1\n").find("at least 2"), std::string::npos);
}

TEST(BackgroundSubtract, WorkedExample)
{
    const auto meas = scan_of({-5, 0, 5}, {0.0, -3.01, -10.0});
    const auto mount = scan_of({-5, 0, 5}, {-10.0, -10.0, -10.0});
    const auto r = background_subtract(meas, mount);
    EXPECT_NEAR(r[0].value, 0.9, 1e-12);
    EXPECT_NEAR(r[1].value, 0.4, 1e-3);
    EXPECT_EQ(r[2].value, 0.0);
}

TEST(BackgroundSubtract, IdenticalScansCancel)
{
    const auto a = scan_of({0, 5, 10}, {-30, -20, -25});
    for (const auto &s : background_subtract(a, a))
        EXPECT_EQ(s.value, 0.0);
}

TEST(BackgroundSubtract, ClampsInsteadOfGoingNegative)
{
    const auto r = background_subtract(scan_of({0, 5}, {-30, -20}), scan_of({0, 5}, {-20, -30}));
    EXPECT_EQ(r[0].value, 0.0);
    EXPECT_GT(r[1].value, 0.0);
}

TEST(BackgroundSubtract, GridMismatch)
{
    try
    {
        background_subtract(scan_of({0, 5}, {-30, -20}), scan_of({0, 6}, {-30, -20}));
        FAIL();
    }
    catch (const ValidationError &e)
    {
        EXPECT_NE(std::string(e.what()).find("re-measure"), std::string::npos);
    }
    EXPECT_THROW(background_subtract(scan_of({0, 5}, {-30, -20}), scan_of({0, 5, 10}, {-30, -20, -1})), ValidationError);
}

TEST(Normalize, WorkedExample)
{
    const auto r = normalize_pattern({{-5, 0.9}, {0, 0.4}, {5, 0.0}});
    EXPECT_EQ(r[0].value, 0.0);
    EXPECT_NEAR(r[1].value, 10.0 * std::log10(0.4 / 0.9), 1e-12);
    EXPECT_NEAR(r[1].value, -3.52, 0.005);
    EXPECT_EQ(r[2].value, -60.0);
}

TEST(Normalize, SingleSampleAndAllZero)
{
    EXPECT_EQ(normalize_pattern({{0, 3.0}})[0].value, 0.0);
    try
    {
        normalize_pattern({{0, 0.0}, {5, 0.0}});
        FAIL();
    }
    catch (const ValidationError &e)
    {
        EXPECT_STREQ(e.what(), "no reflector signal above background");
    }
}

TEST(Normalize, MountOnlyScanStaysNearFloor)
{
    // Reference all-ON scan and a mount-only scan that sees the same background.
    const auto grid = sweep_5deg();
    const Aperture ap(35, 2.5e-3, 5e-3);
    const auto ref = pattern_sweep(ap, ReflectionCoefficients::all_on(35), 45.0, grid);
    const auto ref_dbm = as_dbm(ref, grid, -20.0);
    std::vector<double> mount_dbm(grid.size(), -75.0);
    std::vector<double> combined(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        combined[i] = 10.0 * std::log10(std::pow(10.0, ref_dbm[i] / 10.0) + std::pow(10.0, mount_dbm[i] / 10.0));
    const auto ref_lin = background_subtract(scan_of(grid, combined), scan_of(grid, mount_dbm));
    double peak = 0.0;
    for (const auto &s : ref_lin)
        peak = std::max(peak, s.value);
    for (double p : mount_dbm)
        EXPECT_LT(10.0 * std::log10(std::pow(10.0, p / 10.0) / peak), -50.0);
}

TEST(MeasurementProperty, ClampNonNegative)
{
    std::mt19937_64 g(71);
    std::uniform_real_distribution<double> p(-90.0, -10.0);
    const auto grid = sweep_5deg();
    for (int trial = 0; trial < 200; ++trial)
    {
        std::vector<double> a(grid.size()), b(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            a[i] = p(g), b[i] = p(g);
        for (const auto &s : background_subtract(scan_of(grid, a), scan_of(grid, b)))
            EXPECT_GE(s.value, 0.0);
    }
}

TEST(MeasurementProperty, NormalizationIdempotent)
{
    std::mt19937_64 g(72);
    std::uniform_real_distribution<double> v(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial)
    {
        std::vector<PatternSample> lin;
        for (int a = -90; a <= 90; a += 5)
            lin.push_back({double(a), v(g) < 0.2 ? 0.0 : v(g)});
        lin[std::size_t(g() % lin.size())].value = 0.7;
        const auto once = normalize_pattern(lin);
        const auto twice = normalize_pattern(db_to_linear(once));
        for (std::size_t i = 0; i < once.size(); ++i)
        {
            EXPECT_NEAR(twice[i].value, once[i].value, 1e-9);
            EXPECT_GE(once[i].value, -60.0);
        }
        double top = -1e300;
        for (const auto &s : once)
            top = std::max(top, s.value);
        EXPECT_EQ(top, 0.0);
    }
}

TEST(MeasurementProperty, ScaleInvariance)
{
    std::mt19937_64 g(73);
    std::uniform_real_distribution<double> p(-80.0, -20.0), off(-30.0, 30.0);
    const auto grid = sweep_5deg();
    for (int trial = 0; trial < 200; ++trial)
    {
        std::vector<double> a(grid.size()), b(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            a[i] = p(g), b[i] = p(g) - 5.0;
        const double c = off(g);
        std::vector<double> a2 = a, b2 = b;
        for (std::size_t i = 0; i < grid.size(); ++i)
            a2[i] += c, b2[i] += c;
        const auto x = normalize_pattern(background_subtract(scan_of(grid, a), scan_of(grid, b)));
        const auto y = normalize_pattern(background_subtract(scan_of(grid, a2), scan_of(grid, b2)));
        for (std::size_t i = 0; i < x.size(); ++i)
            EXPECT_NEAR(x[i].value, y[i].value, 1e-9);
    }
}

TEST(MeasurementProperty, FloorOnlyAtZeroPower)
{
    const auto r = normalize_pattern({{0, 1.0}, {5, 0.0}, {10, 1e-9}, {15, 0.5}});
    EXPECT_EQ(r[1].value, -60.0);
    EXPECT_EQ(r[2].value, -60.0); // below the floor is clamped to it
    EXPECT_GT(r[3].value, -60.0);
}

TEST(Compare, TheoryAgainstItselfIsExact)
{
    const Aperture ap(35, 2.5e-3, 5e-3);
    const SteeringTask task(30.0, {{-7.8, {1.0, 0.0}}, {-60.0, {1.0, 0.0}}});
    const auto theory = pattern_sweep(ap, synthesize_mask(ap, task), 30.0, default_angle_grid());
    std::vector<PatternSample> lin;
    for (std::size_t i = 0; i < theory.size(); ++i)
        lin.push_back({theory.theta_deg[i], theory.gain[i]});
    const double targets[] = {-7.8, -60.0};
    const auto r = compare(normalize_pattern(lin), theory, targets);
    for (const auto &t : r.targets)
    {
        EXPECT_TRUE(t.found);
        EXPECT_EQ(t.angle_err_deg, 0.0);
        EXPECT_EQ(t.level_err_db, 0.0);
    }
    EXPECT_LT(r.rms_db, 1e-12);
}

TEST(Compare, MissingBeamIsReportedNotThrown)
{
    const Aperture ap(35, 2.5e-3, 5e-3);
    const auto theory = pattern_sweep(ap, ReflectionCoefficients::all_on(35), 45.0, default_angle_grid());
    // Flat measurement: no local peak strictly above the floor anywhere but it is flat at -60.
    std::vector<PatternSample> flat;
    for (int a = -90; a <= 90; a += 5)
        flat.push_back({double(a), a == -45 ? 0.0 : -60.0});
    const double targets[] = {20.0};
    const auto r = compare(flat, theory, targets);
    EXPECT_FALSE(r.targets[0].found);
    const auto j = to_json(r);
    EXPECT_EQ(j["targets"][0]["found"], false);
    EXPECT_EQ(j["floor_db"], -60.0);
}

TEST(Compare, OneDecibelShortfallAtDiffractionTarget)
{
    // Synthetic scan with the main beam 1 dB below the diffraction-order
    // prediction, everything else unchanged.
    const double lambda = 5e-3;
    const double delta = period_for_target(45.0, -10.0, lambda, 1);
    const Aperture ap(35, delta, lambda);
    const auto theory = pattern_sweep(ap, ReflectionCoefficients::all_on(35), 45.0, default_angle_grid());
    const auto grid = sweep_5deg();
    auto dbm = as_dbm(theory, grid, -30.0);
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (std::abs(grid[i] + 10.0) <= 2.5)
            dbm[i] -= 1.0;
    const auto measured = normalize_pattern(to_linear(scan_of(grid, dbm)));
    const double targets[] = {-10.0};
    const auto r = compare(measured, theory, targets);
    ASSERT_TRUE(r.targets[0].found);
    EXPECT_EQ(r.targets[0].angle_err_deg, 0.0);
    EXPECT_NEAR(r.targets[0].level_err_db, -1.0, 1e-9);
}

TEST(Compare, DualBeamsWithinOneGridStep)
{
    const Aperture ap(35, 2.5e-3, 5e-3);
    const SteeringTask task(30.0, {{-7.8, {1.0, 0.0}}, {-60.0, {1.0, 0.0}}});
    const auto theory = pattern_sweep(ap, synthesize_mask(ap, task), 30.0, default_angle_grid());
    const auto grid = sweep_5deg();
    const auto measured = normalize_pattern(to_linear(scan_of(grid, as_dbm(theory, grid, -25.0))));
    const double targets[] = {-7.8, -60.0};
    for (const auto &t : compare(measured, theory, targets).targets)
    {
        ASSERT_TRUE(t.found) << t.theta_deg;
        EXPECT_LE(std::abs(t.angle_err_deg), 5.0) << t.theta_deg;
    }
}

TEST(GainCsv, RoundTrip)
{
    const std::vector<PatternSample> p{{-5, 0.0}, {0, -3.5}, {5, -60.0}};
    std::stringstream ss;
    write_gain_csv(ss, p);
    EXPECT_EQ(ss.str().substr(0, 18), "theta_deg,gain_db\n");
    const auto back = read_gain_csv(ss);
    ASSERT_EQ(back.size(), 3u);
    EXPECT_EQ(back[1].value, -3.5);
}
