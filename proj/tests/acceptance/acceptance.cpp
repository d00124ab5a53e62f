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

// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
// Exits nonzero when any criterion fails.

#include <inkwell/inkwell.hpp>

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

using namespace inkwell;

namespace
{
    using clock_type = std::chrono::steady_clock;

    double seconds_since(clock_type::time_point t0) { return std::chrono::duration<double>(clock_type::now() - t0).count(); }

    // Collects the sub-checks of one criterion and prints a single line.
    class Criterion
    {
    public:
        explicit Criterion(int id) : id_(id) {}

        void check(bool ok, const std::string &what)
        {
            ok_ = ok_ && ok;
            if (!ok)
                failed_ += (failed_.empty() ? "" : "; ") + what;
            notes_ += (notes_.empty() ? "" : ", ") + what;
        }

        bool report() const
        {
            if (ok_)
                std::printf("AC%-2d PASS  %s\n", id_, notes_.c_str());
            else
                std::printf("AC%-2d FAIL  %s | failed: %s\n", id_, notes_.c_str(), failed_.c_str());
            return ok_;
        }

    private:
        int id_;
        bool ok_ = true;
        std::string notes_, failed_;
    };

    std::string fmt(const char *f, double v)
    {
        char buf[128];
        std::snprintf(buf, sizeof buf, f, v);
        return buf;
    }

    bool near(double v, double want, double tol) { return std::abs(v - want) <= tol; }

    double db(double g) { return 10.0 * std::log10(g); }

    // Tolerances.
    constexpr double period_tol_mm = 0.01;
    constexpr double order1_tol_deg = 0.2;
    constexpr double order_m1_tol_deg = 0.1;
    constexpr double worst_loss_tol_db = 0.3;
    constexpr double gap_tol_db = 0.6;
    constexpr double design_loss_tol_db = 0.5;
    constexpr double pslr_tol_db = 0.5;
    constexpr double multibeam_level_tol_db = 0.5;
    constexpr double multibeam_loss_tol_db = 1.0;
    constexpr double equality_tol = 1e-9;
    constexpr double scale_tol_db = 1e-9;

    bool ac1()
    {
        Criterion c(1);
        const auto t0 = clock_type::now();
        const double a = period_for_target(45.0, -10.0, 5e-3, 1);
        const double b = period_for_target(30.0, -60.0, 5e-3, -1);
        const double dt = seconds_since(t0);
        c.check(near(a * 1e3, 9.37, period_tol_mm), fmt("delta(45,-10,n=1)=%.4f mm", a * 1e3));
        c.check(near(b * 1e3, 13.66, period_tol_mm), fmt("delta(30,-60,n=-1)=%.4f mm", b * 1e3));
        c.check(dt < 1e-3, fmt("%.1f us", dt * 1e6));
        return c.report();
    }

    bool ac2()
    {
        Criterion c(2);
        const double delta = 13.66e-3, lambda = 5e-3, ti = 30.0;
        const auto t1 = order_direction(delta, lambda, ti, 1);
        const auto t0 = order_direction(delta, lambda, ti, 0);
        const auto tm1 = order_direction(delta, lambda, ti, -1);
        c.check(t1 && near(*t1, -7.7, order1_tol_deg), fmt("theta_1=%.3f deg", t1.value_or(NAN)));
        c.check(t0 && near(*t0, -30.0, equality_tol), fmt("theta_0=%.3f deg", t0.value_or(NAN)));
        c.check(tm1 && near(*tm1, -60.0, order_m1_tol_deg), fmt("theta_-1=%.3f deg", tm1.value_or(NAN)));
        const auto set = visible_orders(delta, lambda, ti);
        c.check(set.n_min == -1 && set.n_max == 4 && set.count() == 6 && set.directions.size() == 6,
                "orders [" + std::to_string(set.n_min) + "," + std::to_string(set.n_max) + "] N=" + std::to_string(set.count()));
        return c.report();
    }

    bool ac3()
    {
        Criterion c(3);
        const auto t0 = clock_type::now();
        const auto s = worst_case_sweep(64, 0.5, 0.01);
        const double dt = seconds_since(t0);
        c.check(near(s.worst_onoff_loss_db, 9.94, worst_loss_tol_db), fmt("worst on/off loss %.3f dB", s.worst_onoff_loss_db));
        c.check(near(s.gap_db(), 6.0, gap_tol_db), fmt("on/off-bipolar gap %.3f dB", s.gap_db()));
        bool unity = false;
        for (const auto &p : s.points)
            if (p.sine_sum == 0.0)
                unity = p.gamma_onoff == 1.0 && p.gamma_bipolar == 1.0 && p.gamma_onoff_psi0 == 1.0;
        c.check(unity, "gamma=1 at u=0");
        c.check(dt < 5.0, fmt("%.2f s", dt));
        return c.report();
    }

    bool ac4()
    {
        Criterion c(4);
        const double lambda = 5e-3, d0 = 2.5e-3;
        const Aperture ap(35, d0, lambda);
        const auto task = SteeringTask::single(45.0, -10.0);
        double onoff = NAN, bipolar = NAN;
        for (const auto &e : loss_report(ap, task))
        {
            if (e.scheme == "onoff_psi0")
                onoff = e.loss_db;
            if (e.scheme == "bipolar")
                bipolar = e.loss_db;
        }
        c.check(near(onoff, 9.94, design_loss_tol_db), fmt("on/off loss %.3f dB", onoff));
        c.check(near(bipolar, 3.94, design_loss_tol_db), fmt("bipolar loss %.3f dB", bipolar));

        // Reflection half-space; target and specular mainlobes excluded null to null.
        const auto grid = angle_grid(-90.0, 0.0, 0.5);
        const AngleInterval windows[] = {lobe_window(-10.0, 35, d0, lambda), lobe_window(-45.0, 35, d0, lambda)};
        const double pslr_onoff = peak_to_sidelobe(pattern_sweep(ap, synthesize_mask(ap, task), 45.0, grid), windows);
        const double pslr_ideal = peak_to_sidelobe(pattern_sweep(ap, ideal_continuous_weights(ap, task), 45.0, grid), windows);
        c.check(near(pslr_onoff, -12.2, pslr_tol_db), fmt("on/off PSLR %.3f dB (want -12.2)", pslr_onoff));
        c.check(near(pslr_ideal, -13.2, pslr_tol_db), fmt("ideal PSLR %.3f dB", pslr_ideal));
        return c.report();
    }

    bool ac5()
    {
        Criterion c(5);
        const Aperture ap(35, 2.5e-3, 5e-3);
        const SteeringTask task(30.0, {{-7.8, {1.0, 0.0}}, {-60.0, {1.0, 0.0}}});
        const auto mask = synthesize_mask(ap, task);
        const auto ideal = ideal_continuous_weights(ap, task);
        for (double t : {-7.8, -60.0})
        {
            const double gi = gain_at(ap, ideal, t, 30.0);
            const double gm = gain_at(ap, mask, t, 30.0);
            c.check(near(db(gi), -3.0, multibeam_level_tol_db), fmt("ideal %.1f:", t) + fmt(" %.3f dB", db(gi)));
            c.check(near(db(gi / gm), 6.4, multibeam_loss_tol_db), fmt("on/off loss %.3f dB", db(gi / gm)));
        }
        return c.report();
    }

    bool ac6()
    {
        Criterion c(6);
        std::vector<std::size_t> counts;
        for (std::size_t m = 70; m <= 2000; ++m)
            counts.push_back(m);
        counts.push_back(10000);
        double lo = 1.0, hi = 0.0, at_big = NAN;
        for (const auto &p : thinning_convergence(60.0, -30.0, 2.5e-3, 5e-3, counts))
        {
            if (p.count == 10000)
                at_big = p.eta;
            lo = std::min(lo, p.eta);
            hi = std::max(hi, p.eta);
        }
        c.check(lo >= 0.45 && hi <= 0.55, fmt("eta in [%.4f,", lo) + fmt(" %.4f] for 70<=M<=2000 and 1e4", hi));
        c.check(at_big >= 0.49 && at_big <= 0.51, fmt("eta(1e4)=%.4f", at_big));
        return c.report();
    }

    bool ac7()
    {
        Criterion c(7);
        const auto t0 = clock_type::now();
        std::size_t mismatches = 0, violations = 0;
        double min_gamma = 1.0;
        for (std::uint64_t i = 0; i < 1000; ++i)
        {
            const auto inst = draw_gain_instance(2026, i, 8, 14);
            const auto fast = breakpoint_opt_mask(inst.phases);
            const auto slow = bruteforce_opt_mask(inst.phases);
            if (std::abs(fast.s_star - slow.s_star) > equality_tol)
                ++mismatches;
            if (fast.gamma_star < gain_bound)
                ++violations;
            min_gamma = std::min(min_gamma, fast.gamma_star);
        }
        const double dt = seconds_since(t0);
        c.check(mismatches == 0, std::to_string(mismatches) + " breakpoint/brute-force mismatches");
        c.check(violations == 0, fmt("min gamma* %.5f", min_gamma) + ", " + std::to_string(violations) + " violations");
        c.check(dt < 60.0, fmt("%.2f s", dt));
        return c.report();
    }

    bool ac8()
    {
        Criterion c(8);
        const auto a = snap_to_grid(period_for_target(45.0, -10.0, 5e-3, 1), 2.5e-3, 35);
        const auto b = snap_to_grid(period_for_target(30.0, -60.0, 5e-3, -1), 2.5e-3, 35);
        c.check(a.m_active == 9, "9.37 mm -> " + std::to_string(a.m_active) + " active");
        c.check(b.m_active == 7, "13.66 mm -> " + std::to_string(b.m_active) + " active");
        return c.report();
    }

    bool ac9()
    {
        Criterion c(9);
        const auto layout = build_layout(stripe_mask_2d(ReflectionCoefficients::all_on(35), 35));
        const std::pair<const char *, stl::Mesh> solids[] = {
            {"base", base_plate_mesh(layout)}, {"pads", pad_mesh(layout)}, {"stencil", stencil_mesh(layout)}};
        for (const auto &[name, mesh] : solids)
        {
            const auto bytes = stl::encode_binary(mesh, stl_header);
            const auto file = stl::decode_binary(bytes);
            const bool counts = file.declared_count == mesh.size() && bytes.size() == 84 + 50 * std::size_t(file.declared_count);
            c.check(counts && stl::check_manifold(file.mesh).closed(), std::string(name) + " valid/watertight");
        }
        c.check(solids[1].second.size() == 12 * 1225, std::to_string(solids[1].second.size() / 12) + " pads");
        const auto stencil = stencil_from_layout(layout);
        const double margin = 0.5 * (layout.dims.well_opening - stencil.opening);
        c.check(stencil.openings_at.size() == 1225 && near(stencil.opening, 2.1e-3, 1e-12) && near(layout.dims.well_opening, 2.2e-3, 1e-12) &&
                    margin > 0.0,
                fmt("stencil margin %.3f mm", margin * 1e3));
        return c.report();
    }

    MeasurementScan scan_of(const std::vector<double> &theta, const std::vector<double> &dbm)
    {
        std::ostringstream os;
        os << scan_csv_header << '\n';
        for (std::size_t i = 0; i < theta.size(); ++i)
            os << csv::format(theta[i]) << ',' << csv::format(dbm[i]) << '\n';
        std::istringstream in(os.str());
        return load_scan(in);
    }

    std::vector<double> theory_dbm(const AngularPattern &theory, const std::vector<double> &grid, double offset_db)
    {
        std::vector<double> out;
        std::size_t i = 0;
        for (double th : grid)
        {
            while (theory.theta_deg[i] < th - 1e-9)
                ++i;
            out.push_back(db(std::max(theory.gain[i], 1e-12)) + offset_db);
        }
        return out;
    }

    bool ac10()
    {
        Criterion c(10);
        std::vector<double> grid;
        for (int a = -90; a <= 90; a += 5)
            grid.push_back(a);
        std::mt19937_64 g(2026);
        std::uniform_real_distribution<double> p(-90.0, -10.0), off(-30.0, 30.0);

        bool clamp = true, idem = true, scale = true;
        for (int trial = 0; trial < 200; ++trial)
        {
            std::vector<double> a(grid.size()), b(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i)
                a[i] = p(g), b[i] = p(g);
            const auto lin = background_subtract(scan_of(grid, a), scan_of(grid, b));
            for (const auto &s : lin)
                clamp = clamp && s.value >= 0.0;
            bool any = false;
            for (const auto &s : lin)
                any = any || s.value > 0.0;
            if (!any)
                continue;
            const auto once = normalize_pattern(lin);
            const auto twice = normalize_pattern(db_to_linear(once));
            for (std::size_t i = 0; i < once.size(); ++i)
                idem = idem && std::abs(once[i].value - twice[i].value) <= scale_tol_db;

            const double k = off(g);
            auto a2 = a, b2 = b;
            for (std::size_t i = 0; i < grid.size(); ++i)
                a2[i] += k, b2[i] += k;
            const auto shifted = normalize_pattern(background_subtract(scan_of(grid, a2), scan_of(grid, b2)));
            for (std::size_t i = 0; i < once.size(); ++i)
                scale = scale && std::abs(once[i].value - shifted[i].value) <= scale_tol_db;
        }
        c.check(clamp, "clamp >= 0");
        c.check(idem, "normalization idempotent");
        c.check(scale, "scale invariant");

        // Theory against itself.
        const Aperture ap(35, 2.5e-3, 5e-3);
        const SteeringTask task(30.0, {{-7.8, {1.0, 0.0}}, {-60.0, {1.0, 0.0}}});
        const auto theory = pattern_sweep(ap, synthesize_mask(ap, task), 30.0, default_angle_grid());
        std::vector<PatternSample> lin;
        for (std::size_t i = 0; i < theory.size(); ++i)
            lin.push_back({theory.theta_deg[i], theory.gain[i]});
        const double targets[] = {-7.8, -60.0};
        bool zero = true;
        for (const auto &t : compare(normalize_pattern(lin), theory, targets).targets)
            zero = zero && t.found && t.angle_err_deg == 0.0 && t.level_err_db == 0.0;
        c.check(zero, "self-comparison zero error");

        // Synthetic scan with the main beam 1 dB under the diffraction-order prediction.
        const double delta = period_for_target(45.0, -10.0, 5e-3, 1);
        const Aperture grating(35, delta, 5e-3);
        const auto grating_theory = pattern_sweep(grating, ReflectionCoefficients::all_on(35), 45.0, default_angle_grid());
        auto dbm = theory_dbm(grating_theory, grid, -30.0);
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (grid[i] == -10.0)
                dbm[i] -= 1.0;
        const double target[] = {-10.0};
        const auto r = compare(normalize_pattern(to_linear(scan_of(grid, dbm))), grating_theory, target).targets.front();
        c.check(r.found && r.angle_err_deg == 0.0 && near(r.level_err_db, -1.0, equality_tol), fmt("1 dB shortfall -> %.6f dB", r.level_err_db));
        return c.report();
    }
}

int main()
{
    bool ok = true;
    for (auto *f : {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10})
        ok = f() && ok;
    return ok ? 0 : 1;
}
