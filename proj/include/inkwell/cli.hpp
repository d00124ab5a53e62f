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

#pragma once

// Command-line front end. Lengths are millimeters on the command line and
// meters everywhere else; the conversion happens here and nowhere else.

#include "bounds_lab.hpp"
#include "diffraction_design.hpp"
#include "fab_export.hpp"
#include "figures.hpp"
#include "mask_file.hpp"
#include "mask_synthesis.hpp"
#include "measurement.hpp"
#include "pattern_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace inkwell::cli
{
    enum ExitCode : int
    {
        ok = 0,
        validation_failure = 1,
        io_failure = 2,
    };

    namespace detail
    {
        inline constexpr double mm = 1e-3;

        inline void write_text(const std::string &path, const std::string &text)
        {
            std::ofstream f(path, std::ios::binary);
            if (!f)
                throw IoError("cannot open '" + path + "' for writing");
            f << text;
            if (!f)
                throw IoError("failed writing '" + path + "'");
        }

        inline std::string read_text(const std::string &path)
        {
            std::ifstream f(path, std::ios::binary);
            if (!f)
                throw IoError("cannot open '" + path + "' for reading");
            std::ostringstream ss;
            ss << f.rdbuf();
            return ss.str();
        }

        inline std::string first_line(const std::string &text)
        {
            std::istringstream in(text);
            std::string line;
            while (std::getline(in, line))
            {
                const auto t = csv::trim(line);
                if (!t.empty())
                    return std::string(t);
            }
            return {};
        }

        inline std::string fixed(double v, int digits)
        {
            std::ostringstream os;
            os << std::fixed << std::setprecision(digits) << v;
            return os.str();
        }

        inline std::vector<BeamTarget> unit_targets(const std::vector<double> &deg)
        {
            std::vector<BeamTarget> t;
            for (double d : deg)
                t.push_back({d, {1.0, 0.0}});
            return t;
        }

        // Reads a measured pattern and returns it normalized in dB. Accepts a raw
        // scan (optionally with a mount background), a gain CSV or a pattern CSV.
        inline std::vector<PatternSample> load_measured(const std::string &path, const std::string &mount_path, double floor_db)
        {
            const std::string text = read_text(path);
            const std::string head = first_line(text);
            std::istringstream in(text);
            if (head == scan_csv_header)
            {
                const auto meas = load_scan(in, 0.0, path);
                if (mount_path.empty())
                    return normalize_pattern(to_linear(meas), floor_db);
                std::istringstream min(read_text(mount_path));
                const auto mount = load_scan(min, 0.0, mount_path);
                return normalize_pattern(background_subtract(meas, mount), floor_db);
            }
            inkwell::detail::require(mount_path.empty(), "--mount applies only to raw theta_deg,power_dbm scans");
            if (head == gain_csv_header)
                return normalize_pattern(db_to_linear(read_gain_csv(in)), floor_db);
            if (head == pattern_csv_header)
            {
                const auto p = read_pattern_csv(in);
                std::vector<PatternSample> lin;
                for (std::size_t i = 0; i < p.size(); ++i)
                    lin.push_back({p.theta_deg[i], p.gain[i]});
                return normalize_pattern(lin, floor_db);
            }
            throw ValidationError("'" + path + "': unrecognized CSV header '" + head + "'");
        }
    }

    // Runs one invocation; `args` excludes the program name.
    inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"inkwell: design and verification toolkit for passive mmWave reflectors", "inkwell"};
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all", "Show help for all subcommands");

        std::function<void()> action;

        // design-mask
        struct
        {
            double theta_i = 0.0;
            std::vector<double> targets;
            std::size_t m = 35;
            double d0_mm = 2.5;
            double lambda_mm = 5.0;
            double psi = 0.0;
            std::size_t psi_search = 0;
            std::string out;
        } dm;
        auto *design_mask = app.add_subcommand("design-mask", "Synthesize a 1-bit ON/OFF mask by cosine thresholding");
        design_mask->add_option("--theta-i", dm.theta_i, "Incidence angle [deg]")->required();
        design_mask->add_option("--target", dm.targets, "Target departure angle [deg], repeatable")->required()->delimiter(',');
        design_mask->add_option("--m", dm.m, "Element count")->capture_default_str();
        design_mask->add_option("--d0-mm", dm.d0_mm, "Lattice pitch [mm]")->capture_default_str();
        design_mask->add_option("--lambda-mm", dm.lambda_mm, "Wavelength [mm]")->capture_default_str();
        design_mask->add_option("--psi", dm.psi, "Threshold rotation [rad] in [0, 2pi)")->capture_default_str();
        design_mask->add_option("--psi-search", dm.psi_search, "Pick psi from an N-point grid instead of --psi (0 = off)");
        design_mask->add_option("--out", dm.out, "Mask file to write (JSON)");
        design_mask->callback([&] {
            action = [&] {
                const Aperture ap(dm.m, dm.d0_mm * detail::mm, dm.lambda_mm * detail::mm);
                SteeringTask task(dm.theta_i, detail::unit_targets(dm.targets), dm.psi);
                if (dm.psi_search > 0)
                    task = task.with_psi(select_psi(ap, task, dm.psi_search).psi);
                const auto mask = synthesize_mask(ap, task);
                const auto bits = mask.bits();
                std::size_t on = 0;
                for (auto b : bits)
                    on += b;
                out << "M              " << ap.size() << "\n";
                out << "psi_rad        " << csv::format(task.psi()) << "\n";
                out << "on_count       " << on << "\n";
                out << "eta_M          " << detail::fixed(thinning_ratio(mask), 6) << "\n";
                out << "bits           " << bits_to_string(bits) << "\n";
                const auto ideal = ideal_continuous_weights(ap, task);
                for (const auto &t : task.targets())
                {
                    const double g = gain_at(ap, mask, t.theta_deg, task.incidence_deg());
                    const double gi = gain_at(ap, ideal, t.theta_deg, task.incidence_deg());
                    out << "target " << csv::format(t.theta_deg) << " deg: gain " << detail::fixed(to_db(g), 3) << " dB, ideal "
                        << detail::fixed(to_db(gi), 3) << " dB\n";
                }
                if (!dm.out.empty())
                {
                    save_mask_file(dm.out, make_mask_file(ap, task, mask));
                    out << "wrote " << dm.out << "\n";
                }
            };
        });

        // design-period
        struct
        {
            double theta_i = 0.0;
            double target = 0.0;
            double lambda_mm = 5.0;
            int order = 0;
            double d0_mm = 0.0;
            int wells = 35;
            std::vector<double> extra;
            double tolerance = 0.5;
            std::string out;
        } dp;
        auto *design_period_cmd = app.add_subcommand("design-period", "Uniform-period (diffraction-order) steering design");
        design_period_cmd->add_option("--theta-i", dp.theta_i, "Incidence angle [deg]")->required();
        design_period_cmd->add_option("--target", dp.target, "Target departure angle [deg]")->required();
        design_period_cmd->add_option("--lambda-mm", dp.lambda_mm, "Wavelength [mm]")->capture_default_str();
        design_period_cmd->add_option("--order", dp.order, "Diffraction order n (default: sign of the target offset)");
        design_period_cmd->add_option("--d0-mm", dp.d0_mm, "Scaffold pitch [mm]; enables grid snapping");
        design_period_cmd->add_option("--wells", dp.wells, "Wells per scaffold row")->capture_default_str();
        design_period_cmd->add_option("--extra-target", dp.extra, "Additional direction to check against visible orders [deg]")
            ->delimiter(',');
        design_period_cmd->add_option("--tolerance", dp.tolerance, "Coverage tolerance for --extra-target [deg]")->capture_default_str();
        design_period_cmd->add_option("--out", dp.out, "Mask file of the snapped stride pattern (requires --d0-mm)");
        design_period_cmd->callback([&] {
            action = [&] {
                const int order = dp.order != 0 ? dp.order : default_order(dp.theta_i, dp.target);
                auto design = design_period(dp.theta_i, dp.target, dp.lambda_mm * detail::mm, order);
                out << "order          " << order << "\n";
                out << "delta          " << detail::fixed(design.period * 1e3, 3) << " mm\n";
                const auto orders = visible_orders(design.period, design.wavelength, dp.theta_i);
                out << "visible orders " << orders.n_min << " .. " << orders.n_max << " (" << orders.count() << ")\n";
                for (const auto &o : orders.directions)
                    out << "  n=" << o.order << "  theta=" << detail::fixed(o.theta_deg, 3) << " deg\n";
                if (dp.d0_mm > 0.0)
                {
                    design = snap_design(design, dp.d0_mm * detail::mm, dp.wells);
                    const auto &s = *design.snapped;
                    out << "snapped        stride " << s.stride << ", delta " << detail::fixed(s.delta_actual * 1e3, 3)
                        << " mm, active elements " << s.m_active << "\n";
                }
                if (!dp.extra.empty())
                {
                    for (const auto &c : multibeam_period_check(design, dp.extra, dp.tolerance))
                    {
                        out << "target " << csv::format(c.target_deg) << " deg: ";
                        if (c.order)
                            out << "nearest order " << *c.order << " at " << detail::fixed(*c.order_deg, 3) << " deg, ";
                        out << (c.covered ? "covered" : "not covered") << "\n";
                    }
                }
                if (!dp.out.empty())
                {
                    inkwell::detail::require(design.snapped.has_value(), "--out needs --d0-mm to snap the period onto the scaffold");
                    save_mask_file(dp.out, to_mask_file(design));
                    out << "wrote " << dp.out << "\n";
                }
            };
        });

        // simulate
        struct
        {
            std::string mask;
            std::string scheme = "mask";
            double start = -90.0;
            double stop = 90.0;
            double step = 0.5;
            std::size_t normalize = 0;
            std::string out;
        } sm;
        auto *simulate = app.add_subcommand("simulate", "Array-factor pattern of a mask file");
        simulate->add_option("--mask", sm.mask, "Mask file (JSON)")->required();
        simulate->add_option("--scheme", sm.scheme, "Weights to simulate")
            ->check(CLI::IsMember({"mask", "all-on", "bipolar", "ideal"}))
            ->capture_default_str();
        simulate->add_option("--grid-start", sm.start, "First angle [deg]")->capture_default_str();
        simulate->add_option("--grid-stop", sm.stop, "Last angle [deg]")->capture_default_str();
        simulate->add_option("--grid-step", sm.step, "Angle step [deg]")->capture_default_str();
        simulate->add_option("--normalize-m", sm.normalize, "Element count used in |p|^2/M^2 (default: mask length)");
        simulate->add_option("--out", sm.out, "Pattern CSV to write (default: standard output)");
        simulate->callback([&] {
            action = [&] {
                const auto f = load_mask_file(sm.mask);
                const auto ap = f.aperture();
                const auto task = f.task();
                ReflectionCoefficients c = f.coefficients();
                if (sm.scheme == "all-on")
                    c = ReflectionCoefficients::all_on(ap.size());
                else if (sm.scheme == "ideal")
                    c = ideal_continuous_weights(ap, task);
                else if (sm.scheme == "bipolar")
                {
                    std::vector<int> w(ap.size());
                    const auto s = multibeam_profile(ap, task);
                    for (std::size_t m = 0; m < s.size(); ++m)
                        w[m] = s[m].real() >= 0.0 ? 1 : -1;
                    c = ReflectionCoefficients::bipolar(w);
                }
                const auto grid = angle_grid(sm.start, sm.stop, sm.step);
                const auto pat = pattern_sweep(ap, c, f.theta_i_deg, grid, sm.normalize);
                if (sm.out.empty())
                {
                    write_pattern_csv(out, pat);
                    return;
                }
                save_pattern_csv(sm.out, pat);
                std::size_t peak = 0;
                for (std::size_t i = 1; i < pat.size(); ++i)
                    if (pat.gain[i] > pat.gain[peak])
                        peak = i;
                out << "peak           " << csv::format(pat.theta_deg[peak]) << " deg, " << detail::fixed(pat.gain_db(peak), 3) << " dB\n";
                out << "wrote " << sm.out << "\n";
            };
        });

        // verify-bounds
        struct
        {
            std::size_t trials = 1000;
            std::size_t m_min = 8;
            std::size_t m_max = 14;
            std::uint64_t seed = 1;
            std::size_t rotation_samples = 4096;
            std::string out;
        } vb;
        auto *verify = app.add_subcommand("verify-bounds", "Check the 1/pi^2 ON/OFF gain bound on random instances");
        verify->add_option("--trials", vb.trials, "Random instances")->capture_default_str();
        verify->add_option("--m-min", vb.m_min, "Smallest element count")->capture_default_str();
        verify->add_option("--m-max", vb.m_max, "Largest element count")->capture_default_str();
        verify->add_option("--seed", vb.seed, "Generator seed")->capture_default_str();
        verify->add_option("--rotation-samples", vb.rotation_samples, "Samples of the rotation average")->capture_default_str();
        verify->add_option("--out", vb.out, "JSON report to write");
        verify->callback([&] {
            action = [&] {
                const auto r = verify_gain_bound(vb.trials, vb.m_min, vb.m_max, vb.seed, vb.rotation_samples);
                out << "trials         " << r.trials << "\n";
                out << "min gamma*     " << csv::format(r.min_gamma_star) << "\n";
                out << "bound          " << csv::format(r.bound) << "\n";
                out << "rotation mean  " << csv::format(r.mean_rotation_gain) << "\n";
                out << "violations=" << r.violations << "\n";
                if (!vb.out.empty())
                {
                    detail::write_text(vb.out, to_json(r).dump(2) + "\n");
                    out << "wrote " << vb.out << "\n";
                }
                if (r.violations > 0)
                    throw ValidationError("gain bound violated on " + std::to_string(r.violations) + " instance(s)");
            };
        });

        // thinning
        struct
        {
            double theta_i = 60.0;
            double target = -30.0;
            double d0_mm = 2.5;
            double lambda_mm = 5.0;
            std::size_t m_min = 1;
            std::size_t m_max = 200;
            std::size_t m_step = 1;
            std::string out;
        } th;
        auto *thinning = app.add_subcommand("thinning", "Thinning ratio of the cosine-threshold mask versus M");
        thinning->add_option("--theta-i", th.theta_i, "Incidence angle [deg]")->capture_default_str();
        thinning->add_option("--target", th.target, "Target departure angle [deg]")->capture_default_str();
        thinning->add_option("--d0-mm", th.d0_mm, "Lattice pitch [mm]")->capture_default_str();
        thinning->add_option("--lambda-mm", th.lambda_mm, "Wavelength [mm]")->capture_default_str();
        thinning->add_option("--m-min", th.m_min, "Smallest M")->capture_default_str();
        thinning->add_option("--m-max", th.m_max, "Largest M")->capture_default_str();
        thinning->add_option("--m-step", th.m_step, "Step in M")->capture_default_str();
        thinning->add_option("--out", th.out, "CSV to write (default: standard output)");
        thinning->callback([&] {
            action = [&] {
                inkwell::detail::require(th.m_min >= 1 && th.m_min <= th.m_max && th.m_step >= 1, "need 1 <= m-min <= m-max and m-step >= 1");
                std::vector<std::size_t> counts;
                for (std::size_t m = th.m_min; m <= th.m_max; m += th.m_step)
                    counts.push_back(m);
                std::ostringstream csvout;
                csvout << "M,eta\n";
                for (const auto &p : thinning_convergence(th.theta_i, th.target, th.d0_mm * detail::mm, th.lambda_mm * detail::mm, counts))
                    csvout << p.count << ',' << csv::format(p.eta) << '\n';
                if (th.out.empty())
                    out << csvout.str();
                else
                {
                    detail::write_text(th.out, csvout.str());
                    out << "wrote " << th.out << "\n";
                }
            };
        });

        // export-stl
        struct
        {
            std::string mask;
            bool all_on = false;
            std::string prefix;
            std::string report;
            InkwellDims dims;
            double pitch_mm = 2.5, well_mm = 2.2, depth_mm = 0.4, base_mm = 0.8, side_mm = 90.0, stencil_mm = 0.8, stencil_open_mm = 2.1;
        } ex;
        auto *export_stl = app.add_subcommand("export-stl", "Printable base, pad and stencil solids as binary STL");
        auto *mask_opt = export_stl->add_option("--mask", ex.mask, "Mask file (JSON)");
        export_stl->add_flag("--all-on", ex.all_on, "Metallize every well")->excludes(mask_opt);
        export_stl->add_option("--out-prefix", ex.prefix, "Output prefix; writes <prefix>_base.stl, _pads.stl, _stencil.stl")->required();
        export_stl->add_option("--rows", ex.dims.rows, "Scaffold rows")->capture_default_str();
        export_stl->add_option("--cols", ex.dims.cols, "Scaffold columns")->capture_default_str();
        export_stl->add_option("--pitch-mm", ex.pitch_mm, "Well pitch [mm]")->capture_default_str();
        export_stl->add_option("--well-mm", ex.well_mm, "Well opening [mm]")->capture_default_str();
        export_stl->add_option("--depth-mm", ex.depth_mm, "Well depth [mm]")->capture_default_str();
        export_stl->add_option("--base-mm", ex.base_mm, "Base thickness [mm]")->capture_default_str();
        export_stl->add_option("--side-mm", ex.side_mm, "Plate side [mm]")->capture_default_str();
        export_stl->add_option("--stencil-mm", ex.stencil_mm, "Stencil thickness [mm]")->capture_default_str();
        export_stl->add_option("--stencil-opening-mm", ex.stencil_open_mm, "Stencil opening [mm]")->capture_default_str();
        export_stl->add_option("--report", ex.report, "Layout report to write (text)");
        export_stl->callback([&] {
            action = [&] {
                inkwell::detail::require(ex.all_on || !ex.mask.empty(), "give --mask or --all-on");
                auto d = ex.dims;
                d.pitch = ex.pitch_mm * detail::mm;
                d.well_opening = ex.well_mm * detail::mm;
                d.well_depth = ex.depth_mm * detail::mm;
                d.base_thickness = ex.base_mm * detail::mm;
                d.aperture_side = ex.side_mm * detail::mm;
                d.stencil_thickness = ex.stencil_mm * detail::mm;
                d.stencil_opening = ex.stencil_open_mm * detail::mm;
                validate(d);
                const auto mask = ex.all_on ? ReflectionCoefficients::all_on(d.cols) : load_mask_file(ex.mask).coefficients();
                const auto layout = build_layout(stripe_mask_2d(mask, d.rows), d);
                const std::pair<std::string, stl::Mesh> solids[] = {
                    {ex.prefix + "_base.stl", base_plate_mesh(layout)},
                    {ex.prefix + "_pads.stl", pad_mesh(layout)},
                    {ex.prefix + "_stencil.stl", stencil_mesh(layout)},
                };
                const std::string report = layout_report(layout);
                out << report;
                for (const auto &[path, mesh] : solids)
                {
                    stl::write_binary(path, mesh, stl_header);
                    out << "wrote " << path << " (" << mesh.size() << " triangles)\n";
                }
                if (!ex.report.empty())
                {
                    detail::write_text(ex.report, report);
                    out << "wrote " << ex.report << "\n";
                }
            };
        });

        // compare
        struct
        {
            std::string meas;
            std::string mount;
            std::string theory;
            std::string mask;
            std::vector<double> targets;
            double floor_db = gain_floor_db;
            double window = 10.0;
            std::string out;
            std::string out_csv;
        } cp;
        auto *compare_cmd = app.add_subcommand("compare", "Score a measured pattern against theory");
        compare_cmd->add_option("--meas", cp.meas, "Measured scan (theta_deg,power_dbm), gain CSV or pattern CSV")->required();
        compare_cmd->add_option("--mount", cp.mount, "Mount-only background scan (theta_deg,power_dbm)");
        auto *theory_opt = compare_cmd->add_option("--theory", cp.theory, "Theory pattern CSV");
        compare_cmd->add_option("--mask", cp.mask, "Mask file to simulate as theory (0.5 deg grid)")->excludes(theory_opt);
        compare_cmd->add_option("--target", cp.targets, "Beam direction to score [deg], repeatable")->required()->delimiter(',');
        compare_cmd->add_option("--floor-db", cp.floor_db, "Floor sentinel [dB]")->capture_default_str();
        compare_cmd->add_option("--window-deg", cp.window, "Peak search half-width [deg]")->capture_default_str();
        compare_cmd->add_option("--out", cp.out, "Comparison report (JSON)");
        compare_cmd->add_option("--out-csv", cp.out_csv, "Normalized measured pattern (theta_deg,gain_db)");
        compare_cmd->callback([&] {
            action = [&] {
                inkwell::detail::require(!cp.theory.empty() || !cp.mask.empty(), "give --theory or --mask");
                inkwell::detail::require(cp.floor_db < 0.0, "floor must be negative");
                const auto measured = detail::load_measured(cp.meas, cp.mount, cp.floor_db);
                AngularPattern theory;
                if (!cp.theory.empty())
                    theory = load_pattern_csv(cp.theory);
                else
                {
                    const auto f = load_mask_file(cp.mask);
                    const auto grid = default_angle_grid();
                    theory = pattern_sweep(f.aperture(), f.coefficients(), f.theta_i_deg, grid);
                }
                const auto report = compare(measured, theory, cp.targets, cp.floor_db, cp.window);
                for (const auto &t : report.targets)
                {
                    out << "target " << csv::format(t.theta_deg) << " deg: ";
                    if (!t.found)
                        out << "missing beam\n";
                    else
                        out << "angle error " << detail::fixed(t.angle_err_deg, 3) << " deg, level error " << detail::fixed(t.level_err_db, 3)
                            << " dB\n";
                }
                out << "rms            " << detail::fixed(report.rms_db, 3) << " dB over " << report.rms_samples << " samples\n";
                if (!cp.out.empty())
                {
                    detail::write_text(cp.out, to_json(report).dump(2) + "\n");
                    out << "wrote " << cp.out << "\n";
                }
                if (!cp.out_csv.empty())
                {
                    std::ostringstream os;
                    write_gain_csv(os, measured);
                    detail::write_text(cp.out_csv, os.str());
                    out << "wrote " << cp.out_csv << "\n";
                }
            };
        });

        // reproduce-figure
        struct
        {
            std::string id;
            std::string out_dir = ".";
        } rf;
        auto *reproduce = app.add_subcommand("reproduce-figure", "Regenerate a preset theory curve as CSV");
        std::vector<std::string> ids;
        for (const auto &p : figure_presets)
            ids.emplace_back(p.id);
        reproduce->add_option("figure", rf.id, "Figure identifier")->required()->check(CLI::IsMember(ids));
        reproduce->add_option("--out-dir", rf.out_dir, "Directory for <figure>.csv")->capture_default_str();
        reproduce->callback([&] {
            action = [&] {
                const auto table = reproduce_figure(rf.id);
                std::ostringstream os;
                write_figure_csv(os, table);
                std::error_code ec;
                std::filesystem::create_directories(rf.out_dir, ec);
                if (ec)
                    throw IoError("cannot create directory '" + rf.out_dir + "': " + ec.message());
                const std::string path = (std::filesystem::path(rf.out_dir) / (rf.id + ".csv")).string();
                detail::write_text(path, os.str());
                out << figure_preset(rf.id).title << "\n";
                for (const auto &n : table.notes)
                    out << "  " << n << "\n";
                out << "wrote " << path << "\n";
            };
        });

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &)
        {
            const auto subs = app.get_subcommands();
            out << (subs.empty() ? app.help() : subs.back()->help());
            return ok;
        }
        catch (const CLI::CallForAllHelp &)
        {
            out << app.help("", CLI::AppFormatMode::All);
            return ok;
        }
        catch (const CLI::ParseError &e)
        {
            const auto subs = app.get_subcommands();
            err << "error: " << e.what() << "\n\n" << (subs.empty() ? app.help() : subs.back()->help());
            return validation_failure;
        }

        try
        {
            action();
            return ok;
        }
        catch (const IoError &e)
        {
            err << "error: " << e.what() << "\n";
            return io_failure;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << "\n";
            return validation_failure;
        }
    }
}
