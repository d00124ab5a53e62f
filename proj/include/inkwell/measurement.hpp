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

// Post-processing of measured azimuth scans: background removal in linear
// power, pattern-wise normalization and scoring against a simulated pattern.

#include "core_model.hpp"
#include "csv.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace inkwell
{
    inline constexpr std::string_view scan_csv_header = "theta_deg,power_dbm";
    inline constexpr std::string_view gain_csv_header = "theta_deg,gain_db";

    struct ScanSample
    {
        double theta_deg;
        double power_dbm;
    };

    struct MeasurementScan
    {
        double incidence_deg = 0.0;
        std::vector<ScanSample> samples;
        std::string meta;

        std::size_t size() const { return samples.size(); }
    };

    // Angle and value pair; the value is mW or dB depending on the stage.
    struct PatternSample
    {
        double theta_deg;
        double value;
    };

    inline MeasurementScan load_scan(std::istream &in, double incidence_deg = 0.0, std::string meta = {})
    {
        MeasurementScan scan{incidence_deg, {}, std::move(meta)};
        const auto rows = csv::read_with_header(in, scan_csv_header);
        for (const auto &row : rows)
        {
            const double theta = csv::parse_double(row.fields[0], row.line_no, "theta_deg");
            const double p = csv::parse_double(row.fields[1], row.line_no, "power_dbm");
            if (theta < -180.0 || theta > 180.0)
                throw ValidationError("line " + std::to_string(row.line_no) + ": theta_deg out of range [-180, 180]");
            if (!scan.samples.empty())
            {
                const double prev = scan.samples.back().theta_deg;
                if (theta == prev)
                    throw ValidationError("line " + std::to_string(row.line_no) + ": duplicate angle " + csv::format(theta) + " deg");
                if (theta < prev)
                    throw ValidationError("line " + std::to_string(row.line_no) + ": angles must be strictly increasing (" +
                                          csv::format(theta) + " after " + csv::format(prev) + ")");
            }
            scan.samples.push_back({theta, p});
        }
        if (scan.samples.size() < 2)
            throw ValidationError("scan needs at least 2 samples, found " + std::to_string(scan.samples.size()));
        return scan;
    }

    inline MeasurementScan load_scan(const std::string &path, double incidence_deg = 0.0)
    {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot open scan file '" + path + "'");
        return load_scan(in, incidence_deg, path);
    }

    inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

    // max(P_meas - P_mount, 0) per angle, in milliwatts.
    inline std::vector<PatternSample> background_subtract(const MeasurementScan &meas, const MeasurementScan &mount)
    {
        detail::require(meas.size() == mount.size(), "measurement and mount scans have different angle grids (" +
                                                         std::to_string(meas.size()) + " vs " + std::to_string(mount.size()) +
                                                         " samples); re-measure on the same azimuth grid");
        std::vector<PatternSample> out;
        out.reserve(meas.size());
        for (std::size_t i = 0; i < meas.size(); ++i)
        {
            const auto &a = meas.samples[i];
            const auto &b = mount.samples[i];
            detail::require(a.theta_deg == b.theta_deg, "measurement and mount scans differ at sample " + std::to_string(i) + " (" +
                                                            csv::format(a.theta_deg) + " vs " + csv::format(b.theta_deg) +
                                                            " deg); re-measure on the same azimuth grid");
            out.push_back({a.theta_deg, std::max(dbm_to_mw(a.power_dbm) - dbm_to_mw(b.power_dbm), 0.0)});
        }
        return out;
    }

    // Scan without background removal, in milliwatts.
    inline std::vector<PatternSample> to_linear(const MeasurementScan &scan)
    {
        std::vector<PatternSample> out;
        out.reserve(scan.size());
        for (const auto &s : scan.samples)
            out.push_back({s.theta_deg, dbm_to_mw(s.power_dbm)});
        return out;
    }

    // Divide by the maximum and convert to dB; zeros land on the floor.
    inline std::vector<PatternSample> normalize_pattern(const std::vector<PatternSample> &linear, double floor_db = gain_floor_db)
    {
        double peak = 0.0;
        for (const auto &s : linear)
        {
            detail::require(std::isfinite(s.value) && s.value >= 0.0, "linear pattern values must be finite and non-negative");
            peak = std::max(peak, s.value);
        }
        detail::require(peak > 0.0, "no reflector signal above background");
        std::vector<PatternSample> out;
        out.reserve(linear.size());
        for (const auto &s : linear)
            out.push_back({s.theta_deg, s.value == peak ? 0.0 : to_db(s.value / peak, floor_db)});
        return out;
    }

    // Normalized pattern (dB) back to linear, for re-normalization.
    inline std::vector<PatternSample> db_to_linear(const std::vector<PatternSample> &db)
    {
        std::vector<PatternSample> out;
        out.reserve(db.size());
        for (const auto &s : db)
            out.push_back({s.theta_deg, std::pow(10.0, s.value / 10.0)});
        return out;
    }

    inline void write_gain_csv(std::ostream &out, const std::vector<PatternSample> &db)
    {
        out << gain_csv_header << '\n';
        for (const auto &s : db)
            out << csv::format(s.theta_deg) << ',' << csv::format(s.value) << '\n';
    }

    inline std::vector<PatternSample> read_gain_csv(std::istream &in)
    {
        std::vector<PatternSample> out;
        for (const auto &row : csv::read_with_header(in, gain_csv_header))
        {
            const double theta = csv::parse_double(row.fields[0], row.line_no, "theta_deg");
            const double g = csv::parse_double(row.fields[1], row.line_no, "gain_db");
            if (!out.empty() && theta <= out.back().theta_deg)
                throw ValidationError("line " + std::to_string(row.line_no) + ": angles must be strictly increasing");
            out.push_back({theta, g});
        }
        detail::require(!out.empty(), "gain file has no samples");
        return out;
    }

    // Theory pattern in dB relative to its own maximum, linearly interpolated in dB onto `grid`.
    inline std::vector<PatternSample> resample_theory_db(const AngularPattern &theory, std::span<const double> grid, double floor_db = gain_floor_db)
    {
        detail::require(theory.size() >= 1, "theory pattern is empty");
        double peak = 0.0;
        for (double g : theory.gain)
            peak = std::max(peak, g);
        detail::require(peak > 0.0, "theory pattern has no energy");
        std::vector<double> db(theory.size());
        for (std::size_t i = 0; i < theory.size(); ++i)
            db[i] = to_db(theory.gain[i] / peak, floor_db);

        const auto &t = theory.theta_deg;
        std::vector<PatternSample> out;
        out.reserve(grid.size());
        for (double th : grid)
        {
            detail::require(th >= t.front() - 1e-9 && th <= t.back() + 1e-9,
                            "measured angle " + csv::format(th) + " deg lies outside the theory grid");
            auto it = std::lower_bound(t.begin(), t.end(), th);
            std::size_t j = std::size_t(it - t.begin());
            if (j < t.size() && std::abs(t[j] - th) <= 1e-9)
            {
                out.push_back({th, db[j]});
                continue;
            }
            if (j == 0)
                j = 1;
            if (j >= t.size())
                j = t.size() - 1;
            const double w = (th - t[j - 1]) / (t[j] - t[j - 1]);
            out.push_back({th, db[j - 1] + w * (db[j] - db[j - 1])});
        }
        return out;
    }

    struct TargetComparison
    {
        double theta_deg = 0.0;
        bool found = false;
        double angle_err_deg = 0.0; // measured peak angle - theory peak angle
        double level_err_db = 0.0;  // measured peak level - theory peak level
        double measured_peak_deg = 0.0;
        double theory_peak_deg = 0.0;
    };

    struct ComparisonReport
    {
        std::vector<TargetComparison> targets;
        double rms_db = 0.0;
        std::size_t rms_samples = 0;
        double floor_db = gain_floor_db;
    };

    // Index of the local maximum (>= both neighbours, above the floor) closest to
    // `target` within +-window; ties go to the higher sample.
    inline std::optional<std::size_t> nearest_local_peak(const std::vector<PatternSample> &p, double target, double window_deg,
                                                         double floor_db)
    {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < p.size(); ++i)
        {
            const double v = p[i].value;
            if (std::abs(p[i].theta_deg - target) > window_deg || v <= floor_db)
                continue;
            if ((i > 0 && p[i - 1].value > v) || (i + 1 < p.size() && p[i + 1].value > v))
                continue;
            if (!best)
            {
                best = i;
                continue;
            }
            const double d_new = std::abs(p[i].theta_deg - target);
            const double d_old = std::abs(p[*best].theta_deg - target);
            if (d_new < d_old || (d_new == d_old && v > p[*best].value))
                best = i;
        }
        return best;
    }

    inline ComparisonReport compare(const std::vector<PatternSample> &measured_db, const AngularPattern &theory,
                                    std::span<const double> targets_deg, double floor_db = gain_floor_db, double window_deg = 10.0)
    {
        detail::require(!measured_db.empty(), "measured pattern is empty");
        std::vector<double> grid;
        grid.reserve(measured_db.size());
        for (const auto &s : measured_db)
            grid.push_back(s.theta_deg);
        const auto theory_db = resample_theory_db(theory, grid, floor_db);

        ComparisonReport report;
        report.floor_db = floor_db;
        for (double target : targets_deg)
        {
            TargetComparison tc;
            tc.theta_deg = target;
            const auto m = nearest_local_peak(measured_db, target, window_deg, floor_db);
            const auto t = nearest_local_peak(theory_db, target, window_deg, floor_db);
            if (m && t)
            {
                tc.found = true;
                tc.measured_peak_deg = measured_db[*m].theta_deg;
                tc.theory_peak_deg = theory_db[*t].theta_deg;
                tc.angle_err_deg = tc.measured_peak_deg - tc.theory_peak_deg;
                tc.level_err_db = measured_db[*m].value - theory_db[*t].value;
            }
            report.targets.push_back(tc);
        }

        double acc = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            if (measured_db[i].value > floor_db && theory_db[i].value > floor_db)
            {
                const double e = measured_db[i].value - theory_db[i].value;
                acc += e * e;
                ++report.rms_samples;
            }
        }
        report.rms_db = report.rms_samples ? std::sqrt(acc / double(report.rms_samples)) : 0.0;
        return report;
    }

    inline nlohmann::ordered_json to_json(const ComparisonReport &r)
    {
        nlohmann::ordered_json j;
        j["targets"] = nlohmann::ordered_json::array();
        for (const auto &t : r.targets)
        {
            nlohmann::ordered_json e;
            e["theta"] = t.theta_deg;
            e["angle_err_deg"] = t.angle_err_deg;
            e["level_err_db"] = t.level_err_db;
            e["found"] = t.found;
            if (t.found)
            {
                e["measured_peak_deg"] = t.measured_peak_deg;
                e["theory_peak_deg"] = t.theory_peak_deg;
            }
            j["targets"].push_back(e);
        }
        j["rms_db"] = r.rms_db;
        j["rms_samples"] = r.rms_samples;
        j["floor_db"] = r.floor_db;
        return j;
    }
}
