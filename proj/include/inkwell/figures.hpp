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

// Pinned parameter sets for the reference theory curves, and the code that
// regenerates them as wide CSV tables.

#include "bounds_lab.hpp"
#include "csv.hpp"
#include "diffraction_design.hpp"
#include "mask_synthesis.hpp"

#include <array>
#include <ostream>

namespace inkwell
{
    struct FigurePreset
    {
        std::string_view id;
        std::string_view title;
        double theta_i_deg;
        std::array<double, 2> targets_deg; // second entry NaN for single-beam presets
        std::size_t count;                 // dense scaffold width M
        double d0;
        double wavelength;
        int order; // diffraction order used for the period column, 0 if none
    };

    inline constexpr double no_target = std::numeric_limits<double>::quiet_NaN();

    inline constexpr std::array<FigurePreset, 7> figure_presets{{
        {"fig2a", "thinning ratio versus element count", 60.0, {-30.0, no_target}, 200, 2.5e-3, 5e-3, 0},
        {"fig2b", "normalized gain versus sine sum, M=64, d0/lambda=0.5", 0.0, {0.0, no_target}, 64, 2.5e-3, 5e-3, 0},
        {"fig3", "single beam, four aperture-control schemes", 45.0, {-10.0, no_target}, 35, 2.5e-3, 5e-3, 0},
        {"fig5", "diffraction-order steering, all elements on", 45.0, {-10.0, no_target}, 35, 2.5e-3, 5e-3, 1},
        {"fig6", "two beams, mask synthesis and diffraction order", 30.0, {-7.8, -60.0}, 35, 2.5e-3, 5e-3, -1},
        {"fig7a", "aperture-matched single beam", 45.0, {-10.0, no_target}, 35, 2.5e-3, 5e-3, 1},
        {"fig7b", "aperture-matched two beams", 60.0, {-30.0, -7.8}, 35, 2.5e-3, 5e-3, 1},
    }};

    inline const FigurePreset &figure_preset(std::string_view id)
    {
        for (const auto &p : figure_presets)
            if (p.id == id)
                return p;
        std::string known;
        for (const auto &p : figure_presets)
            known += (known.empty() ? "" : ", ") + std::string(p.id);
        throw ValidationError("unknown figure '" + std::string(id) + "' (known: " + known + ")");
    }

    // Wide table: one abscissa column and any number of named series.
    struct FigureTable
    {
        std::string id;
        std::string x_name;
        std::vector<double> x;
        std::vector<std::pair<std::string, std::vector<double>>> series;
        std::vector<std::string> notes;
    };

    namespace detail
    {
        inline SteeringTask preset_task(const FigurePreset &p)
        {
            std::vector<BeamTarget> t{{p.targets_deg[0], {1.0, 0.0}}};
            if (!std::isnan(p.targets_deg[1]))
                t.push_back({p.targets_deg[1], {1.0, 0.0}});
            return SteeringTask(p.theta_i_deg, std::move(t));
        }

        inline std::vector<double> gain_db_column(const AngularPattern &pat)
        {
            std::vector<double> v(pat.size());
            for (std::size_t i = 0; i < pat.size(); ++i)
                v[i] = pat.gain_db(i);
            return v;
        }

        inline std::string fmt(double v) { return csv::format(v); }
    }

    inline FigureTable reproduce_figure(std::string_view id)
    {
        const auto &p = figure_preset(id);
        FigureTable t;
        t.id = std::string(p.id);

        if (p.id == "fig2a")
        {
            t.x_name = "M";
            std::vector<std::size_t> counts;
            for (std::size_t m = 1; m <= p.count; ++m)
                counts.push_back(m);
            std::vector<double> eta;
            for (const auto &pt : thinning_convergence(p.theta_i_deg, p.targets_deg[0], p.d0, p.wavelength, counts))
            {
                t.x.push_back(double(pt.count));
                eta.push_back(pt.eta);
            }
            t.series.emplace_back("eta", std::move(eta));
            return t;
        }

        if (p.id == "fig2b")
        {
            t.x_name = "sine_sum";
            const auto sweep = worst_case_sweep(p.count, p.d0 / p.wavelength, 0.01);
            std::vector<double> ideal, onoff, bip, psi0;
            for (const auto &pt : sweep.points)
            {
                t.x.push_back(pt.sine_sum);
                ideal.push_back(0.0);
                onoff.push_back(to_db(pt.gamma_onoff));
                bip.push_back(to_db(pt.gamma_bipolar));
                psi0.push_back(to_db(pt.gamma_onoff_psi0));
            }
            t.series.emplace_back("ideal_db", std::move(ideal));
            t.series.emplace_back("onoff_optimal_db", std::move(onoff));
            t.series.emplace_back("bipolar_optimal_db", std::move(bip));
            t.series.emplace_back("onoff_psi0_db", std::move(psi0));
            t.notes.push_back("worst ON/OFF loss " + detail::fmt(sweep.worst_onoff_loss_db) + " dB");
            t.notes.push_back("worst bipolar loss " + detail::fmt(sweep.worst_bipolar_loss_db) + " dB");
            return t;
        }

        const auto grid = default_angle_grid();
        t.x_name = "theta_deg";
        t.x = grid;
        const Aperture dense(p.count, p.d0, p.wavelength);
        const auto task = detail::preset_task(p);
        const bool single = task.targets().size() == 1;
        auto add = [&](std::string name, const Aperture &ap, const ReflectionCoefficients &c, std::size_t norm = 0)
        { t.series.emplace_back(std::move(name), detail::gain_db_column(pattern_sweep(ap, c, p.theta_i_deg, grid, norm))); };

        const auto onoff = synthesize_mask(dense, task);
        const auto ideal = ideal_continuous_weights(dense, task);

        if (p.id == "fig3")
        {
            add("all_on_db", dense, ReflectionCoefficients::all_on(p.count));
            add("onoff_db", dense, onoff);
            add("bipolar_db", dense, quantize_bipolar(ideal_phase_profile(dense, p.theta_i_deg, p.targets_deg[0])));
            add("ideal_db", dense, ideal);
            return t;
        }

        const double delta = period_for_target(p.theta_i_deg, single ? p.targets_deg[0] : p.targets_deg[p.id == "fig6" ? 1 : 0],
                                               p.wavelength, p.order);
        t.notes.push_back("period " + detail::fmt(delta * 1e3) + " mm, order " + std::to_string(p.order));

        if (p.id == "fig5")
        {
            add("diffraction_db", Aperture(p.count, delta, p.wavelength), ReflectionCoefficients::all_on(p.count));
            return t;
        }

        if (p.id == "fig6")
        {
            std::vector<int> w(p.count);
            const auto s = multibeam_profile(dense, task);
            for (std::size_t m = 0; m < p.count; ++m)
                w[m] = s[m].real() >= 0.0 ? 1 : -1;
            add("onoff_db", dense, onoff);
            add("bipolar_db", dense, ReflectionCoefficients::bipolar(w));
            add("ideal_db", dense, ideal);
            add("diffraction_db", Aperture(p.count, delta, p.wavelength), ReflectionCoefficients::all_on(p.count));
            return t;
        }

        // Aperture-matched: the periodic design only keeps the elements that fit
        // on the dense scaffold, normalized to the scaffold's M.
        const auto design = snap_design(design_period(p.theta_i_deg, p.targets_deg[0], p.wavelength, p.order), p.d0, int(p.count));
        const auto sparse = matched_aperture(design);
        t.notes.push_back("active elements " + std::to_string(design.snapped->m_active) + " at stride " +
                          std::to_string(design.snapped->stride));
        add("onoff_db", dense, onoff);
        add("ideal_db", dense, ideal);
        add("diffraction_db", sparse, ReflectionCoefficients::all_on(sparse.size()), p.count);
        const auto snapped = stride_mask(design.snapped->stride, int(p.count));
        add("diffraction_snapped_db", dense, snapped);
        return t;
    }

    inline void write_figure_csv(std::ostream &out, const FigureTable &t)
    {
        out << t.x_name;
        for (const auto &s : t.series)
            out << ',' << s.first;
        out << '\n';
        for (std::size_t i = 0; i < t.x.size(); ++i)
        {
            out << csv::format(t.x[i]);
            for (const auto &s : t.series)
                out << ',' << csv::format(s.second[i]);
            out << '\n';
        }
    }
}
