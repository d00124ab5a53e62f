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

// 1-bit aperture synthesis: ideal phase ramps, cosine-threshold ON/OFF masks,
// bipolar masks, multi-beam superposition and the global phase offset.

#include "core_model.hpp"

#include <optional>
#include <utility>

namespace inkwell
{
    struct BeamTarget
    {
        double theta_deg;
        cplx weight{1.0, 0.0};
    };

    class SteeringTask
    {
    public:
        SteeringTask(double incidence_deg, std::vector<BeamTarget> targets, double psi = 0.0)
            : incidence_deg_(incidence_deg), targets_(std::move(targets)), psi_(psi)
        {
            check_angle(incidence_deg_, "theta_i");
            detail::require(!targets_.empty(), "steering task needs at least one target");
            bool any_weight = false;
            for (const auto &t : targets_)
            {
                check_angle(t.theta_deg, "target angle");
                detail::require(std::isfinite(t.weight.real()) && std::isfinite(t.weight.imag()), "target weight must be finite");
                any_weight = any_weight || t.weight != cplx(0.0, 0.0);
            }
            detail::require(any_weight, "at least one target weight must be nonzero");
            detail::require(std::isfinite(psi_) && psi_ >= 0.0 && psi_ < two_pi, "psi must lie in [0, 2*pi)");
        }

        static SteeringTask single(double incidence_deg, double target_deg, double psi = 0.0)
        {
            return SteeringTask(incidence_deg, {{target_deg, {1.0, 0.0}}}, psi);
        }

        double incidence_deg() const { return incidence_deg_; }
        const std::vector<BeamTarget> &targets() const { return targets_; }
        double psi() const { return psi_; }

        SteeringTask with_psi(double psi) const { return SteeringTask(incidence_deg_, targets_, psi); }

    private:
        double incidence_deg_;
        std::vector<BeamTarget> targets_;
        double psi_;
    };

    // phases[m] = k x_m (sin theta_t + sin theta_i). Because x_m decreases with m,
    // phases[m] - phases[m+1] = increment and phases[m] = offset - increment * m.
    struct PhaseProfile
    {
        std::vector<double> phases;
        double increment = 0.0; // k d0 (sin theta_t + sin theta_i)
        double offset = 0.0;    // increment * (M-1)/2
    };

    inline PhaseProfile ideal_phase_profile(const Aperture &aperture, double theta_i_deg, double theta_t_deg)
    {
        check_angle(theta_i_deg, "theta_i");
        check_angle(theta_t_deg, "theta_t");
        const double u = sine_sum(theta_t_deg, theta_i_deg);
        const double k = aperture.wavenumber();
        PhaseProfile p;
        p.increment = k * aperture.spacing() * u;
        p.offset = p.increment * 0.5 * double(aperture.size() - 1);
        p.phases.resize(aperture.size());
        const auto x = aperture.positions();
        for (std::size_t m = 0; m < x.size(); ++m)
            p.phases[m] = k * x[m] * u;
        return p;
    }

    // Nearest of {+1, -1} to e^{j phi}; cos(phi) == 0 maps to +1.
    inline ReflectionCoefficients quantize_bipolar(const PhaseProfile &profile)
    {
        std::vector<int> w(profile.phases.size());
        for (std::size_t m = 0; m < w.size(); ++m)
            w[m] = std::cos(profile.phases[m]) >= 0.0 ? 1 : -1;
        return ReflectionCoefficients::bipolar(w);
    }

    inline std::vector<std::uint8_t> threshold_bits(std::span<const double> phases, double psi)
    {
        std::vector<std::uint8_t> bits(phases.size());
        for (std::size_t m = 0; m < bits.size(); ++m)
            bits[m] = std::cos(phases[m] + psi) >= 0.0 ? 1 : 0;
        return bits;
    }

    inline void check_psi(double psi)
    {
        detail::require(std::isfinite(psi) && psi >= 0.0 && psi < two_pi, "psi must lie in [0, 2*pi)");
    }

    // b_m = 1{cos(phi_m + psi) >= 0}.
    inline ReflectionCoefficients single_beam_mask(const Aperture &aperture, double theta_i_deg, double theta_t_deg, double psi = 0.0)
    {
        check_psi(psi);
        const auto profile = ideal_phase_profile(aperture, theta_i_deg, theta_t_deg);
        return ReflectionCoefficients::binary(threshold_bits(profile.phases, psi));
    }

    // s_m = sum_l alpha_l exp(j k (sin theta_t,l + sin theta_i) x_m).
    inline std::vector<cplx> multibeam_profile(const Aperture &aperture, const SteeringTask &task)
    {
        const auto x = aperture.positions();
        const double k = aperture.wavenumber();
        std::vector<cplx> s(x.size(), cplx(0.0, 0.0));
        for (const auto &t : task.targets())
        {
            if (t.weight == cplx(0.0, 0.0))
                continue;
            const double u = sine_sum(t.theta_deg, task.incidence_deg());
            for (std::size_t m = 0; m < x.size(); ++m)
                s[m] += t.weight * std::polar(1.0, k * x[m] * u);
        }
        return s;
    }

    // b_m = 1{Re(s_m e^{j psi}) >= 0}.
    inline ReflectionCoefficients multibeam_mask(std::span<const cplx> profile, double psi = 0.0)
    {
        detail::require(!profile.empty(), "multi-beam profile must not be empty");
        check_psi(psi);
        const cplx rot = psi == 0.0 ? cplx(1.0, 0.0) : std::polar(1.0, psi);
        std::vector<std::uint8_t> bits(profile.size());
        for (std::size_t m = 0; m < bits.size(); ++m)
            bits[m] = (profile[m] * rot).real() >= 0.0 ? 1 : 0;
        return ReflectionCoefficients::binary(bits);
    }

    // Mask for a task at the task's own psi: the cosine threshold for one
    // target, the superposition threshold for several.
    inline ReflectionCoefficients synthesize_mask(const Aperture &aperture, const SteeringTask &task)
    {
        if (task.targets().size() == 1)
            return single_beam_mask(aperture, task.incidence_deg(), task.targets().front().theta_deg, task.psi());
        return multibeam_mask(multibeam_profile(aperture, task), task.psi());
    }

    inline double thinning_ratio(const ReflectionCoefficients &mask)
    {
        detail::require(mask.kind() == CoefficientKind::binary, "thinning ratio requires a binary mask");
        detail::require(mask.size() > 0, "mask must not be empty");
        std::size_t on = 0;
        for (auto b : mask.bits())
            on += b;
        return double(on) / double(mask.size());
    }

    // Normalized gain |p|^2 / M^2 toward one departure angle.
    inline double gain_at(const Aperture &aperture, const ReflectionCoefficients &coeffs, double theta_t_deg, double theta_i_deg)
    {
        const double m = double(aperture.size());
        return std::norm(array_factor(aperture, coeffs, theta_t_deg, theta_i_deg)) / (m * m);
    }

    inline double worst_target_gain(const Aperture &aperture, const ReflectionCoefficients &coeffs, const SteeringTask &task)
    {
        double worst = std::numeric_limits<double>::infinity();
        for (const auto &t : task.targets())
            worst = std::min(worst, gain_at(aperture, coeffs, t.theta_deg, task.incidence_deg()));
        return worst;
    }

    struct PsiChoice
    {
        double psi;
        double score_db; // min over targets of 10 log10(gamma)
        std::size_t index;
    };

    // Scans psi = 2 pi i / K and keeps the first i maximizing the worst target gain.
    inline PsiChoice select_psi(const Aperture &aperture, const SteeringTask &task, std::size_t grid_size = 64)
    {
        detail::require(grid_size >= 1, "psi grid size must be at least 1");
        const bool single = task.targets().size() == 1;
        PhaseProfile profile;
        std::vector<cplx> s;
        if (single)
            profile = ideal_phase_profile(aperture, task.incidence_deg(), task.targets().front().theta_deg);
        else
            s = multibeam_profile(aperture, task);

        double best = -1.0;
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < grid_size; ++i)
        {
            const double psi = two_pi * double(i) / double(grid_size);
            const auto mask = single ? ReflectionCoefficients::binary(threshold_bits(profile.phases, psi))
                                     : multibeam_mask(s, psi);
            const double score = worst_target_gain(aperture, mask, task);
            if (score > best)
            {
                best = score;
                best_i = i;
            }
        }
        const double psi = two_pi * double(best_i) / double(grid_size);
        const double db = best > 0.0 ? 10.0 * std::log10(best) : -std::numeric_limits<double>::infinity();
        return {psi, db, best_i};
    }

    // Ideal configurable reference. One target: the unit-modulus ramp e^{j phi_m}.
    // Several targets: the superposition scaled to unit mean element power, so the
    // aperture radiates the same total power as the single-beam case and splits it
    // among the beams in proportion to |alpha_l|^2.
    inline ReflectionCoefficients ideal_continuous_weights(const Aperture &aperture, const SteeringTask &task)
    {
        if (task.targets().size() == 1)
        {
            const auto profile = ideal_phase_profile(aperture, task.incidence_deg(), task.targets().front().theta_deg);
            std::vector<cplx> v(profile.phases.size());
            for (std::size_t m = 0; m < v.size(); ++m)
                v[m] = std::polar(1.0, profile.phases[m]);
            return ReflectionCoefficients::continuous(std::move(v));
        }
        auto s = multibeam_profile(aperture, task);
        double power = 0.0;
        for (const auto &z : s)
            power += std::norm(z);
        power /= double(s.size());
        detail::require(power > 0.0, "target weights cancel across the whole aperture");
        const double scale = 1.0 / std::sqrt(power);
        for (auto &z : s)
            z *= scale;
        return ReflectionCoefficients::reference(std::move(s));
    }
}
