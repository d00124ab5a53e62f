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

// Numerical checks of the two activation results for the cosine-threshold mask:
// the ON fraction tends to 1/2, and the best ON/OFF mask always reaches
// gamma* = (S*/M)^2 >= 1/pi^2 whatever the element phases are.

#include "core_model.hpp"
#include "mask_synthesis.hpp"

#include <nlohmann/json.hpp>

#include <random>

namespace inkwell
{
    inline constexpr double gain_bound = 1.0 / (pi * pi);

    struct MaskOptimum
    {
        std::vector<std::uint8_t> mask;
        double s_star = 0.0;     // max |sum_m b_m e^{-j phi_m}|
        double gamma_star = 0.0; // (s_star / M)^2
    };

    inline double masked_sum_magnitude(std::span<const double> phases, std::span<const std::uint8_t> mask)
    {
        cplx acc(0.0, 0.0);
        for (std::size_t m = 0; m < phases.size(); ++m)
            if (mask[m])
                acc += std::polar(1.0, -phases[m]);
        return std::abs(acc);
    }

    inline constexpr std::size_t bruteforce_limit = 20;

    // Exhaustive search over all 2^M masks. Among maximizers the lexicographically
    // smallest bit string (b_0 b_1 ... b_{M-1}) wins.
    inline MaskOptimum bruteforce_opt_mask(std::span<const double> phases)
    {
        const std::size_t count = phases.size();
        detail::require(count >= 1, "phase list must not be empty");
        detail::require(count <= bruteforce_limit, "exhaustive search is limited to M <= 20; use breakpoint_opt_mask for larger apertures");

        std::vector<cplx> unit(count);
        for (std::size_t m = 0; m < count; ++m)
            unit[m] = std::polar(1.0, -phases[m]);

        const std::uint64_t total = std::uint64_t(1) << count;
        double best = -1.0;
        std::uint64_t best_code = 0;
        for (std::uint64_t code = 0; code < total; ++code)
        {
            // bit (M-1-m) of `code` is b_m, so increasing codes are lexicographic.
            cplx acc(0.0, 0.0);
            for (std::size_t m = 0; m < count; ++m)
                if ((code >> (count - 1 - m)) & 1u)
                    acc += unit[m];
            const double mag = std::abs(acc);
            if (mag > best * (1.0 + 1e-12) + 1e-12)
            {
                best = mag;
                best_code = code;
            }
        }

        MaskOptimum out;
        out.mask.resize(count);
        for (std::size_t m = 0; m < count; ++m)
            out.mask[m] = std::uint8_t((best_code >> (count - 1 - m)) & 1u);
        out.s_star = best;
        out.gamma_star = (best / double(count)) * (best / double(count));
        return out;
    }

    namespace detail
    {
        // Rotations at which the thresholded mask can change (cos(phi_m + r) = 0),
        // plus the midpoints between neighbouring ones so that every distinct
        // threshold mask is visited.
        inline std::vector<double> candidate_rotations(std::span<const double> phases)
        {
            std::vector<double> cuts;
            cuts.reserve(2 * phases.size());
            for (double p : phases)
            {
                for (double base : {0.5 * pi, 1.5 * pi})
                {
                    double r = std::fmod(base - p, two_pi);
                    if (r < 0.0)
                        r += two_pi;
                    cuts.push_back(r);
                }
            }
            std::sort(cuts.begin(), cuts.end());
            std::vector<double> out(cuts);
            for (std::size_t i = 0; i < cuts.size(); ++i)
            {
                const double next = i + 1 < cuts.size() ? cuts[i + 1] : cuts.front() + two_pi;
                if (next - cuts[i] > 1e-12)
                    out.push_back(0.5 * (cuts[i] + next));
            }
            return out;
        }
    }

    // Exact maximizer in O(M^2). For a fixed rotation r the best mask is
    // b_m = 1{cos(phi_m + r) >= 0}, and |z| = max_r Re(e^{-jr} z), so the optimum
    // is one of the threshold masks enumerated by candidate_rotations.
    inline MaskOptimum breakpoint_opt_mask(std::span<const double> phases)
    {
        const std::size_t count = phases.size();
        detail::require(count >= 1, "phase list must not be empty");
        MaskOptimum out;
        out.s_star = -1.0;
        std::vector<std::uint8_t> bits(count);
        for (double r : detail::candidate_rotations(phases))
        {
            for (std::size_t m = 0; m < count; ++m)
                bits[m] = std::cos(phases[m] + r) >= 0.0 ? 1 : 0;
            const double mag = masked_sum_magnitude(phases, bits);
            if (mag > out.s_star)
            {
                out.s_star = mag;
                out.mask = bits;
            }
        }
        out.gamma_star = (out.s_star / double(count)) * (out.s_star / double(count));
        return out;
    }

    // Best +-1 mask, same rotation argument with w_m = sgn cos(phi_m + r).
    inline MaskOptimum breakpoint_opt_bipolar(std::span<const double> phases)
    {
        const std::size_t count = phases.size();
        detail::require(count >= 1, "phase list must not be empty");
        MaskOptimum out;
        out.s_star = -1.0;
        std::vector<std::uint8_t> bits(count);
        for (double r : detail::candidate_rotations(phases))
        {
            cplx acc(0.0, 0.0);
            for (std::size_t m = 0; m < count; ++m)
            {
                bits[m] = std::cos(phases[m] + r) >= 0.0 ? 1 : 0;
                acc += (bits[m] ? 1.0 : -1.0) * std::polar(1.0, -phases[m]);
            }
            if (std::abs(acc) > out.s_star)
            {
                out.s_star = std::abs(acc);
                out.mask = bits; // 1 = +1, 0 = -1
            }
        }
        out.gamma_star = (out.s_star / double(count)) * (out.s_star / double(count));
        return out;
    }

    // F_M(r) = (1/M) sum_m [cos(phi_m + r)]_+.
    inline double rotation_objective(std::span<const double> phases, double rotation)
    {
        double acc = 0.0;
        for (double p : phases)
            acc += std::max(0.0, std::cos(p + rotation));
        return acc / double(phases.size());
    }

    // (1/2pi) * integral of F_M over one period by the trapezoidal rule; exact value 1/pi.
    inline double rotation_average(std::span<const double> phases, std::size_t samples)
    {
        detail::require(!phases.empty(), "phase list must not be empty");
        detail::require(samples >= 2, "need at least two rotation samples");
        // For a periodic integrand the trapezoidal rule reduces to the plain mean.
        double acc = 0.0;
        for (std::size_t i = 0; i < samples; ++i)
            acc += rotation_objective(phases, two_pi * double(i) / double(samples));
        return acc / double(samples);
    }

    // Ideal phase profile of a linear lattice, in units where only d0/lambda matters.
    inline std::vector<double> lattice_phases(std::size_t count, double d0_over_lambda, double sine_sum_value)
    {
        const auto x = element_positions(count, 1.0);
        std::vector<double> ph(count);
        for (std::size_t m = 0; m < count; ++m)
            ph[m] = two_pi * d0_over_lambda * x[m] * sine_sum_value;
        return ph;
    }

    struct GainInstance
    {
        double theta_i_deg;
        double theta_t_deg;
        double d0_over_lambda;
        std::size_t count;
        std::vector<double> phases;
    };

    namespace detail
    {
        inline std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        }

        inline double unit_uniform(std::mt19937_64 &rng) { return double(rng() >> 11) * 0x1.0p-53; }
    }

    // Trial `index` of a seeded run. Each trial has its own generator derived from
    // (seed, index), so the draws do not depend on evaluation order.
    inline GainInstance draw_gain_instance(std::uint64_t seed, std::uint64_t index, std::size_t m_min, std::size_t m_max)
    {
        detail::require(m_min >= 1 && m_min <= m_max, "invalid element-count range");
        std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(index)));
        GainInstance g;
        g.theta_i_deg = -90.0 + 180.0 * detail::unit_uniform(rng);
        g.theta_t_deg = -90.0 + 180.0 * detail::unit_uniform(rng);
        g.d0_over_lambda = 0.25 + 0.75 * detail::unit_uniform(rng);
        g.count = m_min + std::size_t(rng() % (m_max - m_min + 1));
        g.phases = lattice_phases(g.count, g.d0_over_lambda, sine_sum(g.theta_t_deg, g.theta_i_deg));
        return g;
    }

    struct BoundReport
    {
        std::size_t trials = 0;
        double min_gamma_star = std::numeric_limits<double>::infinity();
        double bound = gain_bound;
        std::size_t violations = 0;
        double mean_rotation_gain = 0.0; // (mean over trials of the rotation average)^2, ~ 1/pi^2
        std::uint64_t seed = 0;
        std::optional<std::vector<double>> witness_phases;
        std::optional<std::vector<std::uint8_t>> witness_bits;
    };

    inline BoundReport verify_gain_bound(std::size_t trials, std::size_t m_min, std::size_t m_max, std::uint64_t seed,
                                         std::size_t rotation_samples = 4096)
    {
        detail::require(trials >= 1, "need at least one trial");
        BoundReport r;
        r.trials = trials;
        r.seed = seed;
        double rotation_sum = 0.0;
        for (std::size_t t = 0; t < trials; ++t)
        {
            const auto inst = draw_gain_instance(seed, t, m_min, m_max);
            const auto opt = breakpoint_opt_mask(inst.phases);
            if (opt.gamma_star < gain_bound - 1e-12)
                ++r.violations;
            if (opt.gamma_star < r.min_gamma_star)
            {
                r.min_gamma_star = opt.gamma_star;
                r.witness_phases = inst.phases;
                r.witness_bits = opt.mask;
            }
            rotation_sum += rotation_average(inst.phases, rotation_samples);
        }
        const double mean = rotation_sum / double(trials);
        r.mean_rotation_gain = mean * mean;
        return r;
    }

    inline nlohmann::ordered_json to_json(const BoundReport &r)
    {
        nlohmann::ordered_json j;
        j["trials"] = r.trials;
        j["min_gamma_star"] = r.min_gamma_star;
        j["bound"] = r.bound;
        j["violations"] = r.violations;
        j["mean_rotation_gain"] = r.mean_rotation_gain;
        if (r.witness_phases)
            j["witness_phases"] = *r.witness_phases;
        if (r.witness_bits)
        {
            std::string s;
            for (auto b : *r.witness_bits)
                s.push_back(b ? '1' : '0');
            j["witness_bits"] = s;
        }
        j["seed"] = r.seed;
        return j;
    }

    struct ThinningPoint
    {
        std::size_t count;
        double eta;
    };

    // eta_M of the psi = 0 cosine-threshold mask for each requested M.
    inline std::vector<ThinningPoint> thinning_convergence(double theta_i_deg, double theta_t_deg, double d0, double wavelength,
                                                           std::span<const std::size_t> counts)
    {
        std::vector<ThinningPoint> out;
        out.reserve(counts.size());
        for (auto m : counts)
        {
            const Aperture ap(m, d0, wavelength);
            out.push_back({m, thinning_ratio(single_beam_mask(ap, theta_i_deg, theta_t_deg, 0.0))});
        }
        return out;
    }

    struct LossEntry
    {
        std::string scheme;
        double gamma;   // worst target gain |p|^2 / M^2
        double loss_db; // relative to the ideal configurable reflector
    };

    // Target gain of each aperture-control scheme and its loss against the ideal one.
    inline std::vector<LossEntry> loss_report(const Aperture &aperture, const SteeringTask &task, std::size_t psi_grid = 64)
    {
        const auto ideal = ideal_continuous_weights(aperture, task);
        const double g_ideal = worst_target_gain(aperture, ideal, task);

        std::vector<std::pair<std::string, double>> rows;
        rows.emplace_back("all_on", worst_target_gain(aperture, ReflectionCoefficients::all_on(aperture.size()), task));
        rows.emplace_back("onoff_psi0", worst_target_gain(aperture, synthesize_mask(aperture, task.with_psi(0.0)), task));
        const auto choice = select_psi(aperture, task, psi_grid);
        rows.emplace_back("onoff_best_psi", worst_target_gain(aperture, synthesize_mask(aperture, task.with_psi(choice.psi)), task));
        if (task.targets().size() == 1)
        {
            const auto profile = ideal_phase_profile(aperture, task.incidence_deg(), task.targets().front().theta_deg);
            rows.emplace_back("onoff_optimal", breakpoint_opt_mask(profile.phases).gamma_star);
            rows.emplace_back("bipolar", worst_target_gain(aperture, quantize_bipolar(profile), task));
            rows.emplace_back("bipolar_optimal", breakpoint_opt_bipolar(profile.phases).gamma_star);
        }
        else
        {
            const auto s = multibeam_profile(aperture, task);
            std::vector<int> w(s.size());
            for (std::size_t m = 0; m < s.size(); ++m)
                w[m] = s[m].real() >= 0.0 ? 1 : -1;
            rows.emplace_back("bipolar", worst_target_gain(aperture, ReflectionCoefficients::bipolar(w), task));
        }
        rows.emplace_back("ideal", g_ideal);

        std::vector<LossEntry> out;
        for (auto &[name, g] : rows)
        {
            const double loss = g > 0.0 ? 10.0 * std::log10(g_ideal / g) : std::numeric_limits<double>::infinity();
            out.push_back({name, g, loss});
        }
        return out;
    }

    struct SweepPoint
    {
        double sine_sum;
        double gamma_onoff;   // optimal ON/OFF mask
        double gamma_bipolar; // optimal +-1 mask
        double gamma_onoff_psi0;
    };

    struct WorstCaseSweep
    {
        std::vector<SweepPoint> points;
        double worst_onoff_loss_db = 0.0;
        double worst_bipolar_loss_db = 0.0;
        double gap_db() const { return worst_onoff_loss_db - worst_bipolar_loss_db; }
    };

    // Normalized gain of the best ON/OFF and +-1 masks against the ideal
    // reflector (gamma = 1) for sin(theta_t) + sin(theta_i) over [-2, 2].
    inline WorstCaseSweep worst_case_sweep(std::size_t count, double d0_over_lambda, double step)
    {
        detail::require(count >= 1, "element count must be at least 1");
        detail::require(d0_over_lambda > 0.0 && step > 0.0, "spacing ratio and step must be positive");
        WorstCaseSweep out;
        const auto n = std::size_t(std::floor(4.0 / step + 1e-9));
        for (std::size_t i = 0; i <= n; ++i)
        {
            // Integer multiples of the step keep u = 0 exact.
            const double u = -2.0 + double(i) * step;
            const double uu = std::abs(u) < 0.5 * step ? 0.0 : u;
            const auto ph = lattice_phases(count, d0_over_lambda, uu);
            SweepPoint p{uu, breakpoint_opt_mask(ph).gamma_star, breakpoint_opt_bipolar(ph).gamma_star, 0.0};
            const auto bits = threshold_bits(ph, 0.0);
            const double s0 = masked_sum_magnitude(ph, bits) / double(count);
            p.gamma_onoff_psi0 = s0 * s0;
            out.worst_onoff_loss_db = std::max(out.worst_onoff_loss_db, -10.0 * std::log10(p.gamma_onoff));
            out.worst_bipolar_loss_db = std::max(out.worst_bipolar_loss_db, -10.0 * std::log10(p.gamma_bipolar));
            out.points.push_back(p);
        }
        return out;
    }
}
