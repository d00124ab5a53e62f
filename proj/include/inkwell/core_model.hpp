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

// Aperture geometry and array-factor evaluation shared by every other module.
//
// Conventions:
// - Angles are degrees at every public entry point and radians internally.
// - Reflection-side departure angles are negative; the specular direction is -theta_i.
// - Element m sits at x_m = ((M-1)/2 - m) * spacing, so x decreases with m.

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace inkwell
{
    using cplx = std::complex<double>;

    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    // Sentinel used wherever a zero power has to be shown in dB.
    inline constexpr double gain_floor_db = -60.0;

    inline double deg2rad(double deg) { return deg * (pi / 180.0); }
    inline double rad2deg(double rad) { return rad * (180.0 / pi); }

    // 10*log10(x), clamped to `floor_db`. Zero and negative inputs map to the floor.
    inline double to_db(double linear, double floor_db = gain_floor_db)
    {
        if (!(linear > 0.0))
            return floor_db;
        return std::max(10.0 * std::log10(linear), floor_db);
    }

    inline void check_angle(double deg, const char *name)
    {
        detail::require(std::isfinite(deg) && std::abs(deg) <= 90.0,
                        std::string(name) + " must lie in [-90, 90] degrees");
    }

    // Centered element coordinates in meters.
    inline std::vector<double> element_positions(std::size_t count, double spacing)
    {
        detail::require(count >= 1, "element count must be at least 1");
        detail::require(std::isfinite(spacing) && spacing > 0.0, "element spacing must be positive");
        std::vector<double> x(count);
        const double half = 0.5 * double(count - 1);
        for (std::size_t m = 0; m < count; ++m)
            x[m] = (half - double(m)) * spacing;
        return x;
    }

    class Aperture
    {
    public:
        Aperture(std::size_t element_count, double spacing, double wavelength)
            : count_(element_count), spacing_(spacing), wavelength_(wavelength),
              positions_(element_positions(element_count, spacing))
        {
            detail::require(std::isfinite(wavelength) && wavelength > 0.0, "wavelength must be positive");
        }

        std::size_t size() const { return count_; }
        double spacing() const { return spacing_; }
        double wavelength() const { return wavelength_; }
        double wavenumber() const { return two_pi / wavelength_; }
        std::span<const double> positions() const { return positions_; }

    private:
        std::size_t count_;
        double spacing_;
        double wavelength_;
        std::vector<double> positions_;
    };

    enum class CoefficientKind
    {
        binary,     // b_m in {0, 1}
        bipolar,    // w_m in {-1, +1}
        continuous, // unit modulus e^{j phi_m}
        complex,    // passive, |v| <= 1 (e.g. rho_m * b_m)
        reference   // unconstrained ideal baseline; not realizable by a passive aperture
    };

    inline const char *to_string(CoefficientKind kind)
    {
        switch (kind)
        {
        case CoefficientKind::binary:
            return "binary";
        case CoefficientKind::bipolar:
            return "bipolar";
        case CoefficientKind::continuous:
            return "continuous";
        case CoefficientKind::complex:
            return "complex";
        case CoefficientKind::reference:
            return "reference";
        }
        return "unknown";
    }

    // Diagonal of the scattering matrix: one complex coefficient per element.
    class ReflectionCoefficients
    {
    public:
        static ReflectionCoefficients binary(std::span<const std::uint8_t> bits)
        {
            std::vector<cplx> v;
            v.reserve(bits.size());
            for (auto b : bits)
            {
                detail::require(b == 0 || b == 1, "binary coefficients must be 0 or 1");
                v.emplace_back(double(b), 0.0);
            }
            return ReflectionCoefficients(CoefficientKind::binary, std::move(v));
        }

        static ReflectionCoefficients all_on(std::size_t count)
        {
            return ReflectionCoefficients(CoefficientKind::binary, std::vector<cplx>(count, cplx(1.0, 0.0)));
        }

        static ReflectionCoefficients bipolar(std::span<const int> signs)
        {
            std::vector<cplx> v;
            v.reserve(signs.size());
            for (int s : signs)
            {
                detail::require(s == 1 || s == -1, "bipolar coefficients must be +1 or -1");
                v.emplace_back(double(s), 0.0);
            }
            return ReflectionCoefficients(CoefficientKind::bipolar, std::move(v));
        }

        static ReflectionCoefficients continuous(std::vector<cplx> values)
        {
            for (const auto &z : values)
                detail::require(std::abs(std::abs(z) - 1.0) <= 1e-12, "continuous coefficients must have unit modulus");
            return ReflectionCoefficients(CoefficientKind::continuous, std::move(values));
        }

        static ReflectionCoefficients passive(std::vector<cplx> values)
        {
            for (const auto &z : values)
                detail::require(std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z) <= 1.0 + 1e-12,
                                "complex coefficients must satisfy |v| <= 1");
            return ReflectionCoefficients(CoefficientKind::complex, std::move(values));
        }

        // Non-ideal ON state: rho_m * b_m.
        static ReflectionCoefficients non_ideal(std::span<const std::uint8_t> bits, std::span<const cplx> rho)
        {
            detail::require(bits.size() == rho.size(), "mask and rho lengths differ");
            std::vector<cplx> v(bits.size());
            for (std::size_t m = 0; m < bits.size(); ++m)
            {
                detail::require(bits[m] == 0 || bits[m] == 1, "binary coefficients must be 0 or 1");
                v[m] = double(bits[m]) * rho[m];
            }
            return passive(std::move(v));
        }

        static ReflectionCoefficients reference(std::vector<cplx> values)
        {
            for (const auto &z : values)
                detail::require(std::isfinite(z.real()) && std::isfinite(z.imag()), "reference coefficients must be finite");
            return ReflectionCoefficients(CoefficientKind::reference, std::move(values));
        }

        CoefficientKind kind() const { return kind_; }
        std::size_t size() const { return values_.size(); }
        std::span<const cplx> values() const { return values_; }
        const cplx &operator[](std::size_t m) const { return values_[m]; }

        // 0/1 view; only valid for binary coefficients.
        std::vector<std::uint8_t> bits() const
        {
            detail::require(kind_ == CoefficientKind::binary, "bits() requires binary coefficients");
            std::vector<std::uint8_t> out(values_.size());
            for (std::size_t m = 0; m < values_.size(); ++m)
                out[m] = values_[m].real() != 0.0 ? 1 : 0;
            return out;
        }

    private:
        ReflectionCoefficients(CoefficientKind kind, std::vector<cplx> values)
            : kind_(kind), values_(std::move(values)) {}

        CoefficientKind kind_;
        std::vector<cplx> values_;
    };

    // sum_m c_m exp(-j k x_m u), with u = sin(theta_t) + sin(theta_i).
    inline cplx phasor_sum(std::span<const double> positions, std::span<const cplx> coeffs, double wavenumber, double sine_sum)
    {
        cplx acc(0.0, 0.0);
        for (std::size_t m = 0; m < positions.size(); ++m)
        {
            const cplx &c = coeffs[m];
            if (c == cplx(0.0, 0.0))
                continue;
            acc += c * std::polar(1.0, -wavenumber * positions[m] * sine_sum);
        }
        return acc;
    }

    inline double sine_sum(double theta_t_deg, double theta_i_deg)
    {
        return std::sin(deg2rad(theta_t_deg)) + std::sin(deg2rad(theta_i_deg));
    }

    // Complex response p(theta_t, theta_i) of the aperture.
    inline cplx array_factor(const Aperture &aperture, const ReflectionCoefficients &coeffs, double theta_t_deg, double theta_i_deg)
    {
        detail::require(coeffs.size() == aperture.size(), "coefficient count does not match the aperture element count");
        check_angle(theta_t_deg, "theta_t");
        check_angle(theta_i_deg, "theta_i");
        return phasor_sum(aperture.positions(), coeffs.values(), aperture.wavenumber(), sine_sum(theta_t_deg, theta_i_deg));
    }

    // Evenly spaced angles from `start` to `stop` inclusive (stop is kept only if it lands on the grid).
    inline std::vector<double> angle_grid(double start_deg, double stop_deg, double step_deg)
    {
        detail::require(std::isfinite(step_deg) && step_deg > 0.0, "grid step must be positive");
        detail::require(start_deg <= stop_deg, "grid start must not exceed grid stop");
        check_angle(start_deg, "grid start");
        check_angle(stop_deg, "grid stop");
        const auto n = std::size_t(std::floor((stop_deg - start_deg) / step_deg + 1e-9)) + 1;
        std::vector<double> grid(n);
        for (std::size_t i = 0; i < n; ++i)
            grid[i] = std::min(start_deg + double(i) * step_deg, stop_deg);
        return grid;
    }

    inline std::vector<double> default_angle_grid() { return angle_grid(-90.0, 90.0, 0.5); }

    struct AngularPattern
    {
        double incidence_deg = 0.0;
        double normalization = 1.0; // element count M used in gain = |p|^2 / M^2
        std::vector<double> theta_deg;
        std::vector<cplx> response;
        std::vector<double> gain;

        std::size_t size() const { return theta_deg.size(); }
        double gain_db(std::size_t i) const { return to_db(gain[i]); }
    };

    // Sample the response over `grid`. `normalization_count` overrides M in |p|^2/M^2,
    // which lets a thinned or sparse aperture be compared against a full scaffold.
    inline AngularPattern pattern_sweep(const Aperture &aperture, const ReflectionCoefficients &coeffs, double theta_i_deg,
                                        std::span<const double> grid, std::size_t normalization_count = 0)
    {
        detail::require(!grid.empty(), "angle grid must not be empty");
        detail::require(coeffs.size() == aperture.size(), "coefficient count does not match the aperture element count");
        check_angle(theta_i_deg, "theta_i");
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            check_angle(grid[i], "grid angle");
            detail::require(i == 0 || grid[i] > grid[i - 1], "angle grid must be strictly increasing");
        }

        AngularPattern out;
        out.incidence_deg = theta_i_deg;
        out.normalization = double(normalization_count == 0 ? aperture.size() : normalization_count);
        out.theta_deg.assign(grid.begin(), grid.end());
        out.response.resize(grid.size());
        out.gain.resize(grid.size());
        const double m2 = out.normalization * out.normalization;
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            out.response[i] = phasor_sum(aperture.positions(), coeffs.values(), aperture.wavenumber(), sine_sum(grid[i], theta_i_deg));
            out.gain[i] = std::norm(out.response[i]) / m2;
        }
        return out;
    }

    // Closed form of the all-ON uniform aperture. With centered coordinates the
    // sum is real: sin(M psi/2) / sin(psi/2), psi = delta (k_i + k_t).
    inline cplx uniform_closed_form(std::size_t count, double delta, double wavelength, double theta_t_deg, double theta_i_deg)
    {
        detail::require(count >= 1, "element count must be at least 1");
        detail::require(std::isfinite(delta) && delta > 0.0, "period must be positive");
        detail::require(std::isfinite(wavelength) && wavelength > 0.0, "wavelength must be positive");
        check_angle(theta_t_deg, "theta_t");
        check_angle(theta_i_deg, "theta_i");

        const double psi = delta * (two_pi / wavelength) * sine_sum(theta_t_deg, theta_i_deg);
        const double den = std::sin(0.5 * psi);
        const double m = double(count);
        if (std::abs(den) < 1e-12)
        {
            // Principal maximum of order n: every phasor equals (-1)^{n(M-1)}.
            const auto n = static_cast<long long>(std::llround(psi / two_pi));
            const bool odd = ((n % 2 != 0) && ((count - 1) % 2 != 0));
            return cplx(odd ? -m : m, 0.0);
        }
        return cplx(std::sin(0.5 * m * psi) / den, 0.0);
    }

    struct AngleInterval
    {
        double lo_deg;
        double hi_deg;
        bool contains(double deg) const { return deg >= lo_deg && deg <= hi_deg; }
    };

    // Null-to-null extent of a lobe steered to `theta_deg` for an aperture of
    // `count` elements at `spacing`: sin(theta) +- lambda / (M d).
    inline AngleInterval lobe_window(double theta_deg, std::size_t count, double spacing, double wavelength)
    {
        detail::require(count >= 1 && spacing > 0.0 && wavelength > 0.0, "invalid aperture for lobe window");
        const double u = std::sin(deg2rad(theta_deg));
        const double half = wavelength / (double(count) * spacing);
        const double lo = std::max(-1.0, u - half);
        const double hi = std::min(1.0, u + half);
        return {rad2deg(std::asin(lo)), rad2deg(std::asin(hi))};
    }

    // Highest gain outside every exclusion window relative to the global peak, in dB.
    inline double peak_to_sidelobe(const AngularPattern &pattern, std::span<const AngleInterval> exclusions)
    {
        detail::require(pattern.size() > 0, "pattern must not be empty");
        for (const auto &w : exclusions)
            detail::require(w.lo_deg <= w.hi_deg, "exclusion window bounds are reversed");

        double peak = 0.0;
        double side = -1.0;
        for (std::size_t i = 0; i < pattern.size(); ++i)
        {
            peak = std::max(peak, pattern.gain[i]);
            const bool excluded = std::any_of(exclusions.begin(), exclusions.end(),
                                              [&](const AngleInterval &w) { return w.contains(pattern.theta_deg[i]); });
            if (!excluded)
                side = std::max(side, pattern.gain[i]);
        }
        detail::require(side >= 0.0, "exclusion windows cover the whole grid");
        detail::require(peak > 0.0, "pattern has no energy");
        if (side == 0.0)
            return -std::numeric_limits<double>::infinity();
        return 10.0 * std::log10(side / peak);
    }
}
