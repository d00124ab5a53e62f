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

// Uniform-period (grating-lobe) steering. A periodic aperture of period delta
// radiates into the orders n satisfying (delta/lambda)(sin theta_i + sin theta_t) = n.

#include "core_model.hpp"
#include "mask_file.hpp"

#include <optional>

namespace inkwell
{
    // Period that aligns order n with theta_t: n lambda / (sin theta_t + sin theta_i).
    inline double period_for_target(double theta_i_deg, double theta_t_deg, double wavelength, int order)
    {
        check_angle(theta_i_deg, "theta_i");
        check_angle(theta_t_deg, "theta_t");
        detail::require(std::isfinite(wavelength) && wavelength > 0.0, "wavelength must be positive");
        const double u = sine_sum(theta_t_deg, theta_i_deg);
        detail::require(std::abs(u) > 1e-12, "order n=0 is period-independent: the target is the specular direction");
        detail::require(order != 0, "order n=0 is period-independent; choose a nonzero order");
        const double delta = double(order) * wavelength / u;
        detail::require(delta > 0.0, "order " + std::to_string(order) +
                                         " has the wrong sign for this geometry; use n with the sign of sin(theta_t)+sin(theta_i)");
        return delta;
    }

    // The first nonzero order with the right sign: +1 or -1.
    inline int default_order(double theta_i_deg, double theta_t_deg)
    {
        return sine_sum(theta_t_deg, theta_i_deg) >= 0.0 ? 1 : -1;
    }

    inline double order_argument(double delta, double wavelength, double theta_i_deg, int order)
    {
        return double(order) * wavelength / delta - std::sin(deg2rad(theta_i_deg));
    }

    inline constexpr double visibility_tolerance = 1e-12;

    // Direction of order n, or nullopt when it does not propagate.
    inline std::optional<double> order_direction(double delta, double wavelength, double theta_i_deg, int order)
    {
        detail::require(std::isfinite(delta) && delta > 0.0, "period must be positive");
        detail::require(std::isfinite(wavelength) && wavelength > 0.0, "wavelength must be positive");
        check_angle(theta_i_deg, "theta_i");
        if (order == 0)
            return -theta_i_deg;
        const double arg = order_argument(delta, wavelength, theta_i_deg, order);
        if (std::abs(arg) > 1.0 + visibility_tolerance)
            return std::nullopt;
        return rad2deg(std::asin(std::clamp(arg, -1.0, 1.0)));
    }

    struct OrderDirection
    {
        int order;
        double theta_deg;
    };

    struct OrderSet
    {
        int n_min = 0;
        int n_max = 0;
        std::vector<OrderDirection> directions;

        std::size_t count() const { return std::size_t(n_max - n_min + 1); }
    };

    inline OrderSet visible_orders(double delta, double wavelength, double theta_i_deg)
    {
        detail::require(std::isfinite(delta) && delta > 0.0, "period must be positive");
        detail::require(std::isfinite(wavelength) && wavelength > 0.0, "wavelength must be positive");
        check_angle(theta_i_deg, "theta_i");
        const double ratio = delta / wavelength;
        const double s = std::sin(deg2rad(theta_i_deg));
        auto visible = [&](int n)
        { return n == 0 || std::abs(order_argument(delta, wavelength, theta_i_deg, n)) <= 1.0 + visibility_tolerance; };

        OrderSet set;
        set.n_min = int(std::ceil(ratio * (s - 1.0)));
        set.n_max = int(std::floor(ratio * (s + 1.0)));
        // Rounding in the bound formulas can be off by one at grazing orders.
        while (set.n_min > 0 || (set.n_min < 0 && !visible(set.n_min)))
            ++set.n_min;
        while (visible(set.n_min - 1))
            --set.n_min;
        while (set.n_max < 0 || (set.n_max > 0 && !visible(set.n_max)))
            --set.n_max;
        while (visible(set.n_max + 1))
            ++set.n_max;

        for (int n = set.n_min; n <= set.n_max; ++n)
            set.directions.push_back({n, *order_direction(delta, wavelength, theta_i_deg, n)});
        return set;
    }

    struct SnappedPeriod
    {
        int stride;          // p: every p-th column of the scaffold is active
        double delta_actual; // p * d0
        int m_active;        // active columns within the row
    };

    // Realizes a period on a fixed scaffold of pitch d0 by rounding delta/d0 half-up.
    inline SnappedPeriod snap_to_grid(double delta, double d0, int wells_per_row)
    {
        detail::require(std::isfinite(d0) && d0 > 0.0, "scaffold pitch must be positive");
        detail::require(wells_per_row >= 1, "wells per row must be at least 1");
        detail::require(std::isfinite(delta) && delta >= d0 * (1.0 - 1e-12),
                        "period is finer than the scaffold pitch and cannot be realized");
        const int p = std::max(1, int(std::floor(delta / d0 + 0.5)));
        return {p, double(p) * d0, (wells_per_row - 1) / p + 1};
    }

    struct PeriodDesign
    {
        double period = 0.0;
        int order = 1;
        double theta_i_deg = 0.0;
        double theta_t_deg = 0.0;
        double wavelength = 0.0;
        std::optional<SnappedPeriod> snapped;
        double d0 = 0.0;      // scaffold pitch, set when snapped
        int wells_per_row = 0; // scaffold width, set when snapped
    };

    inline PeriodDesign design_period(double theta_i_deg, double theta_t_deg, double wavelength, int order)
    {
        PeriodDesign d;
        d.period = period_for_target(theta_i_deg, theta_t_deg, wavelength, order);
        d.order = order;
        d.theta_i_deg = theta_i_deg;
        d.theta_t_deg = theta_t_deg;
        d.wavelength = wavelength;
        return d;
    }

    inline PeriodDesign snap_design(PeriodDesign design, double d0, int wells_per_row)
    {
        design.snapped = snap_to_grid(design.period, d0, wells_per_row);
        design.d0 = d0;
        design.wells_per_row = wells_per_row;
        return design;
    }

    // ON at well indices 0, p, 2p, ...
    inline ReflectionCoefficients stride_mask(int stride, int wells_per_row)
    {
        detail::require(stride >= 1 && wells_per_row >= 1, "stride and row width must be positive");
        std::vector<std::uint8_t> bits(std::size_t(wells_per_row), 0);
        for (int m = 0; m < wells_per_row; m += stride)
            bits[std::size_t(m)] = 1;
        return ReflectionCoefficients::binary(bits);
    }

    // Sparse aperture with the unsnapped period and the snapped element count.
    inline Aperture matched_aperture(const PeriodDesign &design)
    {
        detail::require(design.snapped.has_value(), "design must be snapped to a scaffold first");
        return Aperture(std::size_t(design.snapped->m_active), design.period, design.wavelength);
    }

    // Expands a snapped design into the shared mask-file schema on its scaffold.
    inline MaskFile to_mask_file(const PeriodDesign &design)
    {
        detail::require(design.snapped.has_value(), "design must be snapped to a scaffold first");
        MaskFile f;
        f.element_count = std::size_t(design.wells_per_row);
        f.d0_m = design.d0;
        f.lambda_m = design.wavelength;
        f.theta_i_deg = design.theta_i_deg;
        f.targets = {{design.theta_t_deg, {1.0, 0.0}}};
        f.psi_rad = 0.0;
        f.bits = stride_mask(design.snapped->stride, design.wells_per_row).bits();
        return f;
    }

    struct TargetCoverage
    {
        double target_deg;
        bool covered;
        std::optional<int> order;       // nearest visible order
        std::optional<double> order_deg; // its direction
        double error_deg;                // |order_deg - target|, infinity if nothing is visible
    };

    // For each extra target: is some visible order within `tol_deg` of it?
    inline std::vector<TargetCoverage> multibeam_period_check(const PeriodDesign &design, std::span<const double> extra_targets_deg,
                                                              double tol_deg = 0.5)
    {
        detail::require(tol_deg >= 0.0, "tolerance must be non-negative");
        const auto orders = visible_orders(design.period, design.wavelength, design.theta_i_deg);
        std::vector<TargetCoverage> out;
        for (double t : extra_targets_deg)
        {
            check_angle(t, "extra target");
            TargetCoverage c{t, false, std::nullopt, std::nullopt, std::numeric_limits<double>::infinity()};
            for (const auto &o : orders.directions)
            {
                const double err = std::abs(o.theta_deg - t);
                if (err < c.error_deg)
                {
                    c.error_deg = err;
                    c.order = o.order;
                    c.order_deg = o.theta_deg;
                }
            }
            c.covered = c.error_deg <= tol_deg;
            out.push_back(c);
        }
        return out;
    }
}
