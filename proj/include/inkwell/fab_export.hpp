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

// Printable geometry for the inkwell scaffold: a dielectric base with a square
// well at every lattice site, conductive pads in the ON wells, and a stencil
// that is open only above the ON wells. The 1-D mask is striped across rows.

#include "core_model.hpp"
#include "stl.hpp"

#include <iomanip>
#include <sstream>

namespace inkwell
{
    // Rows x cols grid of well states; cell (r, c) lives at cells[r * cols + c].
    struct WellGrid
    {
        std::size_t rows = 0;
        std::size_t cols = 0;
        std::vector<std::uint8_t> cells;

        bool on(std::size_t r, std::size_t c) const { return cells[r * cols + c] != 0; }
        std::size_t on_count() const
        {
            std::size_t n = 0;
            for (auto v : cells)
                n += v ? 1 : 0;
            return n;
        }
    };

    // Every row repeats the 1-D mask; column m carries bit m.
    inline WellGrid stripe_mask_2d(const ReflectionCoefficients &mask, std::size_t rows)
    {
        detail::require(mask.kind() == CoefficientKind::binary, "striping requires a binary mask");
        detail::require(rows >= 1, "row count must be at least 1");
        const auto bits = mask.bits();
        WellGrid g{rows, bits.size(), {}};
        g.cells.reserve(rows * bits.size());
        for (std::size_t r = 0; r < rows; ++r)
            g.cells.insert(g.cells.end(), bits.begin(), bits.end());
        return g;
    }

    // Scaffold dimensions in meters.
    struct InkwellDims
    {
        std::size_t rows = 35;
        std::size_t cols = 35;
        double pitch = 2.5e-3;
        double well_opening = 2.2e-3;
        double well_depth = 0.4e-3;
        double base_thickness = 0.8e-3;
        double aperture_side = 90e-3;
        double stencil_thickness = 0.8e-3;
        double stencil_opening = 2.1e-3;
    };

    inline void validate(const InkwellDims &d)
    {
        detail::require(d.rows >= 1 && d.cols >= 1, "layout needs at least one row and one column");
        for (double v : {d.pitch, d.well_opening, d.well_depth, d.base_thickness, d.aperture_side, d.stencil_thickness, d.stencil_opening})
            detail::require(std::isfinite(v) && v > 0.0, "layout dimensions must be positive");
        detail::require(d.well_opening < d.pitch, "well opening must be smaller than the pitch so walls remain between wells");
        detail::require(d.well_depth < d.base_thickness, "well depth must leave a floor under each well");
        detail::require(d.stencil_opening < d.well_opening, "stencil opening must be smaller than the well opening");
        const double span_x = double(d.cols - 1) * d.pitch + d.well_opening;
        const double span_y = double(d.rows - 1) * d.pitch + d.well_opening;
        detail::require(span_x <= d.aperture_side * (1.0 + 1e-12) && span_y <= d.aperture_side * (1.0 + 1e-12),
                        "well grid does not fit on the plate: (n-1)*pitch + opening exceeds the aperture side");
    }

    struct InkwellLayout
    {
        InkwellDims dims;
        WellGrid well_states; // dims.rows x dims.cols, ON = metallized

        // Lattice coordinates of well (r, c) in meters, centered on the plate.
        double well_x(std::size_t c) const { return (0.5 * double(dims.cols - 1) - double(c)) * dims.pitch; }
        double well_y(std::size_t r) const { return (0.5 * double(dims.rows - 1) - double(r)) * dims.pitch; }
    };

    // Places `grid` on the scaffold (centered when smaller) after validating dims.
    inline InkwellLayout build_layout(const WellGrid &grid, const InkwellDims &dims = {})
    {
        validate(dims);
        detail::require(grid.rows >= 1 && grid.cols >= 1, "well grid must not be empty");
        detail::require(grid.rows <= dims.rows && grid.cols <= dims.cols, "well grid is larger than the plate's scaffold");
        InkwellLayout layout{dims, WellGrid{dims.rows, dims.cols, std::vector<std::uint8_t>(dims.rows * dims.cols, 0)}};
        const std::size_t r0 = (dims.rows - grid.rows) / 2;
        const std::size_t c0 = (dims.cols - grid.cols) / 2;
        for (std::size_t r = 0; r < grid.rows; ++r)
            for (std::size_t c = 0; c < grid.cols; ++c)
                layout.well_states.cells[(r0 + r) * dims.cols + (c0 + c)] = grid.on(r, c) ? 1 : 0;
        return layout;
    }

    struct StencilLayout
    {
        double thickness = 0.8e-3;
        double opening = 2.1e-3;
        std::vector<std::pair<std::size_t, std::size_t>> openings_at; // (row, col)
    };

    inline StencilLayout stencil_from_layout(const InkwellLayout &layout)
    {
        validate(layout.dims);
        StencilLayout s{layout.dims.stencil_thickness, layout.dims.stencil_opening, {}};
        for (std::size_t r = 0; r < layout.dims.rows; ++r)
            for (std::size_t c = 0; c < layout.dims.cols; ++c)
                if (layout.well_states.on(r, c))
                    s.openings_at.emplace_back(r, c);
        return s;
    }

    namespace detail
    {
        inline constexpr double mm = 1e3;

        // Plate of side `side` in the xy-plane with square holes of side `hole`
        // at the selected lattice sites, meshed on the tensor grid of all hole
        // edges so that neighbouring faces share edges exactly. Holes with
        // `floor_z` above z0 become blind pockets, otherwise they go through.
        inline stl::Mesh perforated_plate(const InkwellLayout &layout, double hole, double thickness, double pocket_depth,
                                          const std::vector<std::uint8_t> &open)
        {
            const auto &d = layout.dims;
            const double half = 0.5 * d.aperture_side * mm;
            const double h = 0.5 * hole * mm;
            detail::require(0.5 * double(d.cols - 1) * d.pitch * mm + h < half && 0.5 * double(d.rows - 1) * d.pitch * mm + h < half,
                            "wells touching the plate edge cannot be meshed");

            // Breakpoints ascending; x decreases with column index.
            std::vector<double> xs{-half}, ys{-half};
            for (std::size_t i = 0; i < d.cols; ++i)
            {
                const double cx = layout.well_x(d.cols - 1 - i) * mm;
                xs.push_back(cx - h);
                xs.push_back(cx + h);
            }
            xs.push_back(half);
            for (std::size_t i = 0; i < d.rows; ++i)
            {
                const double cy = layout.well_y(d.rows - 1 - i) * mm;
                ys.push_back(cy - h);
                ys.push_back(cy + h);
            }
            ys.push_back(half);

            // Interval 2i+1 of xs is the hole span of column (cols-1-i); even intervals are walls.
            auto hole_at = [&](std::size_t ix, std::size_t iy) -> bool
            {
                if (ix % 2 == 0 || iy % 2 == 0)
                    return false;
                const std::size_t c = d.cols - 1 - (ix - 1) / 2;
                const std::size_t r = d.rows - 1 - (iy - 1) / 2;
                return open[r * d.cols + c] != 0;
            };

            const double z0 = 0.0;
            const double z1 = thickness * mm;
            const double zf = pocket_depth > 0.0 ? (thickness - pocket_depth) * mm : z0;
            const bool through = !(pocket_depth > 0.0);

            stl::Mesh mesh;
            for (std::size_t iy = 0; iy + 1 < ys.size(); ++iy)
            {
                for (std::size_t ix = 0; ix + 1 < xs.size(); ++ix)
                {
                    const double xa = xs[ix], xb = xs[ix + 1], ya = ys[iy], yb = ys[iy + 1];
                    if (!hole_at(ix, iy))
                    {
                        mesh.add_quad({xa, ya, z1}, {xb, ya, z1}, {xb, yb, z1}, {xa, yb, z1}, {0, 0, 1});
                        mesh.add_quad({xa, ya, z0}, {xb, ya, z0}, {xb, yb, z0}, {xa, yb, z0}, {0, 0, -1});
                        continue;
                    }
                    // Hole walls face into the hole.
                    mesh.add_quad({xa, ya, zf}, {xa, yb, zf}, {xa, yb, z1}, {xa, ya, z1}, {1, 0, 0});
                    mesh.add_quad({xb, ya, zf}, {xb, yb, zf}, {xb, yb, z1}, {xb, ya, z1}, {-1, 0, 0});
                    mesh.add_quad({xa, ya, zf}, {xb, ya, zf}, {xb, ya, z1}, {xa, ya, z1}, {0, 1, 0});
                    mesh.add_quad({xa, yb, zf}, {xb, yb, zf}, {xb, yb, z1}, {xa, yb, z1}, {0, -1, 0});
                    if (through)
                        continue;
                    mesh.add_quad({xa, ya, zf}, {xb, ya, zf}, {xb, yb, zf}, {xa, yb, zf}, {0, 0, 1});
                    mesh.add_quad({xa, ya, z0}, {xb, ya, z0}, {xb, yb, z0}, {xa, yb, z0}, {0, 0, -1});
                }
            }
            for (std::size_t ix = 0; ix + 1 < xs.size(); ++ix)
            {
                mesh.add_quad({xs[ix], -half, z0}, {xs[ix + 1], -half, z0}, {xs[ix + 1], -half, z1}, {xs[ix], -half, z1}, {0, -1, 0});
                mesh.add_quad({xs[ix], half, z0}, {xs[ix + 1], half, z0}, {xs[ix + 1], half, z1}, {xs[ix], half, z1}, {0, 1, 0});
            }
            for (std::size_t iy = 0; iy + 1 < ys.size(); ++iy)
            {
                mesh.add_quad({-half, ys[iy], z0}, {-half, ys[iy + 1], z0}, {-half, ys[iy + 1], z1}, {-half, ys[iy], z1}, {-1, 0, 0});
                mesh.add_quad({half, ys[iy], z0}, {half, ys[iy + 1], z0}, {half, ys[iy + 1], z1}, {half, ys[iy], z1}, {1, 0, 0});
            }
            return mesh;
        }
    }

    // Dielectric base, millimeters, bottom face at z = 0. Every lattice site has a well.
    inline stl::Mesh base_plate_mesh(const InkwellLayout &layout)
    {
        validate(layout.dims);
        const std::vector<std::uint8_t> all(layout.dims.rows * layout.dims.cols, 1);
        return detail::perforated_plate(layout, layout.dims.well_opening, layout.dims.base_thickness, layout.dims.well_depth, all);
    }

    // One well-filling cuboid per ON well.
    inline stl::Mesh pad_mesh(const InkwellLayout &layout)
    {
        validate(layout.dims);
        const auto &d = layout.dims;
        const double h = 0.5 * d.well_opening * detail::mm;
        const double z0 = (d.base_thickness - d.well_depth) * detail::mm;
        const double z1 = d.base_thickness * detail::mm;
        stl::Mesh mesh;
        for (std::size_t r = 0; r < d.rows; ++r)
            for (std::size_t c = 0; c < d.cols; ++c)
            {
                if (!layout.well_states.on(r, c))
                    continue;
                const double x = layout.well_x(c) * detail::mm;
                const double y = layout.well_y(r) * detail::mm;
                mesh.add_box({x - h, y - h, z0}, {x + h, y + h, z1});
            }
        return mesh;
    }

    // Stencil plate with through-openings above the ON wells, bottom face at z = 0.
    inline stl::Mesh stencil_mesh(const InkwellLayout &layout)
    {
        validate(layout.dims);
        return detail::perforated_plate(layout, layout.dims.stencil_opening, layout.dims.stencil_thickness, 0.0, layout.well_states.cells);
    }

    inline constexpr std::string_view stl_header = "inkwell binary STL, units: millimeters";

    inline std::string layout_report(const InkwellLayout &layout)
    {
        const auto &d = layout.dims;
        const std::size_t on = layout.well_states.on_count();
        const double fill = double(on) / double(d.rows * d.cols);

        std::vector<std::size_t> active_cols;
        for (std::size_t c = 0; c < d.cols; ++c)
            for (std::size_t r = 0; r < d.rows; ++r)
                if (layout.well_states.on(r, c))
                {
                    active_cols.push_back(c);
                    break;
                }

        std::ostringstream os;
        os << std::fixed << std::setprecision(4);
        os << "inkwell layout\n";
        os << "  grid               " << d.rows << " x " << d.cols << " wells, pitch " << d.pitch * 1e3 << " mm\n";
        os << "  plate              " << d.aperture_side * 1e3 << " x " << d.aperture_side * 1e3 << " mm, base "
           << d.base_thickness * 1e3 << " mm\n";
        os << "  well               " << d.well_opening * 1e3 << " mm square, depth " << d.well_depth * 1e3 << " mm\n";
        os << "  stencil            " << d.stencil_opening * 1e3 << " mm openings, thickness " << d.stencil_thickness * 1e3 << " mm\n";
        os << "  ON wells           " << on << "\n";
        os << "  fill fraction      " << fill << "\n";
        os << "  active columns     " << active_cols.size() << "\n";
        os << "  column strides     ";
        if (active_cols.size() < 2)
            os << "-";
        for (std::size_t i = 1; i < active_cols.size(); ++i)
            os << (i > 1 ? " " : "") << active_cols[i] - active_cols[i - 1];
        os << "\n";
        const double span = active_cols.empty() ? 0.0 : double(active_cols.back() - active_cols.front()) * d.pitch * 1e3;
        os << "  physical span      " << span << " mm (first to last active column center)\n";
        os << "  note               copper ground plane is applied as foil on the rear face; not part of the printed geometry\n";
        return os.str();
    }
}
