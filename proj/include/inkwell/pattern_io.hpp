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

// CSV form of AngularPattern: theta_deg,re,im,gain_linear,gain_db.

#include "core_model.hpp"
#include "csv.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace inkwell
{
    inline constexpr std::string_view pattern_csv_header = "theta_deg,re,im,gain_linear,gain_db";

    inline void write_pattern_csv(std::ostream &out, const AngularPattern &pattern)
    {
        out << pattern_csv_header << '\n';
        for (std::size_t i = 0; i < pattern.size(); ++i)
        {
            out << csv::format(pattern.theta_deg[i]) << ',' << csv::format(pattern.response[i].real()) << ','
                << csv::format(pattern.response[i].imag()) << ',' << csv::format(pattern.gain[i]) << ','
                << csv::format(pattern.gain_db(i)) << '\n';
        }
    }

    // Reads a pattern CSV back. The normalization is not stored in the file, so
    // it is reconstructed from the first sample with non-zero response.
    inline AngularPattern read_pattern_csv(std::istream &in, double incidence_deg = 0.0)
    {
        const auto rows = csv::read_with_header(in, pattern_csv_header);
        detail::require(!rows.empty(), "pattern CSV has no data rows");
        AngularPattern p;
        p.incidence_deg = incidence_deg;
        for (const auto &row : rows)
        {
            const double theta = csv::parse_double(row.fields[0], row.line_no, "theta_deg");
            const double re = csv::parse_double(row.fields[1], row.line_no, "re");
            const double im = csv::parse_double(row.fields[2], row.line_no, "im");
            const double g = csv::parse_double(row.fields[3], row.line_no, "gain_linear");
            if (!p.theta_deg.empty() && theta <= p.theta_deg.back())
                throw ValidationError("line " + std::to_string(row.line_no) + ": theta_deg must be strictly increasing");
            p.theta_deg.push_back(theta);
            p.response.emplace_back(re, im);
            p.gain.push_back(g);
        }
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.gain[i] > 0.0)
            {
                p.normalization = std::abs(p.response[i]) / std::sqrt(p.gain[i]);
                break;
            }
        return p;
    }

    inline void save_pattern_csv(const std::string &path, const AngularPattern &pattern)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw IoError("cannot open '" + path + "' for writing");
        write_pattern_csv(f, pattern);
        if (!f)
            throw IoError("failed writing '" + path + "'");
    }

    inline AngularPattern load_pattern_csv(const std::string &path, double incidence_deg = 0.0)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw IoError("cannot open '" + path + "' for reading");
        return read_pattern_csv(f, incidence_deg);
    }
}
