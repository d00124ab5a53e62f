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

// Minimal CSV helpers for the numeric files this toolkit reads and writes.

#include "error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace inkwell::csv
{
    inline std::string_view trim(std::string_view s)
    {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    }

    inline std::vector<std::string_view> split(std::string_view line)
    {
        std::vector<std::string_view> out;
        std::size_t start = 0;
        while (true)
        {
            const auto pos = line.find(',', start);
            out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
            if (pos == std::string_view::npos)
                break;
            start = pos + 1;
        }
        return out;
    }

    inline double parse_double(std::string_view field, std::size_t line_no, std::string_view column)
    {
        double value = 0.0;
        if (!field.empty() && field.front() == '+')
            field.remove_prefix(1);
        const auto *end = field.data() + field.size();
        const auto [ptr, ec] = std::from_chars(field.data(), end, value);
        if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(value))
            throw ValidationError("line " + std::to_string(line_no) + ": column '" + std::string(column) +
                                  "' is not a finite number: '" + std::string(field) + "'");
        return value;
    }

    // A parsed data row together with its 1-based line number in the source.
    struct Row
    {
        std::size_t line_no;
        std::vector<std::string> fields;
    };

    // Reads a CSV whose first non-empty line must equal `header` exactly.
    // Blank lines are skipped; every data row must have the header's column count.
    inline std::vector<Row> read_with_header(std::istream &in, std::string_view header)
    {
        std::vector<Row> rows;
        std::string line;
        std::size_t line_no = 0;
        bool seen_header = false;
        const auto columns = split(header).size();
        while (std::getline(in, line))
        {
            ++line_no;
            const auto t = trim(line);
            if (t.empty())
                continue;
            if (!seen_header)
            {
                if (t != header)
                    throw ValidationError("line " + std::to_string(line_no) + ": expected header '" + std::string(header) +
                                          "', found '" + std::string(t) + "'");
                seen_header = true;
                continue;
            }
            Row row{line_no, {}};
            for (auto f : split(t))
                row.fields.emplace_back(f);
            if (row.fields.size() != columns)
                throw ValidationError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                                      " columns, found " + std::to_string(row.fields.size()));
            rows.push_back(std::move(row));
        }
        if (!seen_header)
            throw ValidationError("missing CSV header '" + std::string(header) + "'");
        return rows;
    }

    // Shortest representation that reads back to the same double.
    inline std::string format(double v)
    {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        (void)ec;
        return std::string(buf, ptr);
    }
}
