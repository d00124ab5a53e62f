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

// Triangle meshes and binary STL I/O (little-endian, 50-byte records).

#include "error.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace inkwell::stl
{
    struct Vec3
    {
        double x, y, z;
    };

    inline Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    inline Vec3 cross(const Vec3 &a, const Vec3 &b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
    inline double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

    struct Triangle
    {
        Vec3 a, b, c;

        Vec3 normal() const
        {
            const Vec3 n = cross(b - a, c - a);
            const double len = norm(n);
            return len > 0.0 ? Vec3{n.x / len, n.y / len, n.z / len} : Vec3{0.0, 0.0, 0.0};
        }
        double area() const { return 0.5 * norm(cross(b - a, c - a)); }
    };

    class Mesh
    {
    public:
        void add_triangle(const Vec3 &a, const Vec3 &b, const Vec3 &c)
        {
            Triangle t{a, b, c};
            if (!(t.area() > 1e-12))
                throw std::logic_error("refusing to emit a degenerate triangle");
            tris_.push_back(t);
        }

        // Planar quad p0-p1-p2-p3 (in order around its boundary), wound so that
        // its normal points along `outward`.
        void add_quad(const Vec3 &p0, const Vec3 &p1, const Vec3 &p2, const Vec3 &p3, const Vec3 &outward)
        {
            if (dot(cross(p1 - p0, p2 - p0), outward) >= 0.0)
            {
                add_triangle(p0, p1, p2);
                add_triangle(p0, p2, p3);
            }
            else
            {
                add_triangle(p0, p2, p1);
                add_triangle(p0, p3, p2);
            }
        }

        // Axis-aligned box with outward-facing triangles.
        void add_box(const Vec3 &lo, const Vec3 &hi)
        {
            const double x0 = lo.x, x1 = hi.x, y0 = lo.y, y1 = hi.y, z0 = lo.z, z1 = hi.z;
            add_quad({x0, y0, z1}, {x1, y0, z1}, {x1, y1, z1}, {x0, y1, z1}, {0, 0, 1});
            add_quad({x0, y0, z0}, {x1, y0, z0}, {x1, y1, z0}, {x0, y1, z0}, {0, 0, -1});
            add_quad({x0, y0, z0}, {x1, y0, z0}, {x1, y0, z1}, {x0, y0, z1}, {0, -1, 0});
            add_quad({x0, y1, z0}, {x1, y1, z0}, {x1, y1, z1}, {x0, y1, z1}, {0, 1, 0});
            add_quad({x0, y0, z0}, {x0, y1, z0}, {x0, y1, z1}, {x0, y0, z1}, {-1, 0, 0});
            add_quad({x1, y0, z0}, {x1, y1, z0}, {x1, y1, z1}, {x1, y0, z1}, {1, 0, 0});
        }

        void append(const Mesh &other) { tris_.insert(tris_.end(), other.tris_.begin(), other.tris_.end()); }

        const std::vector<Triangle> &triangles() const { return tris_; }
        std::size_t size() const { return tris_.size(); }

        // Signed volume by the divergence theorem; positive for outward winding.
        double signed_volume() const
        {
            double v = 0.0;
            for (const auto &t : tris_)
                v += dot(t.a, cross(t.b, t.c));
            return v / 6.0;
        }

    private:
        std::vector<Triangle> tris_;
    };

    namespace detail
    {
        inline void put_u32(std::string &buf, std::uint32_t v)
        {
            for (int i = 0; i < 4; ++i)
                buf.push_back(char((v >> (8 * i)) & 0xffu));
        }
        inline void put_f32(std::string &buf, double v) { put_u32(buf, std::bit_cast<std::uint32_t>(float(v))); }
        inline std::uint32_t get_u32(const unsigned char *p)
        {
            return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) | (std::uint32_t(p[2]) << 16) | (std::uint32_t(p[3]) << 24);
        }
        inline float get_f32(const unsigned char *p) { return std::bit_cast<float>(get_u32(p)); }
    }

    inline constexpr std::size_t header_size = 80;
    inline constexpr std::size_t record_size = 50;

    inline std::string encode_binary(const Mesh &mesh, std::string_view header_text)
    {
        std::string buf(header_size, '\0');
        std::memcpy(buf.data(), header_text.data(), std::min(header_text.size(), header_size));
        buf.reserve(header_size + 4 + record_size * mesh.size());
        detail::put_u32(buf, std::uint32_t(mesh.size()));
        for (const auto &t : mesh.triangles())
        {
            const Vec3 n = t.normal();
            for (const Vec3 &v : {n, t.a, t.b, t.c})
            {
                detail::put_f32(buf, v.x);
                detail::put_f32(buf, v.y);
                detail::put_f32(buf, v.z);
            }
            buf.push_back('\0');
            buf.push_back('\0');
        }
        return buf;
    }

    inline void write_binary(const std::string &path, const Mesh &mesh, std::string_view header_text)
    {
        const auto bytes = encode_binary(mesh, header_text);
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw IoError("cannot open '" + path + "' for writing");
        f.write(bytes.data(), std::streamsize(bytes.size()));
        if (!f)
            throw IoError("failed writing '" + path + "'");
    }

    struct StlFile
    {
        std::string header;
        std::uint32_t declared_count = 0;
        Mesh mesh;
    };

    inline StlFile decode_binary(std::string_view bytes)
    {
        if (bytes.size() < header_size + 4)
            throw ValidationError("STL data shorter than the 84-byte preamble");
        const auto *p = reinterpret_cast<const unsigned char *>(bytes.data());
        StlFile out;
        out.header.assign(bytes.data(), header_size);
        out.declared_count = detail::get_u32(p + header_size);
        if (bytes.size() != header_size + 4 + record_size * std::size_t(out.declared_count))
            throw ValidationError("STL size does not match its declared triangle count");
        for (std::uint32_t i = 0; i < out.declared_count; ++i)
        {
            const auto *r = p + header_size + 4 + record_size * i;
            auto vec = [&](int k) { return Vec3{detail::get_f32(r + 12 * k), detail::get_f32(r + 12 * k + 4), detail::get_f32(r + 12 * k + 8)}; };
            const Triangle t{vec(1), vec(2), vec(3)};
            if (!(t.area() > 1e-12))
                throw ValidationError("STL record " + std::to_string(i) + " is a degenerate triangle");
            out.mesh.add_triangle(t.a, t.b, t.c);
        }
        return out;
    }

    inline StlFile read_binary(const std::string &path)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw IoError("cannot open '" + path + "' for reading");
        std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        return decode_binary(bytes);
    }

    struct ManifoldCheck
    {
        std::size_t edges = 0;
        std::size_t non_manifold_edges = 0; // undirected edges not shared by exactly two triangles
        std::size_t inconsistent_edges = 0; // directed edges used more than once (flipped neighbours)
        bool closed() const { return edges > 0 && non_manifold_edges == 0 && inconsistent_edges == 0; }
    };

    // Edge-incidence check on single-precision vertex keys (what the file stores).
    inline ManifoldCheck check_manifold(const Mesh &mesh)
    {
        using Key = std::array<std::uint32_t, 3>;
        auto key = [](const Vec3 &v)
        { return Key{std::bit_cast<std::uint32_t>(float(v.x)), std::bit_cast<std::uint32_t>(float(v.y)), std::bit_cast<std::uint32_t>(float(v.z))}; };
        std::map<std::pair<Key, Key>, int> directed;
        for (const auto &t : mesh.triangles())
        {
            const Key k[3] = {key(t.a), key(t.b), key(t.c)};
            for (int i = 0; i < 3; ++i)
                ++directed[{k[i], k[(i + 1) % 3]}];
        }
        ManifoldCheck c;
        std::map<std::pair<Key, Key>, int> undirected;
        for (const auto &[e, n] : directed)
        {
            if (n != 1)
                ++c.inconsistent_edges;
            const auto u = e.first < e.second ? e : std::make_pair(e.second, e.first);
            undirected[u] += n;
        }
        c.edges = undirected.size();
        for (const auto &[e, n] : undirected)
            if (n != 2)
                ++c.non_manifold_edges;
        return c;
    }
}
