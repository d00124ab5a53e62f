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

// JSON mask file: the exchange format between synthesis, simulation and
// fabrication export. Lengths are meters, angles degrees, psi radians.
// Bit m corresponds to element m (x decreasing with m).

#include "core_model.hpp"
#include "mask_synthesis.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <string>

namespace inkwell
{
    inline constexpr int mask_file_version = 1;

    struct MaskFile
    {
        int version = mask_file_version;
        std::size_t element_count = 0;
        double d0_m = 0.0;
        double lambda_m = 0.0;
        double theta_i_deg = 0.0;
        std::vector<BeamTarget> targets;
        double psi_rad = 0.0;
        std::vector<std::uint8_t> bits;

        Aperture aperture() const { return Aperture(element_count, d0_m, lambda_m); }
        ReflectionCoefficients coefficients() const { return ReflectionCoefficients::binary(bits); }
        SteeringTask task() const { return SteeringTask(theta_i_deg, targets, psi_rad); }
    };

    inline std::string bits_to_string(std::span<const std::uint8_t> bits)
    {
        std::string s(bits.size(), '0');
        for (std::size_t m = 0; m < bits.size(); ++m)
            s[m] = bits[m] ? '1' : '0';
        return s;
    }

    inline std::vector<std::uint8_t> bits_from_string(std::string_view s)
    {
        std::vector<std::uint8_t> bits(s.size());
        for (std::size_t m = 0; m < s.size(); ++m)
        {
            detail::require(s[m] == '0' || s[m] == '1', "bits string may only contain '0' and '1'");
            bits[m] = s[m] == '1' ? 1 : 0;
        }
        return bits;
    }

    inline MaskFile make_mask_file(const Aperture &aperture, const SteeringTask &task, const ReflectionCoefficients &mask)
    {
        detail::require(mask.size() == aperture.size(), "mask length does not match the aperture");
        MaskFile f;
        f.element_count = aperture.size();
        f.d0_m = aperture.spacing();
        f.lambda_m = aperture.wavelength();
        f.theta_i_deg = task.incidence_deg();
        f.targets = task.targets();
        f.psi_rad = task.psi();
        f.bits = mask.bits();
        return f;
    }

    inline nlohmann::ordered_json to_json(const MaskFile &f)
    {
        nlohmann::ordered_json j;
        j["version"] = f.version;
        j["M"] = f.element_count;
        j["d0_m"] = f.d0_m;
        j["lambda_m"] = f.lambda_m;
        j["theta_i_deg"] = f.theta_i_deg;
        j["targets"] = nlohmann::ordered_json::array();
        for (const auto &t : f.targets)
            j["targets"].push_back({{"theta_deg", t.theta_deg}, {"weight_re", t.weight.real()}, {"weight_im", t.weight.imag()}});
        j["psi_rad"] = f.psi_rad;
        j["bits"] = bits_to_string(f.bits);
        return j;
    }

    inline MaskFile mask_file_from_json(const nlohmann::json &j)
    {
        try
        {
            MaskFile f;
            f.version = j.at("version").get<int>();
            detail::require(f.version == mask_file_version, "unsupported mask file version " + std::to_string(f.version));
            f.element_count = j.at("M").get<std::size_t>();
            f.d0_m = j.at("d0_m").get<double>();
            f.lambda_m = j.at("lambda_m").get<double>();
            f.theta_i_deg = j.at("theta_i_deg").get<double>();
            for (const auto &t : j.at("targets"))
                f.targets.push_back({t.at("theta_deg").get<double>(),
                                     cplx(t.at("weight_re").get<double>(), t.at("weight_im").get<double>())});
            f.psi_rad = j.at("psi_rad").get<double>();
            f.bits = bits_from_string(j.at("bits").get<std::string>());
            detail::require(f.bits.size() == f.element_count, "bits length " + std::to_string(f.bits.size()) +
                                                                  " does not match M = " + std::to_string(f.element_count));
            (void)f.aperture();
            (void)f.task();
            return f;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ValidationError(std::string("malformed mask file: ") + e.what());
        }
    }

    inline void save_mask_file(const std::string &path, const MaskFile &f)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw IoError("cannot open '" + path + "' for writing");
        out << to_json(f).dump(2) << '\n';
        if (!out)
            throw IoError("failed writing '" + path + "'");
    }

    inline MaskFile load_mask_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("cannot open '" + path + "' for reading");
        nlohmann::json j;
        try
        {
            in >> j;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
        }
        return mask_file_from_json(j);
    }
}
