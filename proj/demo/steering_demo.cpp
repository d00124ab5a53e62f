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

// Single-beam design at 60 GHz on a 35-element, half-wavelength lattice:
// synthesize the ON/OFF mask, compare it with the other aperture-control
// schemes, then contrast it with a uniform-period design on the same scaffold.

#include <inkwell/inkwell.hpp>

#include <cstdio>

using namespace inkwell;

int main()
{
    const double lambda = 5e-3;
    const double d0 = 2.5e-3;
    const Aperture ap(35, d0, lambda);
    const auto task = SteeringTask::single(45.0, -10.0);

    const auto mask = synthesize_mask(ap, task);
    std::printf("mask   %s\n", bits_to_string(mask.bits()).c_str());
    std::printf("eta_M  %.3f\n\n", thinning_ratio(mask));

    std::printf("%-16s %10s %10s\n", "scheme", "gain[dB]", "loss[dB]");
    for (const auto &e : loss_report(ap, task))
        std::printf("%-16s %10.2f %10.2f\n", e.scheme.c_str(), to_db(e.gamma), e.loss_db);

    const auto reflection = angle_grid(-90.0, 0.0, 0.5);
    const auto onoff_r = pattern_sweep(ap, mask, 45.0, reflection);
    const auto ideal_r = pattern_sweep(ap, ideal_continuous_weights(ap, task), 45.0, reflection);
    const AngleInterval windows[] = {lobe_window(-10.0, 35, d0, lambda), lobe_window(-45.0, 35, d0, lambda)};
    std::printf("\nPSLR (reflection half-space, target and specular lobes excluded)\n");
    std::printf("  on/off %.2f dB\n  ideal  %.2f dB\n", peak_to_sidelobe(onoff_r, windows), peak_to_sidelobe(ideal_r, windows));

    const auto design = snap_design(design_period(45.0, -10.0, lambda, 1), d0, 35);
    std::printf("\nuniform period %.2f mm -> stride %d, %d active elements\n", design.period * 1e3, design.snapped->stride,
                design.snapped->m_active);
    for (const auto &o : visible_orders(design.period, lambda, 45.0).directions)
        std::printf("  order %+d at %7.2f deg\n", o.order, o.theta_deg);
    return 0;
}
