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

#include "bounds_lab.hpp"
#include "core_model.hpp"
#include "csv.hpp"
#include "diffraction_design.hpp"
#include "error.hpp"
#include "fab_export.hpp"
#include "figures.hpp"
#include "mask_file.hpp"
#include "mask_synthesis.hpp"
#include "measurement.hpp"
#include "pattern_io.hpp"
#include "stl.hpp"
