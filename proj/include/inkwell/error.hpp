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

#include <stdexcept>
#include <string>

namespace inkwell
{
    // Invalid input: bad geometry, malformed files, violated preconditions.
    class ValidationError : public std::invalid_argument
    {
    public:
        explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
    };

    // File system failures (unreadable input, unwritable output).
    class IoError : public std::runtime_error
    {
    public:
        explicit IoError(const std::string &what) : std::runtime_error(what) {}
    };

    namespace detail
    {
        inline void require(bool condition, const std::string &message)
        {
            if (!condition)
                throw ValidationError(message);
        }
    }
}
