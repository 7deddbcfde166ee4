// SPDX-License-Identifier: Apache-2.0
//
// risforge - active multi-RIS MIMO link simulator and optimizer
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

namespace risforge
{
    // Bad inputs supplied by the caller: malformed scenario data, violated
    // type invariants, inconsistent arguments. CLI exit code 2.
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A scenario or run file failed schema/invariant validation.
    class ValidationError : public ConfigError
    {
    public:
        using ConfigError::ConfigError;
    };

    // A file could not be parsed at all (syntax level).
    class ParseError : public ConfigError
    {
    public:
        using ConfigError::ConfigError;
    };

    // Numerical failure at runtime: singular covariance, non-finite input,
    // degenerate (zero-distance) link. CLI exit code 3.
    class NumericError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
