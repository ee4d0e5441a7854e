// SPDX-License-Identifier: Apache-2.0
//
// secna: sliding extended coprime nested arrays for non-circular DOA estimation
// Copyright (C) 2026 The secna authors
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

namespace secna
{
    // Bad argument supplied by the caller. The CLI maps this to exit code 2.
    class ParameterError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // A documented precondition of an operation does not hold for its input.
    class PreconditionError : public ParameterError
    {
    public:
        using ParameterError::ParameterError;
    };

    // More sources requested than the virtual array can resolve.
    class CapacityError : public ParameterError
    {
    public:
        using ParameterError::ParameterError;
    };

    // RMSE requested over an empty set of trials.
    class UndefinedRmseError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Internal consistency check failed. The CLI maps this to exit code 3.
    class InvariantError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    namespace detail
    {
        inline void require(bool ok, const std::string &what)
        {
            if (!ok)
                throw ParameterError(what);
        }

        inline void ensure(bool ok, const std::string &what)
        {
            if (!ok)
                throw InvariantError(what);
        }
    }
}
