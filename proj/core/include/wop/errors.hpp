/*
   Copyright 2026 The wopineq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace wop {

/// Bad caller input: malformed values, violated preconditions, caps exceeded.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not. Always a bug, never bad input.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Composite quadrature failed to settle within the allowed panel doublings.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double previous, double last)
        : std::runtime_error(what), previous_(previous), last_(last) {}

    double previous_estimate() const noexcept { return previous_; }
    double last_estimate() const noexcept { return last_; }

private:
    double previous_;
    double last_;
};

}  // namespace wop
