// Copyright 2026 the ptkernels authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ptk {

inline constexpr double kPi = 3.14159265358979323846;

/// Bad inputs: wrong domains, malformed requests, schema violations.
/// The CLI maps this class to exit status 2.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numerical scheme failed to converge (series cap, iteration cap,
/// contour doubling check).  The CLI maps this class to exit status 3.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation at a pole of a special function.
struct pole_error : validation_error {
    using validation_error::validation_error;
};

// Non-fatal diagnostics.  Callers that care pass a list; everyone else
// passes nullptr and the message is dropped.
using WarningList = std::vector<std::string>;

inline void warn(WarningList* sink, std::string message) {
    if (sink) sink->push_back(std::move(message));
}

}  // namespace ptk
