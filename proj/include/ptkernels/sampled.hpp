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

#include <iosfwd>
#include <string>
#include <vector>

#include "ptkernels/common.hpp"

namespace ptk {

// One-dimensional grid samples; the carrier for boundary data, transform
// images and solution slices.  Treated as identically zero outside the
// grid span.
struct SampledFunction {
    std::vector<double> grid;
    std::vector<double> values;

    void validate() const;  // strictly increasing grid, equal lengths, finite values
    std::size_t size() const { return grid.size(); }
};

/// Natural cubic spline through the samples; evaluates to 0 outside the span.
class CubicSpline {
  public:
    explicit CubicSpline(const SampledFunction& f);
    double operator()(double x) const;
    double lo() const { return x_.front(); }
    double hi() const { return x_.back(); }

  private:
    std::vector<double> x_, y_, m_;  // m_: second derivatives
};

/// Two-column CSV (coordinate, value).  Lines starting with '#' are skipped.
SampledFunction read_series_csv(const std::string& path);
void write_series_csv(std::ostream& os, const std::string& header,
                      const SampledFunction& f);

/// Evenly spaced grid helper, n points from a to b inclusive.
std::vector<double> linspace(double a, double b, int n);

}  // namespace ptk
