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

#include <functional>
#include <vector>

#include "ptkernels/common.hpp"

namespace ptk {

// Controls for the oscillatory-integral oracles: truncation is the upper
// integration limit (where one is not implied by the integrand), panels a
// lower bound on the composite panel count, tail_tolerance the budget for
// the discarded tail.
struct QuadratureSpec {
    double truncation = 40.0;
    int panels = 64;
    int nodes_per_panel = 8;
    double tail_tolerance = 1e-9;

    void validate() const;
};

struct GaussLegendreRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

/// Nodes and weights for n-point Gauss-Legendre, cached per n.
const GaussLegendreRule& gauss_legendre(int n);

/// Composite Gauss-Legendre over [a, b] with n_panels equal panels.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n_panels, int nodes_per_panel);

}  // namespace ptk
