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

#include <string>

#include "ptkernels/kernels.hpp"
#include "ptkernels/pde.hpp"
#include "ptkernels/quadrature.hpp"
#include "ptkernels/sampled.hpp"

namespace ptk::solve {

enum class DomainTag { euclidean, trig, hyp };

std::string to_string(DomainTag t);
DomainTag domain_tag_from_string(const std::string& s);

struct BoundaryData {
    SampledFunction samples;
    DomainTag domain = DomainTag::euclidean;

    void validate() const;  // support strictly inside the open domain
};

QuadratureSpec solve_default_quadrature();

struct SolveRequest {
    double nu = 0.5;
    BoundaryData data;
    double height = 1.0;
    std::vector<double> out_grid;
    QuadratureSpec quadrature = solve_default_quadrature();
    coordmap::MapKind map_kind = coordmap::MapKind::hyp_conformal;  // hyp only
    double potential_coeff = 1.0;  // reporting only

    void validate() const;
};

/// Composite-Simpson quadrature of kernel x data over the data support,
/// with graded panel refinement around the kernel peak.
SampledFunction solve_euclidean(const SolveRequest& r, WarningList* warnings = nullptr);
SampledFunction solve_trig(const SolveRequest& r, WarningList* warnings = nullptr);
SampledFunction solve_hyp(const SolveRequest& r, WarningList* warnings = nullptr);

struct ProbeComparison {
    double c1 = 0.0, c2 = 0.0;
    double closed_form = 0.0;
    double fd = 0.0;
    double rel_error = 0.0;
};

struct FdComparisonReport {
    std::vector<ProbeComparison> probes;
    double max_rel_error = 0.0;
    double l2_rel_error = 0.0;
    bool certified = false;  // max_rel_error <= 1e-2
    std::string kind;
    double nu = 0.0;
    double c = 1.0;
    std::string map_kind;  // hyp only, empty otherwise
    std::string to_json() const;
};

/// Runs the closed-form solve and the finite-difference solve on identical
/// data and reports probe-wise relative errors.  Probe coordinates are
/// snapped to grid nodes so no interpolation error enters the comparison.
FdComparisonReport compare_with_fd(const SolveRequest& r, const pde::Grid2D& grid,
                                   const std::vector<std::pair<double, double>>& probes,
                                   WarningList* warnings = nullptr);

}  // namespace ptk::solve
