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
#include <iosfwd>
#include <string>
#include <vector>

#include "ptkernels/sampled.hpp"

namespace ptk::pde {

// coord1 is the potential coordinate (X, theta or x), staggered half a
// cell off both ends so the singular lines are never sampled; coord2 is
// the height, with the data row at coord2 = lo2 and homogeneous Dirichlet
// on the other three edges.
struct Grid2D {
    double lo1 = 0.0, hi1 = 20.0;
    int n1 = 256;
    double lo2 = 0.0, hi2 = 20.0;
    int n2 = 256;
    bool staggered = true;

    void validate() const;
    double h1() const { return (hi1 - lo1) / n1; }
    double h2() const { return (hi2 - lo2) / n2; }
    double coord1(int i) const { return lo1 + (i + 0.5) * h1(); }
    double coord2(int j) const { return lo2 + j * h2(); }
};

enum class OperatorTag { inverse_square, trig_pt, hyp_pt };

std::string to_string(OperatorTag t);
OperatorTag operator_tag_from_string(const std::string& s);

struct OperatorKind {
    OperatorTag tag = OperatorTag::inverse_square;
    double potential_coeff = 1.0;  // c > 0; the literal reproduction value is 1/16
    double nu = 1.0;

    double potential(double c1) const;  // c * (1/4 - nu^2) / {c1, sin c1, sinh c1}^2
    void validate() const;
};

struct Field {
    Grid2D grid;
    std::vector<double> values;  // row-major, (n2+1) rows of n1; row 0 = data

    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * grid.n1 + i]; }
    double sample(double c1, double c2) const;  // bilinear, clamped to the grid
    void write_csv(std::ostream& os, const std::string& json_header) const;
};

struct SolverStats {
    int iterations = 0;
    double residual = 0.0;
};

/// Five-point discretization of (d^2_1 + d^2_2 + V) u = 0 with the given
/// data on the bottom edge; Jacobi-preconditioned conjugate gradients.
Field fd_solve_dirichlet(const OperatorKind& op, const SampledFunction& boundary,
                         const Grid2D& grid, double tol = 1e-10,
                         WarningList* warnings = nullptr, int max_iterations = 200000,
                         SolverStats* stats = nullptr);

struct PdeResidualReport {
    std::vector<double> steps;
    std::vector<double> max_residuals;
    std::vector<double> l2_residuals;
    std::vector<double> orders;
    double empirical_order = 0.0;  // min over halvings
    std::string to_json() const;
};

/// Applies the operator to a closed-form function by central differences
/// at the probes, for `levels` successive halvings of h.
PdeResidualReport pde_residual(const OperatorKind& op,
                               const std::function<double(double, double)>& f,
                               const std::vector<std::pair<double, double>>& probes,
                               double h, int levels = 4, WarningList* warnings = nullptr);

}  // namespace ptk::pde
