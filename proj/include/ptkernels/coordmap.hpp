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

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "ptkernels/common.hpp"

namespace ptk::coordmap {

// trig:          strip (theta, y) -> half plane, w |-> 2 tan(w/2)
// hyp_paper:     the literal quarter-plane substitution (not conformal)
// hyp_conformal: quarter strip (x, y<pi) -> half plane, w |-> 2 tanh(w/2)
enum class MapKind { trig, hyp_paper, hyp_conformal };

std::string to_string(MapKind k);
MapKind map_kind_from_string(const std::string& s);

struct StripPoint {
    double theta;  // in (0, pi)
    double y;      // >= 0
};

struct QuarterPoint {
    double x;  // > 0
    double y;  // >= 0
};

struct HalfPlanePoint {
    double X;
    double Y;
};

/// (theta, y) |-> (2 sin(theta), 2 sinh(y)) / (cos(theta) + cosh(y)).
/// Real image of w |-> 2 tan(w/2); the boundary y = 0 goes to Y = 0,
/// X = 2 tan(theta/2).
HalfPlanePoint trig_map(const StripPoint& p);

/// kind = hyp_paper:     (2 sinh x, 2 sinh y) / (cosh x + cosh y)
/// kind = hyp_conformal: (2 sinh x, 2 sin y) / (cosh x + cos y), needs y < pi
HalfPlanePoint hyp_map(MapKind kind, const QuarterPoint& p);

/// Image boundary coordinate X' and Jacobian dX'/d(coord):
/// trig -> (2 tan(c/2), sec^2(c/2)); hyp -> (2 tanh(c/2), sech^2(c/2)).
std::pair<double, double> boundary_pullback(MapKind kind, double boundary_coord);

// Analytic continuation of the maps in the height variable, used by the
// heat-kernel contour integrals.
struct ComplexImage {
    std::complex<double> X;
    std::complex<double> Y;
};
ComplexImage trig_map_complex(double theta, std::complex<double> y);
ComplexImage hyp_map_complex(MapKind kind, double x, std::complex<double> y);

/// Discrete Cauchy-Riemann defect of the map at (u, v) (first coordinate,
/// height), max of the two equations, central differences with step h.
double cauchy_riemann_residual(MapKind kind, double u, double v, double h);

struct GridBox {
    double lo1, hi1;
    int n1;
    double lo2, hi2;
    int n2;
};

struct ConjugationReport {
    double max_residual = 0.0;
    double l2_residual = 0.0;
    double empirical_order = 0.0;     // min of the per-halving orders
    std::vector<double> orders;       // between successive h halvings
    std::vector<double> max_residuals;  // per h level
    MapKind kind = MapKind::trig;
    double c = 1.0;
    double nu = 0.0;
    double h = 0.0;                   // finest step used
    std::string to_json() const;      // fixed keys per the report interface
};

/// Measures, by second-order central differences, how far the candidate
/// substitution is from conjugating the half-plane operator
/// d^2_X + d^2_Y + (1/4-nu^2)/X^2 into the model operator
/// d^2 + d^2 + c (1/4-nu^2)/sin^2 (resp. sinh^2) times the conformal factor.
/// F is a smooth test function on the half plane.  Residuals are reported
/// at h, and the convergence order across halvings down to h.
ConjugationReport conjugation_residual(MapKind kind, double c, double nu,
                                       const std::function<double(double, double)>& F,
                                       const GridBox& grid, double h,
                                       int levels = 4,
                                       WarningList* warnings = nullptr);

}  // namespace ptk::coordmap
