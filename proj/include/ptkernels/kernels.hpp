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

#include "ptkernels/common.hpp"
#include "ptkernels/coordmap.hpp"

namespace ptk::kernels {

struct KernelQuery {
    double height;    // Y > 0
    double interior;  // X > 0
    double boundary;  // X' > 0
};

struct ContourSpec {
    enum class Kind { talbot, vertical };
    Kind kind = Kind::talbot;
    double abscissa = 1.0;  // vertical contour only
    int node_count = 32;    // >= 8
    double truncation = 40.0;

    void validate() const;
};

struct HeatQuery {
    double time;      // t > 0
    double interior;  // X (or theta, x)
    double boundary;  // X' (or theta', x')
};

enum class HeatKind { euclidean, trig, hyp };

/// Poisson kernel of the half-line operator d^2_X + (1/4-nu^2)/X^2:
///   P_nu(Y,X,X') = -(2/pi) Y Q^1_{nu-1/2}(z) / sqrt((Y^2+(X+X')^2)(Y^2+(X-X')^2))
/// with z = (Y^2+X^2+X'^2)/(2XX').  Strictly positive; warns when the
/// query sits within 1e-12 of the coincidence singularity z = 1.
double poisson_kernel_euclidean(double nu, const KernelQuery& q,
                                WarningList* warnings = nullptr);

/// Trigonometric kernel: the Euclidean kernel composed with the strip map,
/// times the boundary pullback Jacobian sec^2(theta'/2).
double poisson_kernel_trig(double nu, double y, double theta, double theta_p,
                           WarningList* warnings = nullptr);

/// Hyperbolic kernel with an explicit map choice (hyp_paper reproduces the
/// literal substitution, hyp_conformal the derived conformal one), times
/// the Jacobian sech^2(x'/2).
double poisson_kernel_hyp(double nu, double y, double x, double x_p,
                          coordmap::MapKind kind, WarningList* warnings = nullptr);

/// Analytic continuation of the Euclidean kernel used on inversion
/// contours; X and Y may be complex, the Legendre radicals are cancelled
/// against the kernel denominator so the only branch is z^{-nu-3/2}.
std::complex<double> poisson_kernel_complex(std::complex<double> Y,
                                            std::complex<double> X, double Xp,
                                            double nu);

enum class InversionMode {
    transmutation,  // (1/(4 i sqrt(pi t))) \oint s^{-1/2} e^{st} F(s) ds
    validation      // plain inverse Laplace transform (1/(2 pi i)) \oint e^{st} F ds
};

/// Contour inversion with a doubling self-check: the node count is doubled
/// and a relative disagreement above 1e-6 raises convergence_error.
double bromwich_invert(const std::function<std::complex<double>(std::complex<double>)>& F,
                       double t, const ContourSpec& c,
                       InversionMode mode = InversionMode::transmutation);

/// Heat kernel by transmutation of the corresponding Poisson kernel.
/// map_kind selects the hyperbolic composition and is ignored otherwise.
double heat_kernel(HeatKind kind, double nu, const HeatQuery& hq,
                   const ContourSpec& c,
                   coordmap::MapKind map_kind = coordmap::MapKind::hyp_conformal);

}  // namespace ptk::kernels
