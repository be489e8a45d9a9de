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

#include "ptkernels/quadrature.hpp"
#include "ptkernels/sampled.hpp"

namespace ptk::hankel {

/// Hankel transform of order nu > -1:
///   (H_nu f)(Omega) = int (X Omega)^{1/2} J_nu(X Omega) f(X) dX
/// over the support of f (zero outside), evaluated on out_grid by
/// panel-wise Gauss-Legendre with panel width <= pi/(4 Omega).
SampledFunction hankel_transform(const SampledFunction& f, double nu,
                                 const std::vector<double>& out_grid,
                                 const QuadratureSpec& q,
                                 WarningList* warnings = nullptr);

/// int_0^infty exp(-p x) J_nu(a x) J_nu(b x) x dx for nu > -1/2, p > 0.
/// Truncated where exp(-p x) falls below the tail budget.
double weighted_laplace_integral(double nu, double p, double a, double b,
                                 const QuadratureSpec& q,
                                 WarningList* warnings = nullptr);

/// int_0^infty (X X')^{1/2} J_nu(X O) J_nu(X' O) exp(-t O^2) O dO,
/// the spectral representation of the heat kernel; truncation at
/// max(8/sqrt(t), 40).
double heat_spectral_integral(double nu, double t, double X, double Xp,
                              const QuadratureSpec& q);

struct HankelPropertyReport {
    double involution = 0.0;
    double isometry = 0.0;
    double self_adjoint = 0.0;
    double diagonalization = 0.0;
    std::string to_json() const;
};

/// Residuals for the transform's structural identities: involution
/// ||H^2 f - f||/||f||, isometry | ||Hf|| - ||f|| |/||f||, self-adjointness
/// against a fixed test partner, and diagonalization
/// ||H(L_nu f) + Omega^2 Hf||/||f|| with L_nu applied by central differences.
HankelPropertyReport check_hankel_properties(const SampledFunction& f, double nu,
                                             const QuadratureSpec& q);

}  // namespace ptk::hankel
