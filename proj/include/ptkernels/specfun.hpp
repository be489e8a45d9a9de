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

#include "ptkernels/common.hpp"

namespace ptk::specfun {

struct HypergeometricParams {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    double z = 0.0;
};

// degree is the function's degree (the kernel formulas use degree = nu - 1/2),
// order is mu in {0, 1}, argument z on the real ray z > 1.
struct LegendreSpec {
    double degree = 0.0;
    int order = 0;
    double z = 2.0;
};

struct BesselSpec {
    double order = 0.0;     // > -1
    double argument = 0.0;  // >= 0
};

/// Euler Gamma via a fixed-coefficient Lanczos approximation, reflection
/// formula for x < 1/2.  Throws pole_error at non-positive integers.
double gamma_fn(double x);

/// 1/Gamma(x), defined as 0 at the poles.
double rgamma_fn(double x);

/// Digamma (logarithmic derivative of Gamma); recurrence to x >= 10 plus
/// the Bernoulli asymptotic tail, reflection for x < 1/2.
double digamma(double x);

/// Rising factorial (a)_n computed as a direct product, so it is total
/// (no Gamma poles).
double pochhammer(double a, int n);

/// Gauss hypergeometric 2F1(a,b;c;z) for real |z| < 1.  Direct series up
/// to |z| = 1/2; for 1/2 < z < 1 the argument is mapped to 1-z by the
/// standard linear connection formulas (including the logarithmic cases
/// when c-a-b is an integer); Pfaff transformation for z < -1/2.
double gauss_2f1(const HypergeometricParams& p);

/// Complex-argument evaluation with real parameters; used by the contour
/// integrals.  Same region strategy as the real version.
std::complex<double> gauss_2f1_complex(double a, double b, double c,
                                       std::complex<double> z);

/// Real-valued associated Legendre function of the second kind on z > 1
/// (real branch; for mu = 1 this is negative, e.g. Q^1_0(z) = -(z^2-1)^{-1/2}).
double legendre_q(const LegendreSpec& s);

/// Bessel J_nu(x), nu > -1, x >= 0.  Power series for x <= 12, Hankel
/// asymptotic expansion truncated at its smallest term beyond that.
double bessel_j(const BesselSpec& s);
inline double bessel_j(double nu, double x) { return bessel_j({nu, x}); }

/// Modified Bessel I_nu(x), nu > -1, x >= 0.  Power series for x <= 30,
/// asymptotic expansion beyond.  With scaled=true returns exp(-x) I_nu(x);
/// unscaled evaluation past the overflow range throws.
double bessel_i(double order, double x, bool scaled = false);

namespace detail {
// Raw representations, exposed for oracle-style tests.
double bessel_j_series(double nu, double x);
double bessel_j_asymptotic(double nu, double x);
}  // namespace detail

}  // namespace ptk::specfun
