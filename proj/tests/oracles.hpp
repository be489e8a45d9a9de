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

// Test-only oracles, independent of the library's evaluation paths.

#pragma once

#include <cmath>
#include <functional>

namespace oracles {

inline constexpr double kPi = 3.14159265358979323846;

/// Zero-potential (nu = 1/2) half-line Poisson kernel by the image charge:
///   (1/pi) [ Y/(Y^2+(X-X')^2) - Y/(Y^2+(X+X')^2) ].
inline double image_kernel(double Y, double X, double Xp) {
    const double dm = X - Xp, dp = X + Xp;
    return (Y / (Y * Y + dm * dm) - Y / (Y * Y + dp * dp)) / kPi;
}

/// nu = 1/2 closed form of the weighted Bessel-product Laplace integral,
/// via J_{1/2}(x) = sqrt(2/(pi x)) sin x and the elementary sine integral.
inline double weighted_laplace_half(double p, double a, double b) {
    const double dm = a - b, dp = a + b;
    return (p / (p * p + dm * dm) - p / (p * p + dp * dp)) / (kPi * std::sqrt(a * b));
}

/// nu = 1/2 heat kernel by Gaussian images.
inline double heat_kernel_half(double t, double X, double Xp) {
    const double dm = X - Xp, dp = X + Xp;
    return (std::exp(-dm * dm / (4.0 * t)) - std::exp(-dp * dp / (4.0 * t))) /
           std::sqrt(4.0 * kPi * t);
}

/// Composite-trapezoid quadrature on [a, b] with n intervals; a deliberately
/// naive reference rule for cross-checks.
inline double trapezoid(const std::function<double(double)>& f, double a, double b,
                        int n) {
    const double h = (b - a) / n;
    double s = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i) s += f(a + i * h);
    return s * h;
}

/// Simpson reference rule.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace oracles
