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

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "ptkernels/hankel.hpp"
#include "ptkernels/specfun.hpp"

using namespace ptk;
using namespace ptk::hankel;

namespace {

SampledFunction gaussian_bump(double center, double width, double lo, double hi, int n) {
    SampledFunction f;
    f.grid = linspace(lo, hi, n);
    f.values.resize(f.grid.size());
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        const double u = (f.grid[i] - center) / width;
        f.values[i] = std::exp(-0.5 * u * u);
    }
    return f;
}

}  // namespace

TEST_CASE("hankel_transform: self-reciprocal eigenfunction at nu = 0") {
    // f(X) = X^{1/2} exp(-X^2/2) is its own image.
    SampledFunction f;
    f.grid = linspace(0.0, 12.0, 9601);
    f.values.resize(f.grid.size());
    for (std::size_t i = 0; i < f.grid.size(); ++i)
        f.values[i] = std::sqrt(f.grid[i]) * std::exp(-0.5 * f.grid[i] * f.grid[i]);
    QuadratureSpec q;
    const std::vector<double> omegas{0.5, 1.0, 2.0, 3.0, 5.0};
    const auto img = hankel_transform(f, 0.0, omegas, q);
    for (std::size_t k = 0; k < omegas.size(); ++k) {
        const double want = std::sqrt(omegas[k]) * std::exp(-0.5 * omegas[k] * omegas[k]);
        CHECK(std::abs(img.values[k] - want) < 1e-6);
    }
    // independent dense-quadrature oracle (library Bessel + naive trapezoid)
    const double om = 1.5;
    const double dense = oracles::trapezoid(
        [&](double x) {
            return std::sqrt(x * om) * std::cyl_bessel_j(0.0, x * om) * std::sqrt(x) *
                   std::exp(-0.5 * x * x);
        },
        1e-12, 12.0, 40000);
    CHECK(std::abs(dense - std::sqrt(om) * std::exp(-0.5 * om * om)) < 1e-6);
}

TEST_CASE("hankel_transform: zero data and linearity") {
    SampledFunction z;
    z.grid = linspace(0.0, 10.0, 101);
    z.values.assign(101, 0.0);
    QuadratureSpec q;
    const auto img = hankel_transform(z, 1.0, {0.3, 1.0, 4.0}, q);
    for (double v : img.values) CHECK(v == 0.0);

    const auto f = gaussian_bump(4.0, 0.8, 0.0, 10.0, 400);
    const auto g = gaussian_bump(6.0, 1.1, 0.0, 10.0, 400);
    SampledFunction combo;
    combo.grid = f.grid;
    combo.values.resize(f.size());
    const double alpha = 1.7, beta = -0.4;
    for (std::size_t i = 0; i < f.size(); ++i)
        combo.values[i] = alpha * f.values[i] + beta * g.values[i];
    const std::vector<double> om{0.7, 1.9, 3.3};
    const auto i1 = hankel_transform(f, 1.0, om, q);
    const auto i2 = hankel_transform(g, 1.0, om, q);
    const auto i3 = hankel_transform(combo, 1.0, om, q);
    for (std::size_t k = 0; k < om.size(); ++k)
        CHECK(std::abs(i3.values[k] - alpha * i1.values[k] - beta * i2.values[k]) < 1e-12);
}

TEST_CASE("weighted_laplace_integral: nu = 1/2 closed form") {
    QuadratureSpec q;
    CHECK(std::abs(weighted_laplace_integral(0.5, 1.0, 1.0, 1.0, q) -
                   0.25464790894703254) < 1e-8);
    for (double p : {0.3, 1.0, 2.5})
        for (double a : {0.7, 1.3})
            for (double b : {0.9, 2.1}) {
                const double got = weighted_laplace_integral(0.5, p, a, b, q);
                CHECK(std::abs(got - oracles::weighted_laplace_half(p, a, b)) < 1e-8);
            }
}

TEST_CASE("weighted_laplace_integral: symmetry, decay, warnings") {
    QuadratureSpec q;
    CHECK(std::abs(weighted_laplace_integral(1.3, 0.8, 1.1, 2.3, q) -
                   weighted_laplace_integral(1.3, 0.8, 2.3, 1.1, q)) < 1e-10);
    // nu = 0: decay ~ p^{-2} for a = b
    const double w20 = weighted_laplace_integral(0.0, 20.0, 1.0, 1.0, q);
    const double w40 = weighted_laplace_integral(0.0, 40.0, 1.0, 1.0, q);
    CHECK(w40 < w20);
    CHECK(std::abs(w20 / w40 - 4.0) < 0.8);
    WarningList w;
    weighted_laplace_integral(1.0, 0.01, 1.0, 1.0, q, &w);
    CHECK(!w.empty());
    CHECK_THROWS_AS(weighted_laplace_integral(-0.6, 1.0, 1.0, 1.0, q), validation_error);
}

TEST_CASE("weighted_laplace_integral: frozen regression value V1") {
    // dense-quadrature convergence study: three refinements agree to 1e-8
    QuadratureSpec q1, q2, q3;
    q2.panels = 2 * q1.panels;
    q2.nodes_per_panel = 12;
    q3.panels = 4 * q1.panels;
    q3.nodes_per_panel = 16;
    q3.tail_tolerance = 1e-12;
    const double v1 = weighted_laplace_integral(1.0, 1.0, 1.0, 2.0, q1);
    const double v2 = weighted_laplace_integral(1.0, 1.0, 1.0, 2.0, q2);
    const double v3 = weighted_laplace_integral(1.0, 1.0, 1.0, 2.0, q3);
    CHECK(std::abs(v1 - v2) < 1e-8);
    CHECK(std::abs(v2 - v3) < 1e-8);
    CHECK(std::abs(v3 - 0.06433404243654526) < 1e-8);
}

TEST_CASE("heat_spectral_integral: half-integer reduction and Weber form") {
    QuadratureSpec q;
    CHECK(std::abs(heat_spectral_integral(0.5, 1.0, 1.0, 1.0, q) -
                   (1.0 - std::exp(-1.0)) / std::sqrt(4.0 * kPi)) < 1e-9);
    CHECK(std::abs(heat_spectral_integral(0.5, 0.7, 1.2, 0.9, q) -
                   oracles::heat_kernel_half(0.7, 1.2, 0.9)) < 1e-9);
    // Weber second exponential integral via bessel_i
    const double t = 0.5, X = 1.0, Xp = 2.0, nu = 1.0;
    const double weber = std::sqrt(X * Xp) / (2.0 * t) *
                         std::exp(-(X * X + Xp * Xp) / (4.0 * t)) *
                         specfun::bessel_i(nu, X * Xp / (2.0 * t));
    CHECK(std::abs(heat_spectral_integral(nu, t, X, Xp, q) - weber) < 1e-8);
    // damping limit: monotone decay toward zero (the exact value at t = 50
    // is ~1/(8 t^2) from the small-Omega expansion)
    const double v05 = heat_spectral_integral(1.0, 0.5, 1.0, 1.0, q);
    const double v5 = heat_spectral_integral(1.0, 5.0, 1.0, 1.0, q);
    const double v50 = heat_spectral_integral(1.0, 50.0, 1.0, 1.0, q);
    CHECK(v5 < v05);
    CHECK(v50 < v5);
    CHECK(v50 < 1e-4);
}

TEST_CASE("check_hankel_properties: bump residuals and refinement") {
    QuadratureSpec q;
    const auto f1 = gaussian_bump(6.0, 1.0, 0.0, 20.0, 512);
    const auto f2 = gaussian_bump(6.0, 1.0, 0.0, 20.0, 1024);
    const auto r1 = check_hankel_properties(f1, 1.0, q);
    const auto r2 = check_hankel_properties(f2, 1.0, q);
    CHECK(r2.involution < 1e-4);
    CHECK(r2.isometry < 1e-4);
    CHECK(r2.self_adjoint < 1e-4);
    CHECK(r2.diagonalization < 1e-3);
    // halving the grid spacing reduces the second-order FD residual >= 3x
    CHECK(r1.diagonalization / r2.diagonalization >= 3.0);

    SampledFunction z;
    z.grid = linspace(0.0, 20.0, 64);
    z.values.assign(64, 0.0);
    const auto rz = check_hankel_properties(z, 1.0, q);
    CHECK(rz.involution == 0.0);
    CHECK(rz.isometry == 0.0);
    CHECK(rz.self_adjoint == 0.0);
    CHECK(rz.diagonalization == 0.0);
}

TEST_CASE("report serialization uses the fixed keys") {
    HankelPropertyReport r;
    r.involution = 0.5;
    const auto s = r.to_json();
    CHECK(s.find("\"involution\":0.5") != std::string::npos);
    CHECK(s.find("\"isometry\"") != std::string::npos);
    CHECK(s.find("\"self_adjoint\"") != std::string::npos);
    CHECK(s.find("\"diagonalization\"") != std::string::npos);
}
