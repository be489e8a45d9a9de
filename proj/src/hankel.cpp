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

#include "ptkernels/hankel.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ptkernels/specfun.hpp"

namespace ptk::hankel {

namespace {

constexpr int kMaxPanels = 50000;

// (u)^{1/2} J_nu(u) with the small-argument limit handled explicitly
// (for nu < -1/2 the product diverges at u = 0; the quadrature nodes
// never sit exactly at 0).
double halfpow_bessel(double nu, double u) {
    if (u < 1e-8)
        return std::pow(u, nu + 0.5) / std::pow(2.0, nu) * specfun::rgamma_fn(nu + 1.0);
    return std::sqrt(u) * specfun::bessel_j(nu, u);
}

int panels_for(double span, double freq, const QuadratureSpec& q, WarningList* w) {
    double n = std::ceil(span * std::max(freq, 1e-12) * 4.0 / kPi);
    int panels = std::max<int>(q.panels, static_cast<int>(n));
    if (panels > kMaxPanels) {
        warn(w, "hankel: oscillation scale exceeds resolution bound; result truncated");
        panels = kMaxPanels;
    }
    return panels;
}

double trapz_norm(const std::vector<double>& x, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        s += 0.5 * (x[i + 1] - x[i]) * (v[i] * v[i] + v[i + 1] * v[i + 1]);
    return std::sqrt(s);
}

double trapz_inner(const std::vector<double>& x, const std::vector<double>& a,
                   const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        s += 0.5 * (x[i + 1] - x[i]) * (a[i] * b[i] + a[i + 1] * b[i + 1]);
    return s;
}

}  // namespace

SampledFunction hankel_transform(const SampledFunction& f, double nu,
                                 const std::vector<double>& out_grid,
                                 const QuadratureSpec& q, WarningList* warnings) {
    f.validate();
    q.validate();
    if (!(nu > -1.0)) throw validation_error("hankel_transform: order must be > -1");
    const CubicSpline spline(f);
    const double lo = spline.lo(), hi = spline.hi();
    SampledFunction out;
    out.grid = out_grid;
    out.values.resize(out_grid.size());
    for (std::size_t k = 0; k < out_grid.size(); ++k) {
        const double omega = out_grid[k];
        if (omega < 0.0)
            throw validation_error("hankel_transform: output grid must be >= 0");
        const int panels = panels_for(hi - lo, omega, q, warnings);
        out.values[k] = integrate_gl(
            [&](double x) { return halfpow_bessel(nu, x * omega) * spline(x); },
            lo, hi, panels, q.nodes_per_panel);
    }
    return out;
}

double weighted_laplace_integral(double nu, double p, double a, double b,
                                 const QuadratureSpec& q, WarningList* warnings) {
    q.validate();
    if (!(nu > -0.5))
        throw validation_error("weighted_laplace_integral: order must be > -1/2");
    if (!(p > 0.0) || !(a > 0.0) || !(b > 0.0))
        throw validation_error("weighted_laplace_integral: p, a, b must be > 0");
    if (p < 0.05)
        warn(warnings, "weighted_laplace_integral: slow decay (p < 0.05), accuracy degraded");
    // Tail envelope ~ 2 exp(-p x)/(pi p sqrt(ab)).
    const double x_max =
        std::log(2.0 / (kPi * p * std::sqrt(a * b) * q.tail_tolerance)) / p;
    const int panels = panels_for(x_max, a + b, q, warnings);
    return integrate_gl(
        [&](double x) {
            return std::exp(-p * x) * specfun::bessel_j(nu, a * x) *
                   specfun::bessel_j(nu, b * x) * x;
        },
        0.0, x_max, panels, q.nodes_per_panel);
}

double heat_spectral_integral(double nu, double t, double X, double Xp,
                              const QuadratureSpec& q) {
    q.validate();
    if (!(t > 0.0)) throw validation_error("heat_spectral_integral: t must be > 0");
    if (!(X > 0.0) || !(Xp > 0.0))
        throw validation_error("heat_spectral_integral: coordinates must be > 0");
    if (!(nu > -1.0)) throw validation_error("heat_spectral_integral: order must be > -1");
    const double omega_max = std::max(8.0 / std::sqrt(t), 40.0);
    const int panels = std::max(q.panels,
        static_cast<int>(std::ceil(omega_max * (X + Xp) * 4.0 / kPi)));
    const double root = std::sqrt(X * Xp);
    return integrate_gl(
        [&](double o) {
            return root * specfun::bessel_j(nu, X * o) * specfun::bessel_j(nu, Xp * o) *
                   std::exp(-t * o * o) * o;
        },
        0.0, omega_max, std::min(panels, kMaxPanels), q.nodes_per_panel);
}

std::string HankelPropertyReport::to_json() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "{\"involution\":%.17g,\"isometry\":%.17g,\"self_adjoint\":%.17g,"
                  "\"diagonalization\":%.17g}",
                  involution, isometry, self_adjoint, diagonalization);
    return buf;
}

HankelPropertyReport check_hankel_properties(const SampledFunction& f, double nu,
                                             const QuadratureSpec& q) {
    f.validate();
    HankelPropertyReport rep;
    const double norm_f = trapz_norm(f.grid, f.values);
    if (norm_f == 0.0) return rep;

    const SampledFunction img = hankel_transform(f, nu, f.grid, q);
    const SampledFunction back = hankel_transform(img, nu, f.grid, q);

    std::vector<double> diff(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] = back.values[i] - f.values[i];
    rep.involution = trapz_norm(f.grid, diff) / norm_f;
    rep.isometry = std::abs(trapz_norm(img.grid, img.values) - norm_f) / norm_f;

    // Fixed test partner: Gaussian bump in the lower half of the span.
    SampledFunction g;
    g.grid = f.grid;
    g.values.resize(f.size());
    const double span = f.grid.back() - f.grid.front();
    const double c = f.grid.front() + 0.35 * span, w = 0.06 * span;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double u = (f.grid[i] - c) / w;
        g.values[i] = std::exp(-0.5 * u * u);
    }
    const SampledFunction img_g = hankel_transform(g, nu, g.grid, q);
    const double norm_g = trapz_norm(g.grid, g.values);
    rep.self_adjoint = std::abs(trapz_inner(f.grid, img.values, g.values) -
                                trapz_inner(f.grid, f.values, img_g.values)) /
                       (norm_f * norm_g);

    // L_nu f = f'' + (1/4 - nu^2)/X^2 f by central differences; endpoints
    // dropped (f is compactly supported away from them).
    SampledFunction lf;
    lf.grid = f.grid;
    lf.values.assign(f.size(), 0.0);
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        const double hm = f.grid[i] - f.grid[i - 1];
        const double hp = f.grid[i + 1] - f.grid[i];
        const double second = 2.0 * (hm * f.values[i + 1] + hp * f.values[i - 1] -
                                     (hm + hp) * f.values[i]) /
                              (hm * hp * (hm + hp));
        const double x = f.grid[i];
        lf.values[i] = second + (0.25 - nu * nu) / (x * x) * f.values[i];
    }
    const SampledFunction img_lf = hankel_transform(lf, nu, f.grid, q);
    std::vector<double> resid(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double o = f.grid[i];
        resid[i] = img_lf.values[i] + o * o * img.values[i];
    }
    rep.diagonalization = trapz_norm(f.grid, resid) / norm_f;
    return rep;
}

}  // namespace ptk::hankel
