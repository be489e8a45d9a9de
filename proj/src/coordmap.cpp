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

#include "ptkernels/coordmap.hpp"

#include <cmath>
#include <cstdio>

namespace ptk::coordmap {

std::string to_string(MapKind k) {
    switch (k) {
        case MapKind::trig: return "trig";
        case MapKind::hyp_paper: return "hyp_paper";
        case MapKind::hyp_conformal: return "hyp_conformal";
    }
    return "?";
}

MapKind map_kind_from_string(const std::string& s) {
    if (s == "trig") return MapKind::trig;
    if (s == "hyp_paper" || s == "paper") return MapKind::hyp_paper;
    if (s == "hyp_conformal" || s == "conformal") return MapKind::hyp_conformal;
    throw validation_error("unknown map kind: " + s);
}

namespace {

// Unvalidated cores; the finite-difference probes step slightly outside
// the nominal domains.
HalfPlanePoint trig_raw(double theta, double y) {
    const double den = std::cos(theta) + std::cosh(y);
    return {2.0 * std::sin(theta) / den, 2.0 * std::sinh(y) / den};
}

HalfPlanePoint hyp_raw(MapKind kind, double x, double y) {
    if (kind == MapKind::hyp_paper) {
        const double den = std::cosh(x) + std::cosh(y);
        return {2.0 * std::sinh(x) / den, 2.0 * std::sinh(y) / den};
    }
    const double den = std::cosh(x) + std::cos(y);
    return {2.0 * std::sinh(x) / den, 2.0 * std::sin(y) / den};
}

HalfPlanePoint map_raw(MapKind kind, double u, double v) {
    return kind == MapKind::trig ? trig_raw(u, v) : hyp_raw(kind, u, v);
}

}  // namespace

HalfPlanePoint trig_map(const StripPoint& p) {
    if (!(p.theta > 0.0 && p.theta < kPi))
        throw validation_error("trig_map: theta must lie in (0, pi)");
    if (!(p.y >= 0.0)) throw validation_error("trig_map: y must be >= 0");
    return trig_raw(p.theta, p.y);
}

HalfPlanePoint hyp_map(MapKind kind, const QuarterPoint& p) {
    if (kind == MapKind::trig)
        throw validation_error("hyp_map: kind must be hyp_paper or hyp_conformal");
    if (!(p.x > 0.0)) throw validation_error("hyp_map: x must be > 0");
    if (!(p.y >= 0.0)) throw validation_error("hyp_map: y must be >= 0");
    if (kind == MapKind::hyp_conformal && !(p.y < kPi))
        throw validation_error("hyp_map: hyp_conformal requires y < pi");
    return hyp_raw(kind, p.x, p.y);
}

std::pair<double, double> boundary_pullback(MapKind kind, double boundary_coord) {
    if (kind == MapKind::trig) {
        if (!(boundary_coord > 0.0 && boundary_coord < kPi))
            throw validation_error("boundary_pullback: trig coordinate must lie in (0, pi)");
        const double c = std::cos(0.5 * boundary_coord);
        return {2.0 * std::tan(0.5 * boundary_coord), 1.0 / (c * c)};
    }
    if (!(boundary_coord > 0.0))
        throw validation_error("boundary_pullback: hyp coordinate must be > 0");
    const double ch = std::cosh(0.5 * boundary_coord);
    return {2.0 * std::tanh(0.5 * boundary_coord), 1.0 / (ch * ch)};
}

ComplexImage trig_map_complex(double theta, std::complex<double> y) {
    const std::complex<double> den = std::cos(theta) + std::cosh(y);
    return {2.0 * std::sin(theta) / den, 2.0 * std::sinh(y) / den};
}

ComplexImage hyp_map_complex(MapKind kind, double x, std::complex<double> y) {
    if (kind == MapKind::hyp_paper) {
        const std::complex<double> den = std::cosh(x) + std::cosh(y);
        return {2.0 * std::sinh(x) / den, 2.0 * std::sinh(y) / den};
    }
    const std::complex<double> den = std::cosh(x) + std::cos(y);
    return {2.0 * std::sinh(x) / den, 2.0 * std::sin(y) / den};
}

double cauchy_riemann_residual(MapKind kind, double u, double v, double h) {
    auto X = [&](double a, double b) { return map_raw(kind, a, b).X; };
    auto Y = [&](double a, double b) { return map_raw(kind, a, b).Y; };
    const double xu = (X(u + h, v) - X(u - h, v)) / (2.0 * h);
    const double xv = (X(u, v + h) - X(u, v - h)) / (2.0 * h);
    const double yu = (Y(u + h, v) - Y(u - h, v)) / (2.0 * h);
    const double yv = (Y(u, v + h) - Y(u, v - h)) / (2.0 * h);
    return std::max(std::abs(xu - yv), std::abs(xv + yu));
}

std::string ConjugationReport::to_json() const {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "{\"max_residual\":%.17g,\"l2_residual\":%.17g,"
                  "\"empirical_order\":%.17g,\"kind\":\"%s\",\"c\":%.17g,"
                  "\"nu\":%.17g,\"h\":%.17g}",
                  max_residual, l2_residual, empirical_order,
                  to_string(kind).c_str(), c, nu, h);
    return buf;
}

ConjugationReport conjugation_residual(MapKind kind, double c, double nu,
                                       const std::function<double(double, double)>& F,
                                       const GridBox& grid, double h, int levels,
                                       WarningList* warnings) {
    if (!(h > 0.0)) throw validation_error("conjugation_residual: h must be > 0");
    if (levels < 1) throw validation_error("conjugation_residual: need >= 1 level");
    if (grid.n1 < 2 || grid.n2 < 2)
        throw validation_error("conjugation_residual: grid too small");
    const double h_max = h * std::pow(2.0, levels - 1);
    if (kind == MapKind::trig && (grid.lo1 < 4.0 * h_max || grid.hi1 > kPi - 4.0 * h_max))
        warn(warnings, "conjugation_residual: grid touches the singular lines theta in {0,pi}");
    if (kind != MapKind::trig && grid.lo1 < 4.0 * h_max)
        warn(warnings, "conjugation_residual: grid touches the singular line x = 0");
    if (kind == MapKind::hyp_conformal && grid.hi2 + h_max >= kPi)
        throw validation_error("conjugation_residual: hyp_conformal requires y + h < pi");

    const double vcoef = 0.25 - nu * nu;
    auto factor = [&](double u, double v) {
        double den;
        switch (kind) {
            case MapKind::trig: den = std::cos(u) + std::cosh(v); break;
            case MapKind::hyp_paper: den = std::cosh(u) + std::cosh(v); break;
            default: den = std::cosh(u) + std::cos(v); break;
        }
        return 0.25 * den * den;
    };
    auto model_sin2 = [&](double u) {
        const double s = (kind == MapKind::trig) ? std::sin(u) : std::sinh(u);
        return s * s;
    };
    auto G = [&](double u, double v) {
        const HalfPlanePoint p = map_raw(kind, u, v);
        return F(p.X, p.Y);
    };

    ConjugationReport rep;
    rep.kind = kind;
    rep.c = c;
    rep.nu = nu;
    rep.h = h;
    for (int level = 0; level < levels; ++level) {
        const double hl = h * std::pow(2.0, levels - 1 - level);
        double max_r = 0.0, sum2 = 0.0;
        for (int i = 0; i < grid.n1; ++i) {
            const double u = grid.lo1 + (grid.hi1 - grid.lo1) * i / (grid.n1 - 1.0);
            for (int j = 0; j < grid.n2; ++j) {
                const double v = grid.lo2 + (grid.hi2 - grid.lo2) * j / (grid.n2 - 1.0);
                const HalfPlanePoint p = map_raw(kind, u, v);
                const double f0 = F(p.X, p.Y);
                const double lhs =
                    (F(p.X + hl, p.Y) + F(p.X - hl, p.Y) - 2.0 * f0) / (hl * hl) +
                    (F(p.X, p.Y + hl) + F(p.X, p.Y - hl) - 2.0 * f0) / (hl * hl) +
                    vcoef / (p.X * p.X) * f0;
                const double g0 = G(u, v);
                const double strip =
                    (G(u + hl, v) + G(u - hl, v) - 2.0 * g0) / (hl * hl) +
                    (G(u, v + hl) + G(u, v - hl) - 2.0 * g0) / (hl * hl) +
                    c * vcoef / model_sin2(u) * g0;
                const double r = lhs - factor(u, v) * strip;
                max_r = std::max(max_r, std::abs(r));
                sum2 += r * r;
            }
        }
        rep.max_residuals.push_back(max_r);
        if (level == levels - 1) {
            rep.max_residual = max_r;
            rep.l2_residual = std::sqrt(sum2 / (grid.n1 * grid.n2));
        }
    }
    rep.empirical_order = 0.0;
    for (std::size_t l = 0; l + 1 < rep.max_residuals.size(); ++l) {
        const double o = std::log2(rep.max_residuals[l] /
                                   std::max(rep.max_residuals[l + 1], 1e-300));
        rep.orders.push_back(o);
        rep.empirical_order = (l == 0) ? o : std::min(rep.empirical_order, o);
    }
    return rep;
}

}  // namespace ptk::coordmap
