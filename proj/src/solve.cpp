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

#include "ptkernels/solve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ptk::solve {

std::string to_string(DomainTag t) {
    switch (t) {
        case DomainTag::euclidean: return "euclidean";
        case DomainTag::trig: return "trig";
        case DomainTag::hyp: return "hyp";
    }
    return "?";
}

DomainTag domain_tag_from_string(const std::string& s) {
    if (s == "euclidean") return DomainTag::euclidean;
    if (s == "trig") return DomainTag::trig;
    if (s == "hyp") return DomainTag::hyp;
    throw validation_error("unknown domain tag: " + s);
}

void BoundaryData::validate() const {
    samples.validate();
    if (!(samples.grid.front() > 0.0))
        throw validation_error("BoundaryData: support must start inside the open domain");
    if (domain == DomainTag::trig && !(samples.grid.back() < kPi))
        throw validation_error("BoundaryData: trig support must stay inside (0, pi)");
}

QuadratureSpec solve_default_quadrature() {
    QuadratureSpec q;
    q.truncation = 40.0;
    q.panels = 800;
    q.nodes_per_panel = 8;
    q.tail_tolerance = 1e-9;
    return q;
}

void SolveRequest::validate() const {
    data.validate();
    quadrature.validate();
    if (!(height > 0.0)) throw validation_error("SolveRequest: height must be > 0");
    if (!(nu > -0.5)) throw validation_error("SolveRequest: nu must be > -1/2");
    if (out_grid.empty()) throw validation_error("SolveRequest: empty output grid");
    if (data.domain == DomainTag::hyp &&
        map_kind == coordmap::MapKind::hyp_conformal && !(height < kPi))
        throw validation_error("SolveRequest: hyp_conformal requires height < pi");
}

namespace {

// Simpson over [a, b] as one panel.
double simpson(const std::function<double(double)>& f, double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

// Composite Simpson over the data support, subdividing panels whose image
// crosses the kernel peak |img - X_img| < 4 Y_img down to image width
// ~Y_img/8 (at least the 8x refinement everywhere in the window).
double integrate_with_peak(const std::function<double(double)>& integrand,
                           const std::function<double(double)>& image, double lo,
                           double hi, int panels, double x_img, double y_img) {
    const double h = (hi - lo) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * h;
        const double b = (p + 1 == panels) ? hi : a + h;
        const double ia = image(a), ib = image(b);
        const bool near_peak =
            std::max(ia, x_img - 4.0 * y_img) <= std::min(ib, x_img + 4.0 * y_img);
        if (!near_peak) {
            total += simpson(integrand, a, b);
            continue;
        }
        int nsub = std::max(8, static_cast<int>(std::ceil(8.0 * (ib - ia) /
                                                          std::max(y_img, 1e-12))));
        nsub = std::min(nsub, 1024);
        const double hs = (b - a) / nsub;
        for (int s = 0; s < nsub; ++s)
            total += simpson(integrand, a + s * hs, a + (s + 1) * hs);
    }
    return total;
}

SampledFunction solve_generic(const SolveRequest& r, DomainTag tag,
                              WarningList* warnings) {
    r.validate();
    if (r.data.domain != tag)
        throw validation_error("solve: boundary data domain does not match the solver");
    const CubicSpline data(r.data.samples);
    const double lo = data.lo(), hi = data.hi();

    SampledFunction out;
    out.grid = r.out_grid;
    out.values.resize(r.out_grid.size());
    for (std::size_t k = 0; k < r.out_grid.size(); ++k) {
        const double xi = r.out_grid[k];
        double x_img = xi, y_img = r.height;
        std::function<double(double)> image, kernel;
        switch (tag) {
            case DomainTag::euclidean: {
                if (!(xi > 0.0))
                    throw validation_error("solve_euclidean: output coordinate must be > 0");
                x_img = xi;
                y_img = r.height;
                image = [](double c) { return c; };
                kernel = [&, xi](double c) {
                    return kernels::poisson_kernel_euclidean(
                        r.nu, {r.height, xi, c}, warnings);
                };
                break;
            }
            case DomainTag::trig: {
                const auto img = coordmap::trig_map({xi, r.height});
                x_img = img.X;
                y_img = img.Y;
                image = [](double c) { return 2.0 * std::tan(0.5 * c); };
                kernel = [&, xi](double c) {
                    return kernels::poisson_kernel_trig(r.nu, r.height, xi, c, warnings);
                };
                break;
            }
            case DomainTag::hyp: {
                const auto img = coordmap::hyp_map(r.map_kind, {xi, r.height});
                x_img = img.X;
                y_img = img.Y;
                image = [](double c) { return 2.0 * std::tanh(0.5 * c); };
                kernel = [&, xi](double c) {
                    return kernels::poisson_kernel_hyp(r.nu, r.height, xi, c,
                                                       r.map_kind, warnings);
                };
                break;
            }
        }
        auto integrand = [&](double c) { return kernel(c) * data(c); };
        out.values[k] = integrate_with_peak(integrand, image, lo, hi,
                                            r.quadrature.panels, x_img, y_img);
    }
    return out;
}

}  // namespace

SampledFunction solve_euclidean(const SolveRequest& r, WarningList* warnings) {
    return solve_generic(r, DomainTag::euclidean, warnings);
}

SampledFunction solve_trig(const SolveRequest& r, WarningList* warnings) {
    return solve_generic(r, DomainTag::trig, warnings);
}

SampledFunction solve_hyp(const SolveRequest& r, WarningList* warnings) {
    return solve_generic(r, DomainTag::hyp, warnings);
}

std::string FdComparisonReport::to_json() const {
    std::ostringstream os;
    char buf[160];
    os << "{\"kind\":\"" << kind << "\"";
    std::snprintf(buf, sizeof(buf), ",\"nu\":%.17g,\"c\":%.17g", nu, c);
    os << buf;
    if (!map_kind.empty()) os << ",\"map_kind\":\"" << map_kind << "\"";
    os << ",\"probes\":[";
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const auto& p = probes[i];
        std::snprintf(buf, sizeof(buf),
                      "%s{\"c1\":%.17g,\"c2\":%.17g,\"closed\":%.17g,\"fd\":%.17g,"
                      "\"rel_error\":%.17g}",
                      i ? "," : "", p.c1, p.c2, p.closed_form, p.fd, p.rel_error);
        os << buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "],\"max_rel_error\":%.17g,\"l2_rel_error\":%.17g,\"certified\":%s}",
                  max_rel_error, l2_rel_error, certified ? "true" : "false");
    os << buf;
    return os.str();
}

FdComparisonReport compare_with_fd(const SolveRequest& r, const pde::Grid2D& grid,
                                   const std::vector<std::pair<double, double>>& probes,
                                   WarningList* warnings) {
    r.data.validate();
    r.quadrature.validate();
    grid.validate();
    if (probes.empty()) throw validation_error("compare_with_fd: no probes");

    pde::OperatorKind op;
    switch (r.data.domain) {
        case DomainTag::euclidean: op.tag = pde::OperatorTag::inverse_square; break;
        case DomainTag::trig: op.tag = pde::OperatorTag::trig_pt; break;
        case DomainTag::hyp: op.tag = pde::OperatorTag::hyp_pt; break;
    }
    op.nu = r.nu;
    op.potential_coeff = r.potential_coeff;

    const pde::Field fd = pde::fd_solve_dirichlet(op, r.data.samples, grid, 1e-10,
                                                  warnings);

    FdComparisonReport rep;
    rep.kind = to_string(r.data.domain);
    rep.nu = r.nu;
    rep.c = r.potential_coeff;
    if (r.data.domain == DomainTag::hyp) rep.map_kind = coordmap::to_string(r.map_kind);

    double max_abs_cf = 0.0;
    std::vector<ProbeComparison> pts;
    for (const auto& [c1, c2] : probes) {
        ProbeComparison pc;
        int i = static_cast<int>(std::lround((c1 - grid.lo1) / grid.h1() - 0.5));
        int j = static_cast<int>(std::lround((c2 - grid.lo2) / grid.h2()));
        i = std::clamp(i, 0, grid.n1 - 1);
        j = std::clamp(j, 1, grid.n2 - 1);
        pc.c1 = grid.coord1(i);
        pc.c2 = grid.coord2(j);
        pc.fd = fd.at(i, j);

        SolveRequest rr = r;
        rr.height = pc.c2;
        rr.out_grid = {pc.c1};
        SampledFunction cf;
        switch (r.data.domain) {
            case DomainTag::euclidean: cf = solve_euclidean(rr, warnings); break;
            case DomainTag::trig: cf = solve_trig(rr, warnings); break;
            case DomainTag::hyp: cf = solve_hyp(rr, warnings); break;
        }
        pc.closed_form = cf.values[0];
        max_abs_cf = std::max(max_abs_cf, std::abs(pc.closed_form));
        pts.push_back(pc);
    }
    double sum2 = 0.0;
    for (auto& pc : pts) {
        const double denom = std::max(std::abs(pc.closed_form), 0.05 * max_abs_cf);
        pc.rel_error = (denom > 0.0) ? std::abs(pc.closed_form - pc.fd) / denom : 0.0;
        rep.max_rel_error = std::max(rep.max_rel_error, pc.rel_error);
        sum2 += pc.rel_error * pc.rel_error;
    }
    rep.l2_rel_error = std::sqrt(sum2 / pts.size());
    rep.certified = rep.max_rel_error <= 1e-2;
    rep.probes = std::move(pts);
    return rep;
}

}  // namespace ptk::solve
