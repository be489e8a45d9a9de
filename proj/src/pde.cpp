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

#include "ptkernels/pde.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace ptk::pde {

void Grid2D::validate() const {
    if (n1 < 16 || n2 < 16) throw validation_error("Grid2D: counts must be >= 16");
    if (!(hi1 > lo1) || !(hi2 > lo2)) throw validation_error("Grid2D: empty ranges");
    if (!staggered)
        throw validation_error("Grid2D: only the staggered layout is supported");
}

std::string to_string(OperatorTag t) {
    switch (t) {
        case OperatorTag::inverse_square: return "inverse_square";
        case OperatorTag::trig_pt: return "trig_pt";
        case OperatorTag::hyp_pt: return "hyp_pt";
    }
    return "?";
}

OperatorTag operator_tag_from_string(const std::string& s) {
    if (s == "inverse_square" || s == "euclidean") return OperatorTag::inverse_square;
    if (s == "trig_pt" || s == "trig") return OperatorTag::trig_pt;
    if (s == "hyp_pt" || s == "hyp") return OperatorTag::hyp_pt;
    throw validation_error("unknown operator tag: " + s);
}

void OperatorKind::validate() const {
    if (!(potential_coeff > 0.0))
        throw validation_error("OperatorKind: potential_coeff must be > 0");
    if (!(nu > -0.5)) throw validation_error("OperatorKind: nu must be > -1/2");
}

double OperatorKind::potential(double c1) const {
    const double vc = potential_coeff * (0.25 - nu * nu);
    switch (tag) {
        case OperatorTag::inverse_square: return vc / (c1 * c1);
        case OperatorTag::trig_pt: {
            const double s = std::sin(c1);
            return vc / (s * s);
        }
        case OperatorTag::hyp_pt: {
            const double s = std::sinh(c1);
            return vc / (s * s);
        }
    }
    return 0.0;
}

double Field::sample(double c1, double c2) const {
    const double fi = (c1 - grid.lo1) / grid.h1() - 0.5;
    const double fj = (c2 - grid.lo2) / grid.h2();
    const int i0 = std::clamp(static_cast<int>(std::floor(fi)), 0, grid.n1 - 2);
    const int j0 = std::clamp(static_cast<int>(std::floor(fj)), 0, grid.n2 - 1);
    const double a = std::clamp(fi - i0, 0.0, 1.0);
    const double b = std::clamp(fj - j0, 0.0, 1.0);
    return (1.0 - a) * (1.0 - b) * at(i0, j0) + a * (1.0 - b) * at(i0 + 1, j0) +
           (1.0 - a) * b * at(i0, j0 + 1) + a * b * at(i0 + 1, j0 + 1);
}

void Field::write_csv(std::ostream& os, const std::string& json_header) const {
    os << "# " << json_header << "\n";
    char buf[96];
    for (int j = 0; j <= grid.n2; ++j) {
        for (int i = 0; i < grid.n1; ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g", grid.coord1(i),
                          grid.coord2(j), at(i, j));
            os << buf << "\n";
        }
    }
}

namespace {

// Matrix-free application of A = -(Laplacian_h + V) on the unknown rows
// j = 1..n2-1.  Antisymmetric ghosts across both coord1 edges impose
// homogeneous Dirichlet half a cell outside; the top row is zero.
struct Stencil {
    int n1, n2;
    double ih12, ih22;
    const std::vector<double>* vpot;

    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(j - 1) * n1 + i;
    }

    void apply(const std::vector<double>& u, std::vector<double>& out) const {
        for (int j = 1; j < n2; ++j) {
            for (int i = 0; i < n1; ++i) {
                const double c = u[idx(i, j)];
                const double left = (i > 0) ? u[idx(i - 1, j)] : -c;
                const double right = (i + 1 < n1) ? u[idx(i + 1, j)] : -c;
                const double down = (j > 1) ? u[idx(i, j - 1)] : 0.0;
                const double up = (j + 1 < n2) ? u[idx(i, j + 1)] : 0.0;
                const double lap = (left + right - 2.0 * c) * ih12 +
                                   (down + up - 2.0 * c) * ih22;
                out[idx(i, j)] = -(lap + (*vpot)[i] * c);
            }
        }
    }
};

}  // namespace

Field fd_solve_dirichlet(const OperatorKind& op, const SampledFunction& boundary,
                         const Grid2D& grid, double tol, WarningList* warnings,
                         int max_iterations, SolverStats* stats) {
    grid.validate();
    op.validate();
    boundary.validate();
    if (boundary.grid.front() < grid.lo1 || boundary.grid.back() > grid.hi1)
        throw validation_error("fd_solve_dirichlet: data support outside the grid");
    const double margin = 0.1 * (grid.hi1 - grid.lo1);
    if (boundary.grid.back() > grid.hi1 - margin)
        warn(warnings, "fd_solve_dirichlet: boundary support within 10% of the truncated edge");

    const int n1 = grid.n1, n2 = grid.n2;
    const double h1 = grid.h1(), h2 = grid.h2();
    std::vector<double> vpot(n1);
    for (int i = 0; i < n1; ++i) vpot[i] = op.potential(grid.coord1(i));

    const CubicSpline data(boundary);
    std::vector<double> d(n1);
    for (int i = 0; i < n1; ++i) d[i] = data(grid.coord1(i));

    const std::size_t m = static_cast<std::size_t>(n1) * (n2 - 1);
    std::vector<double> b(m, 0.0);
    for (int i = 0; i < n1; ++i) b[i] = d[i] / (h2 * h2);

    Stencil st{n1, n2, 1.0 / (h1 * h1), 1.0 / (h2 * h2), &vpot};

    // Jacobi-preconditioned CG.
    std::vector<double> diag(m);
    for (int j = 1; j < n2; ++j)
        for (int i = 0; i < n1; ++i) {
            double dg = 2.0 / (h1 * h1) + 2.0 / (h2 * h2) - vpot[i];
            if (i == 0 || i + 1 == n1) dg += 1.0 / (h1 * h1);  // ghost fold-in
            diag[st.idx(i, j)] = dg;
        }

    std::vector<double> u(m, 0.0), r(b), z(m), p(m), ap(m);
    auto dot = [](const std::vector<double>& a, const std::vector<double>& bb) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * bb[k];
        return s;
    };
    const double bnorm = std::sqrt(dot(b, b));
    if (bnorm == 0.0) {
        Field f;
        f.grid = grid;
        f.values.assign(static_cast<std::size_t>(n1) * (n2 + 1), 0.0);
        if (stats) *stats = {0, 0.0};
        return f;
    }
    for (std::size_t k = 0; k < m; ++k) z[k] = r[k] / diag[k];
    p = z;
    double rz = dot(r, z);
    int it = 0;
    for (; it < max_iterations; ++it) {
        st.apply(p, ap);
        const double pap = dot(p, ap);
        if (!(pap > 0.0))
            throw convergence_error("fd_solve_dirichlet: operator is not positive "
                                    "definite for these parameters");
        const double alpha = rz / pap;
        for (std::size_t k = 0; k < m; ++k) {
            u[k] += alpha * p[k];
            r[k] -= alpha * ap[k];
        }
        const double rnorm = std::sqrt(dot(r, r));
        if (rnorm <= tol * bnorm) break;
        for (std::size_t k = 0; k < m; ++k) z[k] = r[k] / diag[k];
        const double rz_new = dot(r, z);
        const double beta = rz_new / rz;
        rz = rz_new;
        for (std::size_t k = 0; k < m; ++k) p[k] = z[k] + beta * p[k];
    }
    if (it >= max_iterations)
        throw convergence_error("fd_solve_dirichlet: iteration cap reached");
    if (stats) *stats = {it + 1, std::sqrt(dot(r, r)) / bnorm};

    Field f;
    f.grid = grid;
    f.values.assign(static_cast<std::size_t>(n1) * (n2 + 1), 0.0);
    for (int i = 0; i < n1; ++i) f.values[i] = d[i];
    for (int j = 1; j < n2; ++j)
        for (int i = 0; i < n1; ++i)
            f.values[static_cast<std::size_t>(j) * n1 + i] = u[st.idx(i, j)];
    return f;
}

std::string PdeResidualReport::to_json() const {
    std::ostringstream os;
    char buf[64];
    auto arr = [&](const std::vector<double>& v) {
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
            os << (i ? "," : "") << buf;
        }
        os << "]";
    };
    os << "{\"steps\":";
    arr(steps);
    os << ",\"max_residuals\":";
    arr(max_residuals);
    os << ",\"l2_residuals\":";
    arr(l2_residuals);
    os << ",\"orders\":";
    arr(orders);
    std::snprintf(buf, sizeof(buf), "%.17g", empirical_order);
    os << ",\"empirical_order\":" << buf << "}";
    return os.str();
}

PdeResidualReport pde_residual(const OperatorKind& op,
                               const std::function<double(double, double)>& f,
                               const std::vector<std::pair<double, double>>& probes,
                               double h, int levels, WarningList* warnings) {
    op.validate();
    if (!(h > 0.0)) throw validation_error("pde_residual: h must be > 0");
    if (probes.empty()) throw validation_error("pde_residual: no probes");
    PdeResidualReport rep;
    for (int level = 0; level < levels; ++level) {
        const double hl = h / std::pow(2.0, level);
        double max_r = 0.0, sum2 = 0.0;
        for (const auto& [c1, c2] : probes) {
            if (level == 0) {
                const double dist =
                    (op.tag == OperatorTag::trig_pt)
                        ? std::min(c1, kPi - c1)
                        : c1;
                if (dist < 4.0 * h)
                    warn(warnings, "pde_residual: probe within 4h of a singular line");
            }
            const double f0 = f(c1, c2);
            const double r =
                (f(c1 + hl, c2) + f(c1 - hl, c2) - 2.0 * f0) / (hl * hl) +
                (f(c1, c2 + hl) + f(c1, c2 - hl) - 2.0 * f0) / (hl * hl) +
                op.potential(c1) * f0;
            max_r = std::max(max_r, std::abs(r));
            sum2 += r * r;
        }
        rep.steps.push_back(hl);
        rep.max_residuals.push_back(max_r);
        rep.l2_residuals.push_back(std::sqrt(sum2 / probes.size()));
    }
    for (std::size_t l = 0; l + 1 < rep.max_residuals.size(); ++l) {
        const double o = std::log2(rep.max_residuals[l] /
                                   std::max(rep.max_residuals[l + 1], 1e-300));
        rep.orders.push_back(o);
        rep.empirical_order = (l == 0) ? o : std::min(rep.empirical_order, o);
    }
    return rep;
}

}  // namespace ptk::pde
