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

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptkernels/hankel.hpp"
#include "ptkernels/kernels.hpp"
#include "ptkernels/pde.hpp"
#include "ptkernels/solve.hpp"
#include "ptkernels/specfun.hpp"

namespace py = pybind11;
using namespace ptk;

namespace {

SampledFunction make_sampled(const std::vector<double>& grid,
                             const std::vector<double>& values) {
    SampledFunction f;
    f.grid = grid;
    f.values = values;
    f.validate();
    return f;
}

QuadratureSpec make_quadrature(double truncation, int panels, int nodes_per_panel,
                               double tail_tolerance) {
    QuadratureSpec q;
    q.truncation = truncation;
    q.panels = panels;
    q.nodes_per_panel = nodes_per_panel;
    q.tail_tolerance = tail_tolerance;
    return q;
}

kernels::ContourSpec make_contour(const std::string& kind, int nodes, double abscissa) {
    kernels::ContourSpec c;
    c.kind = (kind == "vertical") ? kernels::ContourSpec::Kind::vertical
                                  : kernels::ContourSpec::Kind::talbot;
    c.node_count = nodes;
    c.abscissa = abscissa;
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Poisson and heat kernels of inverse-square and Poschl-Teller "
              "Schrodinger operators, with quadrature and finite-difference "
              "cross-validation.";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<convergence_error>(m, "ConvergenceError", PyExc_RuntimeError);

    // special functions
    m.def("gamma_fn", &specfun::gamma_fn, py::arg("x"));
    m.def("pochhammer", &specfun::pochhammer, py::arg("a"), py::arg("n"));
    m.def("gauss_2f1",
          [](double a, double b, double c, double z) {
              return specfun::gauss_2f1({a, b, c, z});
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
    m.def("legendre_q",
          [](double degree, int mu, double z) {
              return specfun::legendre_q({degree, mu, z});
          },
          py::arg("degree"), py::arg("mu"), py::arg("z"));
    m.def("bessel_j",
          [](double nu, double x) { return specfun::bessel_j(nu, x); },
          py::arg("nu"), py::arg("x"));
    m.def("bessel_i", &specfun::bessel_i, py::arg("nu"), py::arg("x"),
          py::arg("scaled") = false);

    // hankel
    m.def("hankel_transform",
          [](const std::vector<double>& grid, const std::vector<double>& values,
             double nu, const std::vector<double>& out_grid, int panels,
             int nodes_per_panel) {
              const auto img =
                  hankel::hankel_transform(make_sampled(grid, values), nu, out_grid,
                                           make_quadrature(40.0, panels, nodes_per_panel, 1e-9));
              return img.values;
          },
          py::arg("grid"), py::arg("values"), py::arg("nu"), py::arg("out_grid"),
          py::arg("panels") = 64, py::arg("nodes_per_panel") = 8);
    m.def("weighted_laplace_integral",
          [](double nu, double p, double a, double b, double tail_tolerance) {
              return hankel::weighted_laplace_integral(
                  nu, p, a, b, make_quadrature(40.0, 64, 8, tail_tolerance));
          },
          py::arg("nu"), py::arg("p"), py::arg("a"), py::arg("b"),
          py::arg("tail_tolerance") = 1e-9);
    m.def("heat_spectral_integral",
          [](double nu, double t, double X, double Xp) {
              return hankel::heat_spectral_integral(nu, t, X, Xp, QuadratureSpec{});
          },
          py::arg("nu"), py::arg("t"), py::arg("X"), py::arg("Xp"));
    m.def("check_hankel_properties",
          [](const std::vector<double>& grid, const std::vector<double>& values,
             double nu) {
              const auto r = hankel::check_hankel_properties(make_sampled(grid, values),
                                                             nu, QuadratureSpec{});
              py::dict d;
              d["involution"] = r.involution;
              d["isometry"] = r.isometry;
              d["self_adjoint"] = r.self_adjoint;
              d["diagonalization"] = r.diagonalization;
              return d;
          },
          py::arg("grid"), py::arg("values"), py::arg("nu"));

    // coordinate maps
    m.def("trig_map",
          [](double theta, double y) {
              const auto p = coordmap::trig_map({theta, y});
              return std::make_pair(p.X, p.Y);
          },
          py::arg("theta"), py::arg("y"));
    m.def("hyp_map",
          [](const std::string& kind, double x, double y) {
              const auto p = coordmap::hyp_map(coordmap::map_kind_from_string(kind), {x, y});
              return std::make_pair(p.X, p.Y);
          },
          py::arg("kind"), py::arg("x"), py::arg("y"));
    m.def("boundary_pullback",
          [](const std::string& kind, double coord) {
              return coordmap::boundary_pullback(coordmap::map_kind_from_string(kind),
                                                 coord);
          },
          py::arg("kind"), py::arg("coord"));
    m.def("conjugation_residual",
          [](const std::string& kind, double c, double nu, double h, int levels) {
              auto bump = [](double X, double Y) {
                  const double dx = X - 1.2, dy = Y - 0.8;
                  return std::exp(-(dx * dx + dy * dy));
              };
              const auto mk = coordmap::map_kind_from_string(kind);
              const coordmap::GridBox box =
                  (mk == coordmap::MapKind::trig)
                      ? coordmap::GridBox{0.6, 2.4, 9, 0.25, 1.2, 9}
                      : coordmap::GridBox{0.5, 2.0, 9, 0.2, 1.3, 9};
              const auto r = coordmap::conjugation_residual(mk, c, nu, bump, box, h, levels);
              py::dict d;
              d["max_residual"] = r.max_residual;
              d["l2_residual"] = r.l2_residual;
              d["empirical_order"] = r.empirical_order;
              d["orders"] = r.orders;
              d["kind"] = coordmap::to_string(r.kind);
              d["c"] = r.c;
              d["nu"] = r.nu;
              d["h"] = r.h;
              return d;
          },
          py::arg("kind"), py::arg("c"), py::arg("nu"), py::arg("h") = 1e-3,
          py::arg("levels") = 4);

    // kernels
    m.def("poisson_kernel_euclidean",
          [](double nu, double Y, double X, double Xp) {
              return kernels::poisson_kernel_euclidean(nu, {Y, X, Xp});
          },
          py::arg("nu"), py::arg("Y"), py::arg("X"), py::arg("Xp"));
    m.def("poisson_kernel_trig",
          [](double nu, double y, double theta, double theta_p) {
              return kernels::poisson_kernel_trig(nu, y, theta, theta_p);
          },
          py::arg("nu"), py::arg("y"), py::arg("theta"), py::arg("theta_p"));
    m.def("poisson_kernel_hyp",
          [](double nu, double y, double x, double x_p, const std::string& kind) {
              return kernels::poisson_kernel_hyp(nu, y, x, x_p,
                                                 coordmap::map_kind_from_string(kind));
          },
          py::arg("nu"), py::arg("y"), py::arg("x"), py::arg("x_p"),
          py::arg("kind") = "hyp_conformal");
    m.def("bromwich_invert",
          [](const std::function<std::complex<double>(std::complex<double>)>& F,
             double t, const std::string& contour, int nodes, double abscissa,
             const std::string& mode) {
              return kernels::bromwich_invert(F, t, make_contour(contour, nodes, abscissa),
                                              mode == "validation"
                                                  ? kernels::InversionMode::validation
                                                  : kernels::InversionMode::transmutation);
          },
          py::arg("F"), py::arg("t"), py::arg("contour") = "talbot",
          py::arg("nodes") = 32, py::arg("abscissa") = 14.0,
          py::arg("mode") = "validation");
    m.def("heat_kernel",
          [](const std::string& kind, double nu, double t, double interior,
             double boundary, const std::string& map_kind, const std::string& contour,
             int nodes, double abscissa) {
              kernels::HeatKind hk = kernels::HeatKind::euclidean;
              if (kind == "trig") hk = kernels::HeatKind::trig;
              else if (kind == "hyp") hk = kernels::HeatKind::hyp;
              else if (kind != "euclidean")
                  throw validation_error("unknown heat kind: " + kind);
              return kernels::heat_kernel(hk, nu, {t, interior, boundary},
                                          make_contour(contour, nodes, abscissa),
                                          coordmap::map_kind_from_string(map_kind));
          },
          py::arg("kind"), py::arg("nu"), py::arg("t"), py::arg("interior"),
          py::arg("boundary"), py::arg("map_kind") = "hyp_conformal",
          py::arg("contour") = "talbot", py::arg("nodes") = 32,
          py::arg("abscissa") = 14.0);

    // pde + solve
    m.def("fd_solve_dirichlet",
          [](const std::string& kind, double nu, double c,
             const std::vector<double>& data_grid, const std::vector<double>& data_values,
             int n1, int n2, double hi1, double hi2) {
              pde::OperatorKind op{pde::operator_tag_from_string(kind), c, nu};
              pde::Grid2D grid{0.0, hi1, n1, 0.0, hi2, n2, true};
              const auto f = pde::fd_solve_dirichlet(op, make_sampled(data_grid, data_values),
                                                     grid);
              py::dict d;
              std::vector<double> c1(n1), c2(n2 + 1);
              for (int i = 0; i < n1; ++i) c1[i] = grid.coord1(i);
              for (int j = 0; j <= n2; ++j) c2[j] = grid.coord2(j);
              d["coord1"] = c1;
              d["coord2"] = c2;
              d["values"] = f.values;
              return d;
          },
          py::arg("kind"), py::arg("nu"), py::arg("c"), py::arg("data_grid"),
          py::arg("data_values"), py::arg("n1") = 128, py::arg("n2") = 128,
          py::arg("hi1") = 20.0, py::arg("hi2") = 20.0);
    m.def("solve_dirichlet",
          [](const std::string& kind, double nu, double height,
             const std::vector<double>& data_grid, const std::vector<double>& data_values,
             const std::vector<double>& out_grid, const std::string& map_kind) {
              solve::SolveRequest r;
              r.nu = nu;
              r.height = height;
              r.data.domain = solve::domain_tag_from_string(kind);
              r.data.samples = make_sampled(data_grid, data_values);
              r.out_grid = out_grid;
              r.map_kind = coordmap::map_kind_from_string(map_kind);
              SampledFunction u;
              switch (r.data.domain) {
                  case solve::DomainTag::euclidean: u = solve::solve_euclidean(r); break;
                  case solve::DomainTag::trig: u = solve::solve_trig(r); break;
                  case solve::DomainTag::hyp: u = solve::solve_hyp(r); break;
              }
              return u.values;
          },
          py::arg("kind"), py::arg("nu"), py::arg("height"), py::arg("data_grid"),
          py::arg("data_values"), py::arg("out_grid"),
          py::arg("map_kind") = "hyp_conformal");
}
