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
#include "ptkernels/coordmap.hpp"

using namespace ptk;
using namespace ptk::coordmap;

namespace {
double test_bump(double X, double Y) {
    const double dx = X - 1.2, dy = Y - 0.8;
    return std::exp(-(dx * dx + dy * dy));
}
}  // namespace

TEST_CASE("trig_map: anchor points and limits") {
    const auto p = trig_map({0.5 * kPi, 0.0});
    CHECK(p.X == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(p.Y == 0.0);
    const auto q = trig_map({0.5 * kPi, 30.0});
    CHECK(std::abs(q.X) < 1e-12);
    CHECK(std::abs(q.Y - 2.0) < 1e-12);
    // boundary y = 0 lands on the half-plane boundary at 2 tan(theta/2)
    for (double th : {0.3, 1.0, 2.0, 2.8}) {
        const auto b = trig_map({th, 0.0});
        CHECK(b.Y == 0.0);
        CHECK(b.X == doctest::Approx(2.0 * std::tan(0.5 * th)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(trig_map({0.0, 1.0}), validation_error);
    CHECK_THROWS_AS(trig_map({kPi, 1.0}), validation_error);
}

TEST_CASE("hyp_map: paper and conformal variants") {
    for (double x : {0.4, 1.0, 2.5}) {
        const auto b = hyp_map(MapKind::hyp_paper, {x, 0.0});
        CHECK(b.X == doctest::Approx(2.0 * std::tanh(0.5 * x)).epsilon(1e-14));
        CHECK(b.Y == 0.0);
        const auto bc = hyp_map(MapKind::hyp_conformal, {x, 0.0});
        CHECK(bc.X == doctest::Approx(b.X).epsilon(1e-14));
        CHECK(bc.Y == 0.0);
    }
    // hyp_paper symmetry on the diagonal
    const auto d = hyp_map(MapKind::hyp_paper, {1.3, 1.3});
    CHECK(d.X == doctest::Approx(d.Y).epsilon(1e-15));
    CHECK_THROWS_AS(hyp_map(MapKind::hyp_conformal, {1.0, kPi}), validation_error);
    CHECK_THROWS_AS(hyp_map(MapKind::trig, {1.0, 0.5}), validation_error);
}

TEST_CASE("cauchy-riemann: conformal maps pass, the literal one fails") {
    CHECK(cauchy_riemann_residual(MapKind::trig, kPi / 3.0, 0.7, 1e-5) < 1e-8);
    CHECK(cauchy_riemann_residual(MapKind::hyp_conformal, 1.0, 0.5, 1e-5) < 1e-8);
    CHECK(cauchy_riemann_residual(MapKind::hyp_paper, 1.0, 0.5, 1e-5) > 0.1);
    // O(h^2) everywhere tested
    for (double u : {0.7, 1.3, 2.1})
        for (double v : {0.2, 0.9, 1.6}) {
            CHECK(cauchy_riemann_residual(MapKind::trig, u, v, 1e-4) < 1e-7);
            if (v < kPi - 0.2)
                CHECK(cauchy_riemann_residual(MapKind::hyp_conformal, u, v, 1e-4) < 1e-7);
        }
}

TEST_CASE("boundary_pullback: values and saturation") {
    const auto [x1, j1] = boundary_pullback(MapKind::trig, 0.5 * kPi);
    CHECK(x1 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(j1 == doctest::Approx(2.0).epsilon(1e-14));
    const auto [x2, j2] = boundary_pullback(MapKind::hyp_paper, 40.0);
    CHECK(std::abs(x2 - 2.0) < 1e-14);
    CHECK(j2 < 1e-15);
    const auto [x3, j3] = boundary_pullback(MapKind::trig, 1e-4);
    CHECK(x3 == doctest::Approx(1e-4).epsilon(1e-6));
    CHECK(j3 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(boundary_pullback(MapKind::trig, kPi), validation_error);
    CHECK_THROWS_AS(boundary_pullback(MapKind::hyp_paper, 0.0), validation_error);
}

TEST_CASE("boundary consistency: map at y=0 matches the pullback coordinate") {
    for (double c : {0.4, 1.1, 2.2}) {
        const auto m = trig_map({c, 0.0});
        CHECK(m.Y == 0.0);
        CHECK(m.X == doctest::Approx(boundary_pullback(MapKind::trig, c).first)
                         .epsilon(1e-14));
    }
    for (MapKind k : {MapKind::hyp_paper, MapKind::hyp_conformal})
        for (double c : {0.4, 1.1, 2.2}) {
            const auto m = hyp_map(k, {c, 0.0});
            CHECK(m.Y == 0.0);
            CHECK(m.X == doctest::Approx(boundary_pullback(k, c).first).epsilon(1e-14));
        }
}

TEST_CASE("conjugation_residual: c = 1 converges at second order") {
    const GridBox box{0.6, 2.4, 7, 0.25, 1.2, 7};
    for (double nu : {1.0, 1.5, 2.0}) {
        const auto rep = conjugation_residual(MapKind::trig, 1.0, nu, test_bump, box,
                                              1e-3, 4);
        CHECK(rep.orders.size() == 3);
        for (double o : rep.orders) CHECK(o >= 1.9);
    }
    const auto hc = conjugation_residual(MapKind::hyp_conformal, 1.0, 1.5, test_bump,
                                         {0.5, 2.0, 7, 0.2, 1.3, 7}, 1e-3, 4);
    for (double o : hc.orders) CHECK(o >= 1.9);
}

TEST_CASE("conjugation_residual: the 1/16 coefficient is falsified") {
    const GridBox box{0.6, 2.4, 7, 0.25, 1.2, 7};
    const auto good = conjugation_residual(MapKind::trig, 1.0, 1.5, test_bump, box,
                                           1e-3, 1);
    const auto bad = conjugation_residual(MapKind::trig, 1.0 / 16.0, 1.5, test_bump,
                                          box, 1e-3, 1);
    CHECK(bad.max_residual >= 10.0 * good.max_residual);
}

TEST_CASE("conjugation_residual: zero-potential degeneracy at nu = 1/2") {
    const GridBox box{0.6, 2.4, 5, 0.25, 1.2, 5};
    const auto a = conjugation_residual(MapKind::trig, 1.0, 0.5, test_bump, box, 1e-3, 1);
    const auto b = conjugation_residual(MapKind::trig, 1.0 / 16.0, 0.5, test_bump, box,
                                        1e-3, 1);
    CHECK(a.max_residual == doctest::Approx(b.max_residual).epsilon(1e-14));
}

TEST_CASE("conjugation_residual: hyp_paper is reported without certification") {
    const auto rep = conjugation_residual(MapKind::hyp_paper, 1.0, 1.5, test_bump,
                                          {0.5, 2.0, 5, 0.2, 1.3, 5}, 1e-3, 2);
    CHECK(std::isfinite(rep.max_residual));
    CHECK(rep.max_residual > 0.1);  // the literal substitution does not conjugate
}

TEST_CASE("conjugation_residual: warnings near singular lines") {
    WarningList w;
    conjugation_residual(MapKind::trig, 1.0, 1.5, test_bump, {0.003, 2.4, 5, 0.3, 1.0, 5},
                         1e-3, 1, &w);
    CHECK(!w.empty());
}

TEST_CASE("conjugation report JSON carries the fixed keys") {
    const auto rep = conjugation_residual(MapKind::trig, 1.0, 1.5, test_bump,
                                          {0.6, 2.4, 5, 0.25, 1.2, 5}, 1e-3, 2);
    const auto s = rep.to_json();
    for (const char* key : {"max_residual", "l2_residual", "empirical_order", "kind",
                            "c", "nu", "h"})
        CHECK(s.find(std::string("\"") + key + "\"") != std::string::npos);
}
