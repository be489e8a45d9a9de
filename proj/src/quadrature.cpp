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

#include "ptkernels/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace ptk {

void QuadratureSpec::validate() const {
    if (!(truncation > 0.0)) throw validation_error("QuadratureSpec: truncation must be > 0");
    if (panels < 1) throw validation_error("QuadratureSpec: panels must be positive");
    if (nodes_per_panel < 2 || nodes_per_panel > 64)
        throw validation_error("QuadratureSpec: nodes_per_panel must be in [2, 64]");
    if (!(tail_tolerance > 0.0))
        throw validation_error("QuadratureSpec: tail_tolerance must be > 0");
}

namespace {

GaussLegendreRule make_rule(int n) {
    GaussLegendreRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    // Newton iteration on P_n starting from the Chebyshev estimate.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n_panels, int nodes_per_panel) {
    const GaussLegendreRule& rule = gauss_legendre(nodes_per_panel);
    const double h = (b - a) / n_panels;
    double total = 0.0;
    for (int p = 0; p < n_panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        total += 0.5 * h * acc;
    }
    return total;
}

}  // namespace ptk
